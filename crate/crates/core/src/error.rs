use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator s{generator} out of range for braid index {index}")]
    GeneratorOutOfRange { generator: usize, index: usize },

    #[error("braid index mismatch: {0} vs {1}")]
    IndexMismatch(usize, usize),

    #[error("invalid braid index {0}")]
    InvalidIndex(usize),

    #[error("plat closure needs an even braid index, got {0}")]
    OddIndex(usize),

    #[error("{crossings} crossings exceed the state-sum limit of {limit}")]
    CrossingLimit { crossings: usize, limit: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exponent {num}/4 times {factor}/4 is not a multiple of 1/4")]
    NonRepresentableExponent { num: i64, factor: i64 },

    #[error("malformed diagram: {}", .0.join("; "))]
    MalformedDiagram(Vec<String>),

    #[error("site does not admit the move: {0}")]
    SiteNotAdmissible(String),

    #[error("color {twice_j}/2 is not admissible at r = {r}")]
    InadmissibleColor { twice_j: u32, r: u32 },

    #[error("coloring incompatible with the plat closure: {0}")]
    ColorMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error reports a resource bound rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::CrossingLimit { .. } | Error::SizeLimit(_))
    }

    /// Whether the error stems from malformed textual input.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::GeneratorOutOfRange { .. })
    }
}
