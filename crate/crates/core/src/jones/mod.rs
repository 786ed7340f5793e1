//! Exact Jones polynomial: Kauffman state sum and Temperley–Lieb trace.

mod bracket;
mod tl;

pub use bracket::{
    bracket_to_jones, crossing_limit, jones_polynomial, kauffman_bracket, kauffman_bracket_with_limit, loop_value,
    CROSSING_LIMIT_ENV, DEFAULT_CROSSING_LIMIT,
};
pub use tl::{
    markov_trace_bracket, markov_trace_jones, tl_generator_images, TLDiagramBasis, TLElement, TLMatrixRep,
    MAX_TL_STRANDS,
};
