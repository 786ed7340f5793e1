//! Coloured `SU(2)_q` invariants of plat closures at `q = exp(2πi/r)`.

mod braiding;
mod cg;
mod invariant;
mod model;
mod qnum;

pub use braiding::{braiding_operator_for_plat, plat_crossings, r_matrix, thread_colors, BraidingOperator};
pub use cg::{q_clebsch_gordan, CgTable};
pub use invariant::{
    bottom_colors, colored_invariant, framing_factor, normalize_ambient, plat_strand_colors, spin_half_jones,
};
pub use model::{f_matrix, f_symbol, r_eigenvalue, six_j, ColoredSpace, CrossingOperator, PathState, DENSE_LIMIT};
pub use qnum::{fusion_range, q_integer, q_pow, ColorLabel};

pub(crate) use invariant::{cap_weight, spin_half_prefactor};
pub(crate) use qnum::check_root;
