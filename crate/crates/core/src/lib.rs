//! Braid words, link diagrams and quantum link invariants.
//!
//! The crate computes the Jones polynomial of braid closures exactly (by a
//! Kauffman state sum and, independently, by a Temperley–Lieb trace),
//! SU(2)_q colored invariants of plat closures from unitary braiding
//! operators, and a simulated Hadamard-test estimate of those invariants.

pub mod braid;
pub mod colored;
pub mod diagram;
pub mod error;
pub mod examples;
pub mod invariance;
pub mod jones;
pub mod laurent;
pub mod normal;
pub mod qsim;

pub use braid::{BraidWord, Letter, Permutation};
pub use colored::{
    braiding_operator_for_plat, colored_invariant, r_matrix, BraidingOperator, ColorLabel, ColoredSpace,
};
pub use diagram::{closure_plat, closure_trace, LinkDiagram, Move, MoveKind};
pub use error::{Error, Result};
pub use jones::{jones_polynomial, kauffman_bracket, markov_trace_jones};
pub use laurent::LaurentPoly;
pub use normal::{is_trivial, normal_form, words_equal, NormalForm};
pub use qsim::{approx_jones, estimate_markov_trace, TraceEstimate};
