//! Simulated Hadamard-test approximation of plat invariants.
//!
//! Each crossing is one controlled application of its elementary braiding
//! operator to a dense state vector; the ancilla is measured by sampling
//! from its exact Born probabilities.

mod estimate;
mod hadamard;
mod state;

pub use estimate::{approx_jones, estimate_markov_trace, TraceEstimate, TRACTABLE_ROOTS};
pub use hadamard::{hadamard_test_sample, plan_samples, CircuitRun, HadamardCircuit, Part, MAX_SAMPLES, RNG_NAME};
pub use state::{apply_crossing, apply_unitary, StateVector};
