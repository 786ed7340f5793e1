//! Additive estimates of plat invariants from Hadamard-test statistics.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::hadamard::{plan_samples, HadamardCircuit, Part, RNG_NAME};
use crate::braid::BraidWord;
use crate::colored::{cap_weight, check_root, colored_invariant, plat_strand_colors, spin_half_prefactor, ColorLabel};
use crate::diagram::closure_plat;
use crate::error::Result;
use crate::jones::{bracket_to_jones, kauffman_bracket};

/// Roots at which the Jones polynomial is classically easy to evaluate.
pub const TRACTABLE_ROOTS: [u32; 4] = [2, 3, 4, 6];

/// Result of an additive approximation run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEstimate {
    #[serde(rename = "Z_re")]
    pub z_re: f64,
    #[serde(rename = "Z_im")]
    pub z_im: f64,
    pub delta: f64,
    pub confidence: f64,
    /// samples per quadrature
    pub samples: u64,
    pub seed: u64,
    pub r: u32,
    pub exact_available: bool,
    pub exact_re: Option<f64>,
    pub exact_im: Option<f64>,
    /// `|Z| / |<psi|B|psi>|`: the register overlap is estimated to
    /// within `delta / scale`
    pub scale: f64,
    pub tractable: bool,
    pub rng: String,
    /// controlled crossing operators per circuit
    pub steps: usize,
    pub circuits: usize,
}

impl TraceEstimate {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.z_re, self.z_im)
    }

    pub fn exact(&self) -> Option<Complex64> {
        Some(Complex64::new(self.exact_re?, self.exact_im?))
    }

    /// `|Z - exact|` when the exact value is known.
    pub fn error(&self) -> Option<f64> {
        self.exact().map(|e| (self.value() - e).norm())
    }

    pub fn within_delta(&self) -> Option<bool> {
        self.error().map(|e| e <= self.delta)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("estimate serializes")
    }
}

#[allow(clippy::too_many_arguments)]
fn estimate(
    w: &BraidWord,
    strand_colors: &[ColorLabel],
    r: u32,
    prefactor: Complex64,
    exact: Option<Complex64>,
    delta: f64,
    confidence: f64,
    seed: u64,
) -> Result<TraceEstimate> {
    let scale = prefactor.norm();
    let samples = plan_samples(delta / scale, confidence)?;
    let circuit = HadamardCircuit::new(w, strand_colors, r)?;
    let (re, run_re) = circuit.sample_mean(Part::Real, samples, seed);
    let (im, run_im) = circuit.sample_mean(Part::Imag, samples, seed);
    debug_assert_eq!(run_re.steps, run_im.steps);
    let z = prefactor * Complex64::new(re, im);
    Ok(TraceEstimate {
        z_re: z.re,
        z_im: z.im,
        delta,
        confidence,
        samples,
        seed,
        r,
        exact_available: exact.is_some(),
        exact_re: exact.map(|e| e.re),
        exact_im: exact.map(|e| e.im),
        scale,
        tractable: TRACTABLE_ROOTS.contains(&r),
        rng: RNG_NAME.to_string(),
        steps: run_re.steps,
        circuits: 2,
    })
}

/// Estimate of `colored_invariant(w, colors, r)` (one colour per
/// component), the cap weight times the cup-state overlap.
pub fn estimate_markov_trace(
    w: &BraidWord,
    colors: &[ColorLabel],
    r: u32,
    delta: f64,
    confidence: f64,
    seed: u64,
) -> Result<TraceEstimate> {
    check_root(r)?;
    plan_samples(delta, confidence)?;
    let exact = colored_invariant(w, colors, r)?;
    let strand = plat_strand_colors(w, colors)?;
    let weight = cap_weight(&strand, r);
    estimate(w, &strand, r, Complex64::new(weight, 0.0), Some(exact), delta, confidence, seed)
}

/// Estimate of the Jones polynomial of the plat closure of `w` at `t = q`.
/// The exact value is attached when the state sum is within its limit.
pub fn approx_jones(w: &BraidWord, r: u32, delta: f64, confidence: f64, seed: u64) -> Result<TraceEstimate> {
    check_root(r)?;
    plan_samples(delta, confidence)?;
    let (m, factor) = spin_half_prefactor(w, r)?;
    let strand = plat_strand_colors(w, &vec![ColorLabel::half(); m])?;
    // same preconditions as the exact coloured invariant
    colored_invariant(w, &vec![ColorLabel::half(); m], r)?;
    let weight = cap_weight(&strand, r);
    let d = closure_plat(w)?;
    let exact =
        kauffman_bracket(&d).and_then(|b| bracket_to_jones(&b, d.writhe())).and_then(|v| v.evaluate_at_root(r)).ok();
    estimate(w, &strand, r, factor * weight, exact, delta, confidence, seed)
}
