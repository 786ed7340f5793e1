//! Hadamard test on a simulated ancilla + register, and the sample planner.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::state::{check_unitary, matvec, StateVector};
use crate::braid::BraidWord;
use crate::colored::{plat_crossings, ColorLabel, ColoredSpace, CrossingOperator};
use crate::error::{Error, Result};

/// Identifier of the sampling generator, reported with every estimate.
pub const RNG_NAME: &str = "ChaCha8";

/// Largest sample count the planner hands out per quadrature.
pub const MAX_SAMPLES: u64 = 1 << 40;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Real,
    Imag,
}

impl Part {
    fn stream(self) -> u64 {
        match self {
            Part::Real => 0,
            Part::Imag => 1,
        }
    }
}

/// Ancilla qubit tensored with a register, stored as the two control
/// branches. Every controlled operation is counted.
struct ControlledRegister {
    idle: Vec<Complex64>,
    active: Vec<Complex64>,
    steps: usize,
}

impl ControlledRegister {
    /// Ancilla in `|+>`.
    fn prepare(psi: &[Complex64]) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let branch: Vec<Complex64> = psi.iter().map(|x| x * h).collect();
        Self { idle: branch.clone(), active: branch, steps: 0 }
    }

    fn controlled(&mut self, f: impl FnOnce(&[Complex64]) -> Vec<Complex64>) {
        self.active = f(&self.active);
        self.steps += 1;
    }

    /// Basis relabelling on the active branch; not a crossing.
    fn relabel(&mut self, perm: &[usize]) {
        let mut out = vec![Complex64::default(); self.active.len()];
        for (from, &to) in perm.iter().enumerate() {
            out[to] = self.active[from];
        }
        self.active = out;
    }

    /// `S†` on the ancilla for the imaginary part, then `H`; returns the
    /// probabilities of reading 0 and 1.
    fn finish(mut self, part: Part) -> (f64, f64) {
        if part == Part::Imag {
            for x in &mut self.active {
                *x *= Complex64::new(0.0, -1.0);
            }
        }
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let (mut p0, mut p1) = (0.0, 0.0);
        for (a, b) in self.idle.iter().zip(&self.active) {
            p0 += ((a + b) * h).norm_sqr();
            p1 += ((a - b) * h).norm_sqr();
        }
        (p0, p1)
    }
}

/// One Born-rule readout: `+1` for ancilla 0.
fn draw(p0: f64, rng: &mut ChaCha8Rng) -> i8 {
    if rng.gen::<f64>() < p0 {
        1
    } else {
        -1
    }
}

/// Sample generator for one quadrature; independent streams per part.
pub(crate) fn quadrature_rng(seed: u64, part: Part) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(part.stream());
    rng
}

/// A single `±1` sample whose mean is `Re <psi|U|psi>` (or `Im`).
pub fn hadamard_test_sample(
    u: &crate::colored::BraidingOperator,
    psi: &StateVector,
    part: Part,
    seed: u64,
) -> Result<i8> {
    check_unitary(u, psi.dimension())?;
    let mut reg = ControlledRegister::prepare(psi.amplitudes());
    reg.controlled(|x| matvec(u, x));
    let (p0, _) = reg.finish(part);
    Ok(draw(p0, &mut quadrature_rng(seed, part)))
}

/// `ceil(2 ln(4 / (1 - confidence)) / delta²)` samples per quadrature.
pub fn plan_samples(delta: f64, confidence: f64) -> Result<u64> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(Error::InvalidParameter(format!("delta = {delta} must be positive")));
    }
    if !(confidence > 0.5 && confidence < 1.0) {
        return Err(Error::InvalidParameter(format!("confidence = {confidence} must lie strictly between 1/2 and 1")));
    }
    let n = (2.0 * (4.0 / (1.0 - confidence)).ln() / (delta * delta)).ceil();
    if !n.is_finite() || n > MAX_SAMPLES as f64 {
        return Err(Error::SizeLimit(format!("{n:e} samples per quadrature")));
    }
    Ok(n as u64)
}

/// Outcome of one simulated interferometer run.
#[derive(Copy, Clone, Debug)]
pub struct CircuitRun {
    /// probability of reading the ancilla as 0
    pub p0: f64,
    /// total norm of the final ancilla + register state
    pub norm: f64,
    /// controlled crossing operators applied
    pub steps: usize,
}

/// The controlled plat braid `B`, prepared on the top cup state.
///
/// When the colours at the bottom are a permutation of those at the top,
/// a basis relabelling sends the bottom cup state to the top one, so the
/// measured overlap is always `<cup_bottom| B |cup_top>`.
#[derive(Clone, Debug)]
pub struct HadamardCircuit {
    start: ColoredSpace,
    top: usize,
    ops: Vec<CrossingOperator>,
    closing: Option<Vec<usize>>,
}

impl HadamardCircuit {
    pub fn new(w: &BraidWord, strand_colors: &[ColorLabel], r: u32) -> Result<Self> {
        let (start, ops) = plat_crossings(w, strand_colors, r)?;
        let top = start.cup_state().expect("paired colours give a cup state");
        let end = ops.last().map_or(&start, |op| &op.codomain);
        let closing = if end.factors() == start.factors() {
            None
        } else {
            let bottom = end.cup_state().expect("bottom colours are paired");
            Some(closing_permutation(end.dimension(), bottom, top))
        };
        Ok(Self { start, top, ops, closing })
    }

    pub fn dimension(&self) -> usize {
        self.start.dimension()
    }

    pub fn crossings(&self) -> usize {
        self.ops.len()
    }

    pub fn run(&self, part: Part) -> CircuitRun {
        let mut psi = vec![Complex64::default(); self.dimension()];
        psi[self.top] = Complex64::new(1.0, 0.0);
        let mut reg = ControlledRegister::prepare(&psi);
        for op in &self.ops {
            reg.controlled(|x| op.apply(x));
        }
        if let Some(perm) = &self.closing {
            reg.relabel(perm);
        }
        let steps = reg.steps;
        let (p0, p1) = reg.finish(part);
        CircuitRun { p0: p0.clamp(0.0, 1.0), norm: (p0 + p1).sqrt(), steps }
    }

    /// Mean of `samples` readouts for one quadrature.
    pub fn sample_mean(&self, part: Part, samples: u64, seed: u64) -> (f64, CircuitRun) {
        let run = self.run(part);
        let mut rng = quadrature_rng(seed, part);
        let mut total: i64 = 0;
        for _ in 0..samples {
            total += draw(run.p0, &mut rng) as i64;
        }
        (total as f64 / samples as f64, run)
    }
}

/// A permutation of `0..n` sending `from` to `to`, identity elsewhere
/// where possible.
fn closing_permutation(n: usize, from: usize, to: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(from, to);
    perm
}
