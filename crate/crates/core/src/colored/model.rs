//! Unitary fusion-path model of `SU(2)` at level `k = r - 2`.
//!
//! A basis vector of `V^{j_1} ⊗ … ⊗ V^{j_n}` is a left-associated fusion
//! path `x_1 = j_1, x_2, …, x_n` (each `x_{i+1}` a channel of
//! `x_i ⊗ j_{i+1}`) together with a magnetic index `m` of the total spin
//! `x_n`. Braiding acts on the path and leaves `m` alone. Without
//! truncation the dimension is `∏ (2 j_i + 1)`. All spins are stored
//! doubled.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::qnum::{admissible, check_root, q_pow, qfactorials, qint, ColorLabel};
use crate::error::{Error, Result};

/// `(e_in, e_out, amplitude)` entry of a local crossing block.
type Recoupling = (u32, u32, Complex64);

/// Default bound on the dimension of dense operators.
pub const DENSE_LIMIT: usize = 4096;

/// `R^{ab}_c = (-1)^{a+b-c} q^{-(c(c+1) - a(a+1) - b(b+1))/2}`, the
/// eigenvalue of a positive half twist on the channel `c`.
pub fn r_eigenvalue(a: u32, b: u32, c: u32, r: u32) -> Complex64 {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let sign = if ((a + b - c) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let casimir = c * (c + 2) - a * (a + 2) - b * (b + 2);
    sign * q_pow(r, -(casimir as f64) / 8.0)
}

/// q-6j symbol `{j1 j2 j3; j4 j5 j6}` by the Racah sum.
pub fn six_j(j: [u32; 6], r: u32) -> f64 {
    let [j1, j2, j3, j4, j5, j6] = j.map(|x| x as i64);
    let alpha = [(j1 + j2 + j3) / 2, (j1 + j5 + j6) / 2, (j4 + j2 + j6) / 2, (j4 + j5 + j3) / 2];
    let beta = [(j1 + j2 + j4 + j5) / 2, (j2 + j3 + j5 + j6) / 2, (j3 + j1 + j6 + j4) / 2];
    let fact = qfactorials(*beta.iter().max().unwrap() as usize + 2, r);
    let f = |n: i64| fact[n as usize];
    let delta = |x: i64, y: i64, z: i64| {
        (f((x + y - z) / 2) * f((x - y + z) / 2) * f((-x + y + z) / 2) / f((x + y + z) / 2 + 1)).sqrt()
    };
    let pre = delta(j1, j2, j3) * delta(j1, j5, j6) * delta(j4, j2, j6) * delta(j4, j5, j3);
    let lo = *alpha.iter().max().unwrap();
    let hi = *beta.iter().min().unwrap();
    let mut sum = 0.0;
    for z in lo..=hi {
        let mut den = 1.0;
        for a in alpha {
            den *= f(z - a);
        }
        for b in beta {
            den *= f(b - z);
        }
        let s = if z % 2 == 0 { 1.0 } else { -1.0 };
        sum += s * f(z + 1) / den;
    }
    pre * sum
}

/// `F^{abc}_d[e, f]`: `|(ab)_e c; d> = Σ_f F[e, f] |a(bc)_f; d>`.
pub fn f_symbol(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32, r: u32) -> f64 {
    let sign = if ((a + b + c + d) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * (qint(e as i64 + 1, r) * qint(f as i64 + 1, r)).sqrt() * six_j([a, b, e, c, d, f], r)
}

/// Channels `c` of `a ⊗ b` allowed at level `r - 2`.
pub(crate) fn channels(a: u32, b: u32, r: u32) -> Vec<u32> {
    let lo = a.abs_diff(b);
    (lo..=a + b).step_by(2).filter(|&c| admissible(a, b, c, r)).collect()
}

/// F as a dense matrix over the admissible `(e, f)` pairs.
pub fn f_matrix(a: u32, b: u32, c: u32, d: u32, r: u32) -> (Vec<u32>, Vec<u32>, Vec<Vec<f64>>) {
    let es: Vec<u32> = channels(a, b, r).into_iter().filter(|&e| admissible(e, c, d, r)).collect();
    let fs: Vec<u32> = channels(b, c, r).into_iter().filter(|&f| admissible(a, f, d, r)).collect();
    let m = es.iter().map(|&e| fs.iter().map(|&f| f_symbol(a, b, c, d, e, f, r)).collect()).collect();
    (es, fs, m)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathState {
    pub path: Vec<u32>,
    pub twice_m: i32,
}

/// Ordered tensor product of coloured strands, in the fusion-path basis.
#[derive(Clone, Debug)]
pub struct ColoredSpace {
    factors: Vec<ColorLabel>,
    r: u32,
    states: Vec<PathState>,
    index: HashMap<PathState, usize>,
}

impl PartialEq for ColoredSpace {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors && self.r == other.r
    }
}

impl ColoredSpace {
    pub fn new(factors: Vec<ColorLabel>, r: u32) -> Result<Self> {
        Self::with_limit(factors, r, DENSE_LIMIT)
    }

    pub fn with_limit(factors: Vec<ColorLabel>, r: u32, limit: usize) -> Result<Self> {
        check_root(r)?;
        if factors.is_empty() {
            return Err(Error::InvalidParameter("a coloured space needs a factor".into()));
        }
        for c in &factors {
            // the unitary model carries spins up to k/2
            if c.twice_j > r - 2 {
                return Err(Error::InadmissibleColor { twice_j: c.twice_j, r });
            }
        }
        let mut paths: Vec<Vec<u32>> = vec![vec![factors[0].twice_j]];
        for c in &factors[1..] {
            let mut next = Vec::new();
            for p in &paths {
                for x in channels(*p.last().unwrap(), c.twice_j, r) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
            paths = next;
            if paths.len() > limit {
                return Err(Error::SizeLimit(format!("coloured space exceeds {limit} states")));
            }
        }
        let mut states = Vec::new();
        for path in paths {
            let top = *path.last().unwrap() as i32;
            for twice_m in (-top..=top).step_by(2) {
                states.push(PathState { path: path.clone(), twice_m });
            }
        }
        if states.len() > limit {
            return Err(Error::SizeLimit(format!("coloured space has {} states, limit {limit}", states.len())));
        }
        let index = states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(Self { factors, r, states, index })
    }

    pub fn factors(&self) -> &[ColorLabel] {
        &self.factors
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    /// `∏ (2 j_i + 1)`, the dimension before truncation.
    pub fn product_dimension(&self) -> usize {
        self.factors.iter().map(|c| c.dimension()).product()
    }

    pub fn states(&self) -> &[PathState] {
        &self.states
    }

    pub fn position(&self, s: &PathState) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Pairs `(1,2), (3,4), …` each fused to spin 0; total spin 0.
    pub fn cup_state(&self) -> Option<usize> {
        if !self.factors.len().is_multiple_of(2) {
            return None;
        }
        let mut path = Vec::with_capacity(self.factors.len());
        for pair in self.factors.chunks(2) {
            if pair[0] != pair[1] {
                return None;
            }
            path.push(pair[0].twice_j);
            path.push(0);
        }
        self.position(&PathState { path, twice_m: 0 })
    }

    /// The same space with factors `i, i+1` (1-based `i`) exchanged.
    pub fn swapped(&self, i: usize) -> Result<Self> {
        let mut f = self.factors.clone();
        f.swap(i - 1, i);
        Self::new(f, self.r)
    }
}

/// One braid generator acting on a coloured space, stored by columns.
#[derive(Clone, Debug)]
pub struct CrossingOperator {
    pub generator: usize,
    pub positive: bool,
    pub domain: ColoredSpace,
    pub codomain: ColoredSpace,
    /// `columns[k]` lists `(row, amplitude)` for the image of basis `k`
    pub columns: Vec<Vec<(usize, Complex64)>>,
}

impl CrossingOperator {
    /// `s_i^{±1}` (1-based `i`) on `domain`.
    pub fn new(domain: &ColoredSpace, i: usize, positive: bool) -> Result<Self> {
        let n = domain.factors.len();
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { generator: i, index: n });
        }
        let r = domain.r;
        let codomain = domain.swapped(i)?;
        let (j1, j2) = (domain.factors[i - 1].twice_j, domain.factors[i].twice_j);
        let mut cache: HashMap<(u32, u32), Vec<Recoupling>> = HashMap::new();
        let mut columns = Vec::with_capacity(domain.dimension());
        for s in &domain.states {
            // positions i-1, i, i+1 of the path (0-based i-1, i)
            let a = if i >= 2 { s.path[i - 2] } else { 0 };
            let d = s.path[i];
            let e = s.path[i - 1];
            let block = cache.entry((a, d)).or_insert_with(|| local_block(a, j1, j2, d, r, positive));
            let mut col = Vec::new();
            for &(e_in, e_out, amp) in block.iter() {
                if e_in != e || amp.norm() == 0.0 {
                    continue;
                }
                let mut path = s.path.clone();
                path[i - 1] = e_out;
                let row =
                    codomain.position(&PathState { path, twice_m: s.twice_m }).expect("braided path is admissible");
                col.push((row, amp));
            }
            columns.push(col);
        }
        Ok(Self { generator: i, positive, domain: domain.clone(), codomain, columns })
    }

    pub fn apply(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); self.codomain.dimension()];
        for (k, col) in self.columns.iter().enumerate() {
            let x = psi[k];
            if x.norm_sqr() == 0.0 {
                continue;
            }
            for &(row, amp) in col {
                out[row] += amp * x;
            }
        }
        out
    }
}

/// Matrix elements `(e, e', amplitude)` of the exchange of `j1, j2`
/// between `a` and `d`: `Σ_f F^{a j1 j2}_d[e,f] R_f (F^{a j2 j1}_d)^T[f,e']`.
fn local_block(a: u32, j1: u32, j2: u32, d: u32, r: u32, positive: bool) -> Vec<Recoupling> {
    let (es, fs, f1) = f_matrix(a, j1, j2, d, r);
    let (es2, fs2, f2) = f_matrix(a, j2, j1, d, r);
    let mut out = Vec::new();
    for (x, &e) in es.iter().enumerate() {
        for (y, &e2) in es2.iter().enumerate() {
            let mut amp = Complex64::default();
            for (z, &f) in fs.iter().enumerate() {
                let Some(w) = fs2.iter().position(|&g| g == f) else { continue };
                let lam = r_eigenvalue(j1, j2, f, r);
                let lam = if positive { lam } else { lam.conj() };
                amp += f1[x][z] * lam * f2[y][w];
            }
            out.push((e, e2, amp));
        }
    }
    out
}
