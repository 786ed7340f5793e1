//! Clebsch–Gordan coefficients of `U_q(sl2)` at `q = exp(2πi/r)`.
//!
//! Coproduct `Δ(E) = E⊗K + K^-1⊗E`, `Δ(F) = F⊗K + K^-1⊗F` with
//! `K|m> = q^{m/2}|m>`. On the unit circle the coefficients are complex
//! and the orthonormality relations are bilinear (no conjugation).

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::qnum::{fusion_range, q_pow, qint, ColorLabel};
use crate::error::{Error, Result};

/// Coefficients `<j1 m1; j2 m2 | j m>` keyed by `(2 m1, 2 m2)`.
#[derive(Clone, Debug)]
pub struct CgTable {
    pub j1: ColorLabel,
    pub j2: ColorLabel,
    pub j: ColorLabel,
    pub entries: BTreeMap<(i32, i32), Complex64>,
}

impl CgTable {
    pub fn get(&self, twice_m1: i32, twice_m2: i32) -> Complex64 {
        self.entries.get(&(twice_m1, twice_m2)).copied().unwrap_or_default()
    }

    /// Column for a fixed `2m`, as `(2 m1, coefficient)`.
    pub fn column(&self, twice_m: i32) -> Vec<(i32, Complex64)> {
        self.entries.iter().filter(|((m1, m2), _)| m1 + m2 == twice_m).map(|(&(m1, _), &c)| (m1, c)).collect()
    }
}

/// `sqrt([j - m][j + m + 1])`, the raising matrix element (twice-j args).
fn raise(j: i32, m: i32, r: u32) -> f64 {
    (qint(((j - m) / 2) as i64, r) * qint(((j + m) / 2 + 1) as i64, r)).sqrt()
}

/// `sqrt([j + m][j - m + 1])`, the lowering matrix element.
fn lower(j: i32, m: i32, r: u32) -> f64 {
    (qint(((j + m) / 2) as i64, r) * qint(((j - m) / 2 + 1) as i64, r)).sqrt()
}

pub fn q_clebsch_gordan(j1: ColorLabel, j2: ColorLabel, j: ColorLabel, r: u32) -> Result<CgTable> {
    if !fusion_range(j1, j2, r)?.contains(&j) {
        return Err(Error::InvalidParameter(format!("{j} is not in the fusion range of {j1} ⊗ {j2}")));
    }
    let (a, b, c) = (j1.twice_j as i32, j2.twice_j as i32, j.twice_j as i32);
    let k = |m: i32| q_pow(r, m as f64 / 4.0);

    // highest weight vector, indexed by 2 m1 with m1 + m2 = j
    let lo = (-a).max(c - b);
    let hi = a.min(c + b);
    let mut top: BTreeMap<i32, Complex64> = BTreeMap::new();
    let mut cur = Complex64::new(1.0, 0.0);
    top.insert(lo, cur);
    let mut m1 = lo;
    while m1 + 2 <= hi {
        let m2 = c - m1;
        let num = raise(a, m1, r) * k(m2) * k(m1 + 2);
        let den = raise(b, m2 - 2, r);
        cur = -cur * num / den;
        top.insert(m1 + 2, cur);
        m1 += 2;
    }
    let norm: Complex64 = top.values().map(|x| x * x).sum::<Complex64>().sqrt();
    let mut sign = 1.0;
    if let Some(x) = top.get(&a) {
        if x.re / norm.re < 0.0 {
            sign = -1.0;
        }
    }
    for x in top.values_mut() {
        *x *= sign / norm;
    }

    let mut entries = BTreeMap::new();
    let mut level = top;
    let mut m = c;
    loop {
        for (&m1, &x) in &level {
            entries.insert((m1, m - m1), x);
        }
        if m == -c {
            break;
        }
        // apply Δ(F) then divide by the lowering element of spin j
        let mut next: BTreeMap<i32, Complex64> = BTreeMap::new();
        for (&m1, &x) in &level {
            let m2 = m - m1;
            if m1 > -a {
                *next.entry(m1 - 2).or_default() += x * lower(a, m1, r) * k(m2);
            }
            if m2 > -b {
                *next.entry(m1).or_default() += x * k(-m1) * lower(b, m2, r);
            }
        }
        let scale = lower(c, m, r);
        for x in next.values_mut() {
            *x /= scale;
        }
        level = next;
        m -= 2;
    }
    if entries.values().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::InvalidParameter(format!("coupling {j1} ⊗ {j2} → {j} degenerates at r = {r}")));
    }
    Ok(CgTable { j1, j2, j, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(t: u32) -> ColorLabel {
        ColorLabel::new(t)
    }

    fn factorial(n: i32) -> f64 {
        (1..=n).map(f64::from).product()
    }

    /// Undeformed coefficients by the Racah closed form (twice-j args).
    fn classical(a: i32, b: i32, j: i32, m1: i32, m2: i32) -> f64 {
        let m = m1 + m2;
        let f = |x: i32| factorial(x / 2);
        let pre = ((j + 1) as f64 * f(a + b - j) * f(a - b + j) * f(-a + b + j) / f(a + b + j + 2)).sqrt()
            * (f(j + m) * f(j - m) * f(a - m1) * f(a + m1) * f(b - m2) * f(b + m2)).sqrt();
        let mut sum = 0.0;
        for k in (0..=2 * (a + b)).step_by(2) {
            let d = [k, a + b - j - k, a - m1 - k, b + m2 - k, j - b + m1 + k, j - a - m2 + k];
            if d.iter().any(|&x| x < 0) {
                continue;
            }
            let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sum += s / d.iter().map(|&x| f(x)).product::<f64>();
        }
        pre * sum
    }

    #[test]
    fn highest_weight_doublet() {
        let t = q_clebsch_gordan(c(1), c(1), c(2), 7).unwrap();
        assert!((t.get(1, 1) - 1.0).norm() < 1e-12);
        assert_eq!(t.column(2).len(), 1);
    }

    #[test]
    fn singlet_weights() {
        let r = 7;
        let t = q_clebsch_gordan(c(1), c(1), c(0), r).unwrap();
        let (x, y) = (t.get(1, -1), t.get(-1, 1));
        assert!((x * x + y * y - 1.0).norm() < 1e-12);
        // ratio of the two entries is -q^{∓1/2}: weights q^{±1/4}
        let ratio = x / y;
        assert!((ratio.norm() - 1.0).abs() < 1e-12);
        assert!((ratio + q_pow(r, -0.5)).norm() < 1e-12 || (ratio + q_pow(r, 0.5)).norm() < 1e-12);
    }

    #[test]
    fn bilinear_orthonormality() {
        for r in [5u32, 7, 10] {
            for a in 0..=3u32 {
                for b in 0..=3u32 {
                    if a + b > 2 * (r - 2) {
                        continue;
                    }
                    let js = fusion_range(c(a), c(b), r).unwrap();
                    let tables: Vec<_> = js
                        .iter()
                        .filter(|j| crate::colored::qnum::admissible(a, b, j.twice_j, r))
                        .map(|&j| q_clebsch_gordan(c(a), c(b), j, r).unwrap())
                        .collect();
                    for t1 in &tables {
                        for t2 in &tables {
                            for m in (-(t1.j.twice_j as i32)..=t1.j.twice_j as i32).step_by(2) {
                                if m.abs() > t2.j.twice_j as i32 {
                                    continue;
                                }
                                let dot: Complex64 = t1.column(m).iter().map(|&(m1, x)| x * t2.get(m1, m - m1)).sum();
                                let want = if t1.j == t2.j { 1.0 } else { 0.0 };
                                assert!((dot - want).norm() < 1e-10, "r={r} {a} {b} m={m}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classical_limit() {
        for a in 0..=2 {
            for b in 0..=2 {
                for j in ((a as i32 - b as i32).unsigned_abs()..=a + b).step_by(2) {
                    let t = q_clebsch_gordan(c(a), c(b), c(j), 10_000).unwrap();
                    for (&(m1, m2), x) in &t.entries {
                        let want = classical(a as i32, b as i32, j as i32, m1, m2);
                        assert!((x - want).norm() < 1e-3, "{a} {b} {j} {m1} {m2}: {x} vs {want}");
                    }
                }
            }
        }
    }

    #[test]
    fn outside_range_is_rejected() {
        assert!(q_clebsch_gordan(c(1), c(1), c(4), 10).is_err());
    }
}
