//! q-integers at `q = exp(2πi/r)`, colour labels and fusion ranges.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A spin `j`, stored as `2j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorLabel {
    pub twice_j: u32,
}

impl ColorLabel {
    pub const fn new(twice_j: u32) -> Self {
        Self { twice_j }
    }

    pub const fn half() -> Self {
        Self { twice_j: 1 }
    }

    pub fn spin(self) -> f64 {
        self.twice_j as f64 / 2.0
    }

    pub fn dimension(self) -> usize {
        self.twice_j as usize + 1
    }

    /// Admissible for root `r` when `j <= r`.
    pub fn check(self, r: u32) -> Result<Self> {
        if self.twice_j > 2 * r {
            return Err(Error::InadmissibleColor { twice_j: self.twice_j, r });
        }
        Ok(self)
    }

    /// Parses `"1,1,2"` (comma-separated values of `2j`).
    pub fn parse_list(text: &str) -> Result<Vec<ColorLabel>> {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map(ColorLabel::new)
                    .map_err(|_| Error::Syntax { pos: 0, msg: format!("bad colour {t:?}: expected twice-j integers") })
            })
            .collect()
    }
}

impl fmt::Display for ColorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice_j.is_multiple_of(2) {
            write!(f, "{}", self.twice_j / 2)
        } else {
            write!(f, "{}/2", self.twice_j)
        }
    }
}

pub(crate) fn check_root(r: u32) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("root r = {r} must be at least 3")));
    }
    Ok(())
}

/// `q^x` for real `x`.
pub fn q_pow(r: u32, x: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * x / r as f64)
}

/// `[m]_q = sin(mπ/r) / sin(π/r)`; no range checks.
pub(crate) fn qint(m: i64, r: u32) -> f64 {
    let r = r as f64;
    (m as f64 * PI / r).sin() / (PI / r).sin()
}

/// `[m]_q = (q^{m/2} - q^{-m/2}) / (q^{1/2} - q^{-1/2})`.
pub fn q_integer(m: i64, r: u32) -> Result<f64> {
    check_root(r)?;
    Ok(qint(m, r))
}

/// Spins `j` with `|j1 - j2| <= j <= min(j1 + j2, r - j1 - j2)`.
pub fn fusion_range(j1: ColorLabel, j2: ColorLabel, r: u32) -> Result<Vec<ColorLabel>> {
    let (a, b) = (j1.check(r)?.twice_j as i64, j2.check(r)?.twice_j as i64);
    let lo = (a - b).abs();
    let hi = (a + b).min(2 * r as i64 - a - b);
    Ok((lo..=hi).step_by(2).map(|c| ColorLabel::new(c as u32)).collect())
}

/// Fusion rule of the unitary model at level `k = r - 2` (twice-j
/// arguments).
pub(crate) fn admissible(a: u32, b: u32, c: u32, r: u32) -> bool {
    let k2 = 2 * (r - 2);
    a + b >= c && a + c >= b && b + c >= a && (a + b + c).is_multiple_of(2) && a + b + c <= k2
}

/// `[n]!` for `n = 0..=max`.
pub(crate) fn qfactorials(max: usize, r: u32) -> Vec<f64> {
    let mut out = vec![1.0; max + 1];
    for n in 1..=max {
        out[n] = out[n - 1] * qint(n as i64, r);
    }
    out
}
