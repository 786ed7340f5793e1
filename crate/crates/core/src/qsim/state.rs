//! Dense state vectors and direct unitary action.

use num_complex::Complex64;

use crate::colored::{BraidingOperator, CrossingOperator};
use crate::error::{Error, Result};

const NORM_TOL: f64 = 1e-10;

/// Normalized amplitudes over a registered basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let s = Self { amplitudes };
        if s.amplitudes.is_empty() || (s.norm() - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidParameter(format!("state norm {} is not 1", s.norm())));
        }
        Ok(s)
    }

    /// `|index>` in a space of the given dimension.
    pub fn basis(dimension: usize, index: usize) -> Result<Self> {
        if index >= dimension {
            return Err(Error::InvalidParameter(format!("basis index {index} outside dimension {dimension}")));
        }
        let mut a = vec![Complex64::default(); dimension];
        a[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: a })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }
}

pub(crate) fn matvec(u: &BraidingOperator, x: &[Complex64]) -> Vec<Complex64> {
    let cols = u.cols();
    (0..u.rows()).map(|i| u.matrix[i * cols..(i + 1) * cols].iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub(crate) fn check_unitary(u: &BraidingOperator, dimension: usize) -> Result<()> {
    if u.rows() != u.cols() || u.cols() != dimension {
        return Err(Error::InvalidParameter(format!(
            "operator of shape {}x{} cannot act on dimension {dimension}",
            u.rows(),
            u.cols()
        )));
    }
    let defect = u.unitarity_defect();
    if defect > NORM_TOL {
        return Err(Error::InvalidParameter(format!("operator is not unitary (defect {defect:.2e})")));
    }
    Ok(())
}

/// `U psi` for an operator on the whole registered space.
pub fn apply_unitary(psi: &StateVector, u: &BraidingOperator) -> Result<StateVector> {
    check_unitary(u, psi.dimension())?;
    Ok(StateVector { amplitudes: matvec(u, &psi.amplitudes) })
}

/// One elementary crossing; the targets are the factors `i, i+1` of
/// `op.generator`.
pub fn apply_crossing(psi: &StateVector, op: &CrossingOperator) -> Result<StateVector> {
    if op.domain.dimension() != psi.dimension() {
        return Err(Error::InvalidParameter(format!(
            "crossing acts on dimension {}, state has {}",
            op.domain.dimension(),
            psi.dimension()
        )));
    }
    Ok(StateVector { amplitudes: op.apply(&psi.amplitudes) })
}
