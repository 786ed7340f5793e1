//! Dense braiding operators and the plat prescription.

use num_complex::Complex64;

use super::model::{ColoredSpace, CrossingOperator};
use super::qnum::ColorLabel;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Dense operator `domain → codomain`, row-major.
#[derive(Clone, Debug)]
pub struct BraidingOperator {
    pub matrix: Vec<Complex64>,
    pub domain: ColoredSpace,
    pub codomain: ColoredSpace,
}

impl BraidingOperator {
    pub fn identity(space: &ColoredSpace) -> Self {
        let n = space.dimension();
        let mut matrix = vec![Complex64::default(); n * n];
        for i in 0..n {
            matrix[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Self { matrix, domain: space.clone(), codomain: space.clone() }
    }

    pub fn rows(&self) -> usize {
        self.codomain.dimension()
    }

    pub fn cols(&self) -> usize {
        self.domain.dimension()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row * self.cols() + col]
    }

    /// `op ∘ self`: apply `self`, then the crossing.
    pub fn then_crossing(&self, op: &CrossingOperator) -> Result<Self> {
        if op.domain != self.codomain {
            return Err(Error::ColorMismatch("operator domains do not line up".into()));
        }
        let (rows, cols) = (op.codomain.dimension(), self.cols());
        let mut matrix = vec![Complex64::default(); rows * cols];
        for (k, col) in op.columns.iter().enumerate() {
            for &(row, amp) in col {
                for c in 0..cols {
                    let x = self.matrix[k * cols + c];
                    if x.norm_sqr() != 0.0 {
                        matrix[row * cols + c] += amp * x;
                    }
                }
            }
        }
        Ok(Self { matrix, domain: self.domain.clone(), codomain: op.codomain.clone() })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &BraidingOperator) -> Result<Self> {
        if other.domain != self.codomain {
            return Err(Error::ColorMismatch("operator domains do not line up".into()));
        }
        let (n, m, p) = (other.rows(), self.rows(), self.cols());
        let mut matrix = vec![Complex64::default(); n * p];
        for i in 0..n {
            for k in 0..m {
                let a = other.matrix[i * m + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..p {
                    matrix[i * p + j] += a * self.matrix[k * p + j];
                }
            }
        }
        Ok(Self { matrix, domain: self.domain.clone(), codomain: other.codomain.clone() })
    }

    pub fn adjoint(&self) -> Self {
        let (n, m) = (self.rows(), self.cols());
        let mut matrix = vec![Complex64::default(); n * m];
        for i in 0..n {
            for j in 0..m {
                matrix[j * n + i] = self.matrix[i * m + j].conj();
            }
        }
        Self { matrix, domain: self.codomain.clone(), codomain: self.domain.clone() }
    }

    /// `max |U†U - I|` entrywise.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.then(&self.adjoint()).expect("adjoint composes");
        max_deviation_from_identity(&p)
    }

    pub fn max_difference(&self, other: &BraidingOperator) -> f64 {
        self.matrix.iter().zip(&other.matrix).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

pub(crate) fn max_deviation_from_identity(p: &BraidingOperator) -> f64 {
    let n = p.rows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..p.cols() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((p.get(i, j) - want).norm());
        }
    }
    worst
}

/// `R̂ : V^{j1} ⊗ V^{j2} → V^{j2} ⊗ V^{j1}` in the coupled basis.
pub fn r_matrix(j1: ColorLabel, j2: ColorLabel, r: u32) -> Result<BraidingOperator> {
    let space = ColoredSpace::new(vec![j1, j2], r)?;
    let op = CrossingOperator::new(&space, 1, true)?;
    BraidingOperator::identity(&space).then_crossing(&op)
}

/// Strand colours at the bottom of the braid: colours travel with the
/// strands.
pub fn thread_colors(w: &BraidWord, colors: &[ColorLabel]) -> Vec<ColorLabel> {
    let mut c = colors.to_vec();
    for l in w.letters() {
        c.swap(l.generator - 1, l.generator);
    }
    c
}

fn check_pairs(colors: &[ColorLabel], side: &str) -> Result<()> {
    for (k, pair) in colors.chunks(2).enumerate() {
        if pair[0] != pair[1] {
            return Err(Error::ColorMismatch(format!(
                "{side} pair {} joins colours {} and {}",
                k + 1,
                pair[0],
                pair[1]
            )));
        }
    }
    Ok(())
}

/// The per-letter operators of a plat-compatible coloured braid, in order.
pub fn plat_crossings(w: &BraidWord, colors: &[ColorLabel], r: u32) -> Result<(ColoredSpace, Vec<CrossingOperator>)> {
    let n = w.index();
    if !n.is_multiple_of(2) {
        return Err(Error::OddIndex(n));
    }
    if colors.len() != n {
        return Err(Error::ColorMismatch(format!("{} colours for {n} strands", colors.len())));
    }
    check_pairs(colors, "top")?;
    check_pairs(&thread_colors(w, colors), "bottom")?;
    let mut space = ColoredSpace::new(colors.to_vec(), r)?;
    let start = space.clone();
    let mut ops = Vec::with_capacity(w.len());
    for l in w.letters() {
        let op = CrossingOperator::new(&space, l.generator, l.positive)?;
        space = op.codomain.clone();
        ops.push(op);
    }
    Ok((start, ops))
}

/// Ordered product of the elementary braiding operators of `w`.
pub fn braiding_operator_for_plat(w: &BraidWord, colors: &[ColorLabel], r: u32) -> Result<BraidingOperator> {
    let (space, ops) = plat_crossings(w, colors, r)?;
    let mut b = BraidingOperator::identity(&space);
    for op in &ops {
        b = b.then_crossing(op)?;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(t: u32) -> ColorLabel {
        ColorLabel::new(t)
    }

    #[test]
    fn trivial_r_matrix() {
        let m = r_matrix(c(0), c(0), 5).unwrap();
        assert_eq!(m.matrix.len(), 1);
        assert!((m.matrix[0] - 1.0).norm() < 1e-14);
    }

    #[test]
    fn r_matrices_are_unitary() {
        for r in [5u32, 7, 10] {
            for a in 0..=3 {
                for b in 0..=3 {
                    let m = r_matrix(c(a), c(b), r).unwrap();
                    assert!(m.unitarity_defect() < 1e-10);
                    assert_eq!(m.codomain.factors(), &[c(b), c(a)]);
                }
            }
        }
    }

    #[test]
    fn yang_baxter() {
        for r in [5u32, 7, 10] {
            for cols in [[1, 1, 1], [1, 2, 3], [3, 0, 2], [2, 2, 1]] {
                let colors: Vec<_> = cols.iter().map(|&t| c(t)).collect();
                let mut all = colors.clone();
                all.push(c(0));
                let w1 = BraidWord::parse("s1 s2 s1", 3).unwrap();
                let w2 = BraidWord::parse("s2 s1 s2", 3).unwrap();
                let space = ColoredSpace::new(colors.clone(), r).unwrap();
                let build = |w: &BraidWord| {
                    let mut s = space.clone();
                    let mut b = BraidingOperator::identity(&s);
                    for l in w.letters() {
                        let op = CrossingOperator::new(&s, l.generator, l.positive).unwrap();
                        s = op.codomain.clone();
                        b = b.then_crossing(&op).unwrap();
                    }
                    b
                };
                let (x, y) = (build(&w1), build(&w2));
                assert!(x.max_difference(&y) < 1e-10, "r={r} {cols:?}");
            }
        }
    }

    #[test]
    fn plat_operator_codomain() {
        let w = BraidWord::parse("s2 s1 s3 s2", 6).unwrap();
        let cols = [c(1), c(1), c(2), c(2), c(1), c(1)];
        let threaded = thread_colors(&w, &cols);
        assert_eq!(threaded, vec![c(2), c(2), c(1), c(1), c(1), c(1)]);
        let id = braiding_operator_for_plat(&BraidWord::identity(4).unwrap(), &[c(1); 4], 7).unwrap();
        assert!(max_deviation_from_identity(&id) < 1e-14);
        let inv = braiding_operator_for_plat(&BraidWord::parse("s1 s1^-1", 2).unwrap(), &[c(1); 2], 7).unwrap();
        assert!(max_deviation_from_identity(&inv) < 1e-10);
        assert!(matches!(
            braiding_operator_for_plat(&BraidWord::parse("s2", 4).unwrap(), &[c(1), c(1), c(2), c(2)], 7),
            Err(Error::ColorMismatch(_))
        ));
    }
}
