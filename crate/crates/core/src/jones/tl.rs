//! Temperley–Lieb route: represent a braid in `TL_n` over the diagram
//! basis and take the Markov trace.
//!
//! A basis diagram is a non-crossing perfect matching of `2n` points:
//! `0..n` along the top, `n..2n` along the bottom, both left to right.
//! Products stack the left factor on top of the right one.

use std::collections::{BTreeMap, HashMap};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

use super::bracket::loop_value;

/// Largest strand count accepted by [`tl_generator_images`].
pub const MAX_TL_STRANDS: usize = 10;

#[derive(Clone, Debug)]
pub struct TLDiagramBasis {
    n: usize,
    diagrams: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
}

impl TLDiagramBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidIndex(0));
        }
        if n > MAX_TL_STRANDS {
            return Err(Error::SizeLimit(format!("TL_{n} exceeds the {MAX_TL_STRANDS}-strand limit")));
        }
        // boundary order around the disc: top left to right, then bottom
        // right to left
        let circle: Vec<u16> = (0..n).chain((n..2 * n).rev()).map(|p| p as u16).collect();
        let mut diagrams = Vec::new();
        let mut pairs = vec![0u16; 2 * n];
        matchings(&mut vec![circle], &mut pairs, &mut diagrams);
        diagrams.sort();
        let index = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(Self { n, diagrams, index })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    /// Partner of each boundary point.
    pub fn diagram(&self, i: usize) -> &[u16] {
        &self.diagrams[i]
    }

    pub fn position(&self, pairs: &[u16]) -> Option<usize> {
        self.index.get(pairs).copied()
    }

    pub fn identity_index(&self) -> usize {
        let n = self.n as u16;
        let id: Vec<u16> = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        self.index[&id]
    }

    /// `E_i` (1-based): caps `i, i+1` at the top and bottom.
    pub fn e_index(&self, i: usize) -> usize {
        let n = self.n as u16;
        let i = (i - 1) as u16;
        let e: Vec<u16> = (0..2 * n)
            .map(|p| match p {
                p if p == i => i + 1,
                p if p == i + 1 => i,
                p if p == n + i => n + i + 1,
                p if p == n + i + 1 => n + i,
                p if p < n => p + n,
                p => p - n,
            })
            .collect();
        self.index[&e]
    }

    /// `D_a · D_b = δ^loops · D_c`, returned as `(c, loops)`.
    pub fn compose(&self, a: usize, b: usize) -> (usize, usize) {
        let (c, loops) = compose(&self.diagrams[a], &self.diagrams[b], self.n);
        (self.index[&c], loops)
    }

    /// Circles in the trace closure of a basis diagram.
    pub fn closure_loops(&self, a: usize) -> usize {
        let d = &self.diagrams[a];
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            while !seen[p] {
                // along the diagram arc, then along the closure arc
                let q = d[p] as usize;
                seen[p] = true;
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
            }
        }
        loops
    }
}

/// Non-crossing matchings of the points in `segments`, each segment a run
/// of consecutive boundary points that must be matched among themselves.
fn matchings(segments: &mut Vec<Vec<u16>>, pairs: &mut [u16], out: &mut Vec<Vec<u16>>) {
    let Some(seg) = segments.pop() else {
        out.push(pairs.to_vec());
        return;
    };
    if seg.is_empty() {
        matchings(segments, pairs, out);
        segments.push(seg);
        return;
    }
    for k in (1..seg.len()).step_by(2) {
        pairs[seg[0] as usize] = seg[k];
        pairs[seg[k] as usize] = seg[0];
        segments.push(seg[k + 1..].to_vec());
        segments.push(seg[1..k].to_vec());
        matchings(segments, pairs, out);
        segments.pop();
        segments.pop();
    }
    segments.push(seg);
}

fn compose(top: &[u16], bottom: &[u16], n: usize) -> (Vec<u16>, usize) {
    // points of the product: 0..n top of `top`, n..2n bottom of `bottom`;
    // the middle row is the bottom of `top` and the top of `bottom`
    let mut out = vec![u16::MAX; 2 * n];
    let mut mid_seen = vec![false; n];
    let exit = |start: usize, mid_seen: &mut Vec<bool>| -> usize {
        // start is an outer point of the product
        let (mut in_top, mut p) = if start < n { (true, start) } else { (false, start) };
        loop {
            let q = if in_top { top[p] as usize } else { bottom[p] as usize };
            if in_top {
                if q < n {
                    return q;
                }
                let m = q - n;
                mid_seen[m] = true;
                in_top = false;
                p = m;
            } else {
                if q >= n {
                    return q;
                }
                mid_seen[q] = true;
                in_top = true;
                p = n + q;
            }
        }
    };
    for start in 0..2 * n {
        if out[start] != u16::MAX {
            continue;
        }
        let end = exit(start, &mut mid_seen);
        out[start] = end as u16;
        out[end] = start as u16;
    }
    let mut loops = 0;
    for m in 0..n {
        if mid_seen[m] {
            continue;
        }
        loops += 1;
        let mut p = m;
        loop {
            mid_seen[p] = true;
            // down through `bottom` from its top point p, back up through
            // `top` from its bottom point
            let q = bottom[p] as usize;
            mid_seen[q] = true;
            let r = top[n + q] as usize - n;
            if mid_seen[r] {
                break;
            }
            p = r;
        }
    }
    (out, loops)
}

/// Sparse element of `TL_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TLElement {
    pub coeffs: BTreeMap<usize, LaurentPoly>,
}

impl TLElement {
    pub fn basis(i: usize) -> Self {
        Self { coeffs: BTreeMap::from([(i, LaurentPoly::one())]) }
    }

    fn add_term(&mut self, i: usize, c: LaurentPoly) {
        let slot = self.coeffs.entry(i).or_insert_with(LaurentPoly::zero);
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }
}

/// Right action of the generators on the diagram basis.
#[derive(Clone, Debug)]
pub struct TLMatrixRep {
    basis: TLDiagramBasis,
    /// `right_e[i-1][b] = (c, loops)` with `D_b · E_i = δ^loops D_c`
    right_e: Vec<Vec<(usize, usize)>>,
}

/// Builds `TL_n` and the images of `E_1 .. E_{n-1}` in the diagram basis.
pub fn tl_generator_images(n: usize) -> Result<TLMatrixRep> {
    let basis = TLDiagramBasis::new(n)?;
    let right_e = (1..n)
        .map(|i| {
            let e = basis.e_index(i);
            (0..basis.len()).map(|b| basis.compose(b, e)).collect()
        })
        .collect();
    Ok(TLMatrixRep { basis, right_e })
}

impl TLMatrixRep {
    pub fn basis(&self) -> &TLDiagramBasis {
        &self.basis
    }

    /// `D_b · E_i` as `(c, loops)`.
    pub fn e_image(&self, i: usize, b: usize) -> (usize, usize) {
        self.right_e[i - 1][b]
    }

    /// `x · g` where `s_i ↦ A + A^-1 E_i` and `s_i^-1 ↦ A^-1 + A E_i`.
    pub fn apply_letter(&self, x: &TLElement, l: Letter) -> TLElement {
        let (id_exp, e_exp) = if l.positive { (4, -4) } else { (-4, 4) };
        let delta = loop_value();
        let mut out = TLElement::default();
        for (&b, c) in &x.coeffs {
            out.add_term(b, c.shift(id_exp));
            let (t, loops) = self.e_image(l.generator, b);
            let mut term = c.shift(e_exp);
            for _ in 0..loops {
                term = &term * &delta;
            }
            out.add_term(t, term);
        }
        out
    }

    pub fn braid_element(&self, w: &BraidWord) -> Result<TLElement> {
        if w.index() != self.basis.strands() {
            return Err(Error::IndexMismatch(w.index(), self.basis.strands()));
        }
        let mut x = TLElement::basis(self.basis.identity_index());
        for &l in w.letters() {
            x = self.apply_letter(&x, l);
        }
        Ok(x)
    }

    /// Dense matrix of right multiplication by the image of a letter:
    /// column `b` holds the coordinates of `D_b · g`.
    pub fn letter_matrix(&self, l: Letter) -> Vec<Vec<LaurentPoly>> {
        let m = self.basis.len();
        let mut out = vec![vec![LaurentPoly::zero(); m]; m];
        for (b, column) in (0..m).map(|b| (b, self.apply_letter(&TLElement::basis(b), l))) {
            for (r, c) in column.coeffs {
                out[r][b] = c;
            }
        }
        out
    }

    /// Markov trace normalized so that the trace closure of a single
    /// strand is 1: `tr(D) = δ^(loops - 1)`.
    pub fn markov_trace(&self, x: &TLElement) -> LaurentPoly {
        let delta = loop_value();
        let mut pows = vec![LaurentPoly::one()];
        let mut out = LaurentPoly::zero();
        for (&b, c) in &x.coeffs {
            let k = self.basis.closure_loops(b) - 1;
            while pows.len() <= k {
                let next = pows.last().expect("nonempty") * &delta;
                pows.push(next);
            }
            out += &(c * &pows[k]);
        }
        out
    }
}

/// Bracket of the trace closure computed in `TL_n`.
pub fn markov_trace_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    let rep = tl_generator_images(w.index())?;
    Ok(rep.markov_trace(&rep.braid_element(w)?))
}

/// Jones polynomial of the trace closure, via the Temperley–Lieb trace.
pub fn markov_trace_jones(w: &BraidWord) -> Result<LaurentPoly> {
    super::bracket::bracket_to_jones(&markov_trace_bracket(w)?, w.exponent_sum())
}
