//! Coloured plat invariants and their normalizations.

use num_complex::Complex64;

use super::braiding::{plat_crossings, thread_colors};
use super::qnum::{check_root, q_pow, qint, ColorLabel};
use crate::braid::BraidWord;
use crate::diagram::{closure_plat, plat_component_of_strand, LinkDiagram};
use crate::error::{Error, Result};

/// Colour of every strand at the top of a plat, given one colour per
/// component (components numbered as in `plat_component_of_strand`).
pub fn plat_strand_colors(w: &BraidWord, colors: &[ColorLabel]) -> Result<Vec<ColorLabel>> {
    let comp = plat_component_of_strand(w)?;
    let m = comp.iter().max().map_or(0, |c| c + 1);
    if colors.len() != m {
        return Err(Error::ColorMismatch(format!("{} colours given for {m} components", colors.len())));
    }
    Ok(comp.into_iter().map(|c| colors[c]).collect())
}

/// Amplitude `<cups| B |cups>` and the cap weight `∏ [2j+1]` over the top
/// caps.
pub(crate) fn plat_amplitude(w: &BraidWord, strand_colors: &[ColorLabel], r: u32) -> Result<(Complex64, f64)> {
    let (space, ops) = plat_crossings(w, strand_colors, r)?;
    let start = space.cup_state().expect("paired colours give a cup state");
    let mut psi = vec![Complex64::default(); space.dimension()];
    psi[start] = Complex64::new(1.0, 0.0);
    let mut last = space;
    for op in &ops {
        psi = op.apply(&psi);
        last = op.codomain.clone();
    }
    let end = last.cup_state().expect("bottom colours are paired");
    let weight = cap_weight(strand_colors, r);
    Ok((psi[end], weight))
}

pub(crate) fn cap_weight(strand_colors: &[ColorLabel], r: u32) -> f64 {
    strand_colors.chunks(2).map(|p| qint(p[0].twice_j as i64 + 1, r)).product()
}

/// Regular-isotopy coloured invariant of the plat closure of `w`, with
/// one colour per component. The colour-`j` unknot gives `[2j+1]`.
pub fn colored_invariant(w: &BraidWord, colors: &[ColorLabel], r: u32) -> Result<Complex64> {
    check_root(r)?;
    let strand = plat_strand_colors(w, colors)?;
    if (r as usize) < colors.len() {
        return Err(Error::InvalidParameter(format!("r = {r} is below the component count {}", colors.len())));
    }
    let (amp, weight) = plat_amplitude(w, &strand, r)?;
    Ok(amp * weight)
}

/// `q^{-3w/4} / (q^{1/2} - q^{-1/2}) · value`.
pub fn normalize_ambient(value: Complex64, writhe: i64, r: u32) -> Result<Complex64> {
    check_root(r)?;
    let h = q_pow(r, 0.5);
    Ok(value * q_pow(r, -3.0 * writhe as f64 / 4.0) / (h - h.inv()))
}

/// Crossings whose strands run in opposite vertical directions in the
/// oriented plat diagram; there the diagram sign is opposite to the letter
/// sign.
fn antiparallel(w: &BraidWord, d: &LinkDiagram) -> Vec<bool> {
    w.letters().iter().zip(d.crossings()).map(|(l, c)| (c.sign > 0) != l.positive).collect()
}

/// Correction turning the regular-isotopy value into an ambient-isotopy
/// invariant for arbitrary colours. A self-crossing of a colour-`j`
/// component with diagram sign `ε` contributes `q^{ε j(j+1)}`, and an
/// antiparallel crossing of colours `j, k` contributes `(-1)^{4jk}`.
pub fn framing_factor(w: &BraidWord, colors: &[ColorLabel], r: u32) -> Result<Complex64> {
    let d = closure_plat(w)?;
    let strand = plat_strand_colors(w, colors)?;
    let comp = plat_component_of_strand(w)?;
    let anti = antiparallel(w, &d);
    // original top position of the strand at each current position
    let mut at: Vec<usize> = (0..w.index()).collect();
    let mut exponent = 0.0;
    let mut sign = 1.0;
    for (k, l) in w.letters().iter().enumerate() {
        let (p, q) = (at[l.generator - 1], at[l.generator]);
        if comp[p] == comp[q] {
            let j = strand[p].spin();
            exponent += d.crossings()[k].sign as f64 * j * (j + 1.0);
        }
        if anti[k] && (strand[p].twice_j * strand[q].twice_j) % 2 == 1 {
            sign = -sign;
        }
        at.swap(l.generator - 1, l.generator);
    }
    Ok(sign * q_pow(r, exponent))
}

/// Jones polynomial at `t = q` from the all-spin-1/2 invariant:
/// `(-1)^{M-1+a} q^{3w/4} value / [2]`, with `w` the writhe of the plat
/// diagram and `a` its number of antiparallel crossings.
pub fn spin_half_jones(w: &BraidWord, r: u32) -> Result<Complex64> {
    let (m, factor) = spin_half_prefactor(w, r)?;
    let value = colored_invariant(w, &vec![ColorLabel::half(); m], r)?;
    Ok(factor * value)
}

/// Component count and the factor `(-1)^{M-1+a} q^{3w/4} / [2]`.
pub(crate) fn spin_half_prefactor(w: &BraidWord, r: u32) -> Result<(usize, Complex64)> {
    check_root(r)?;
    let d = closure_plat(w)?;
    let m = d.component_count()?;
    let a = antiparallel(w, &d).into_iter().filter(|&x| x).count();
    let sign = if (m - 1 + a) % 2 == 0 { 1.0 } else { -1.0 };
    Ok((m, sign * q_pow(r, 0.75 * d.writhe() as f64) / qint(2, r)))
}

/// Strand colours at the bottom after threading (re-exported for callers
/// that need the codomain ordering).
pub fn bottom_colors(w: &BraidWord, strand_colors: &[ColorLabel]) -> Vec<ColorLabel> {
    thread_colors(w, strand_colors)
}
