//! Garside left-canonical normal form in `B_n`, which decides the word
//! problem.
//!
//! Simple elements (positive braids in which every pair of strands crosses
//! at most once) are represented by their permutations. A pair of simple
//! elements `(a, b)` is left-weighted when the starting set of `b` is
//! contained in the finishing set of `a`.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// `Δ^infimum · factors[0] · factors[1] · ...`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub index: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Canonical length: number of non-Δ simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Expands back into a word (positive letters, with `Δ^-1` written as
    /// the inverse of a positive half twist).
    pub fn to_word(&self) -> BraidWord {
        let n = self.index;
        let delta = half_twist_word(n);
        let mut letters = Vec::new();
        for _ in 0..self.infimum.max(0) {
            letters.extend_from_slice(&delta);
        }
        let inv: Vec<i64> = delta.iter().rev().map(|g| -g).collect();
        for _ in 0..(-self.infimum).max(0) {
            letters.extend_from_slice(&inv);
        }
        for f in &self.factors {
            letters.extend(simple_to_letters(f));
        }
        BraidWord::from_signed(n, &letters).expect("generators in range")
    }
}

fn half_twist_word(n: usize) -> Vec<i64> {
    let mut out = Vec::new();
    for k in 1..n {
        for g in 1..=n - k {
            out.push(g as i64);
        }
    }
    out
}

/// A positive word for a permutation braid (bubble sort of the strand
/// endpoints).
fn simple_to_letters(p: &Permutation) -> Vec<i64> {
    let mut cur = p.clone();
    let mut out = Vec::new();
    loop {
        match starting_set(&cur).into_iter().next() {
            Some(i) => {
                out.push(i as i64 + 1);
                cur = Permutation::transposition(cur.len(), i + 1).then(&cur);
            }
            None => return out,
        }
    }
}

fn half_twist(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("reversal")
}

/// Conjugation by the half twist: `s_i -> s_{n-i}`.
fn flip(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::from_images((0..n).map(|i| n - 1 - p.apply(n - 1 - i)).collect()).expect("conjugate of a permutation")
}

/// 0-based `i` such that `s_{i+1}` can be the first letter.
fn starting_set(p: &Permutation) -> Vec<usize> {
    (0..p.len().saturating_sub(1)).filter(|&i| p.apply(i) > p.apply(i + 1)).collect()
}

fn in_finishing_set(p: &Permutation, i: usize) -> bool {
    let inv = p.inverse();
    inv.apply(i) > inv.apply(i + 1)
}

/// Moves letters from `b` into `a` until the pair is left-weighted.
/// Returns true if anything changed.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let Some(i) = starting_set(b).into_iter().find(|&i| !in_finishing_set(a, i)) else {
            return changed;
        };
        let s = Permutation::transposition(n, i + 1);
        *a = a.then(&s);
        *b = s.then(b);
        changed = true;
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.index();
    let delta = half_twist(n);
    // w = Δ^{-k} · x_1 ⋯ x_m with each x_i simple; negative letters become
    // Δ^{-1}(Δ s_i^{-1}) and the Δ^{-1} is pushed left through the flip.
    let mut neg = 0i64;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());
    for l in w.letters() {
        let s = Permutation::transposition(n, l.generator);
        if l.positive {
            factors.push(s);
        } else {
            for f in factors.iter_mut() {
                *f = flip(f);
            }
            factors.push(delta.then(&s));
            neg += 1;
        }
    }

    let mut changed = true;
    while changed {
        changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let (lo, hi) = factors.split_at_mut(i + 1);
            changed |= left_weight(&mut lo[i], &mut hi[0]);
        }
    }

    let mut infimum = -neg;
    let lead = factors.iter().take_while(|f| **f == delta).count();
    infimum += lead as i64;
    factors.drain(..lead);
    while factors.last().is_some_and(Permutation::is_identity) {
        factors.pop();
    }
    NormalForm { index: n, infimum, factors }
}

pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.index() != b.index() {
        return Err(Error::IndexMismatch(a.index(), b.index()));
    }
    Ok(normal_form(a) == normal_form(b))
}

pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn braid_relation() {
        assert_eq!(normal_form(&w("s1 s2 s1", 3)), normal_form(&w("s2 s1 s2", 3)));
        assert_eq!(normal_form(&w("s1 s2 s1", 3)).infimum, 1);
    }

    #[test]
    fn trivial_words() {
        assert!(normal_form(&w("s1 s1^-1", 2)).is_identity());
        assert!(is_trivial(&w("s1 s3 s1^-1 s3^-1", 4)));
        assert!(!is_trivial(&w("s1^2", 2)));
        assert!(is_trivial(&w("", 5)));
    }

    #[test]
    fn inverse_generator_in_b2() {
        // In B_2 the only simple elements are e and Δ = s1, so s1^-1 = Δ^-1.
        let nf = normal_form(&w("s1^-1", 2));
        assert_eq!(nf.infimum, -1);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn equality() {
        assert!(words_equal(&w("s1 s3", 4), &w("s3 s1", 4)).unwrap());
        assert!(!words_equal(&w("s1", 3), &w("s2", 3)).unwrap());
        let x = w("s2^-1 s1 s3 s2", 4);
        assert!(words_equal(&x, &x).unwrap());
        assert!(words_equal(&w("s1", 3), &w("s1", 4)).is_err());
    }

    #[test]
    fn factors_are_left_weighted_and_proper() {
        let nf = normal_form(&w("s1 s2^-1 s3 s1 s2 s2 s3^-1 s1", 4));
        let delta = half_twist(4);
        for f in &nf.factors {
            assert!(!f.is_identity());
            assert_ne!(*f, delta);
        }
        for pair in nf.factors.windows(2) {
            for i in starting_set(&pair[1]) {
                assert!(in_finishing_set(&pair[0], i));
            }
        }
    }

    #[test]
    fn to_word_represents_same_element() {
        let x = w("s1 s2^-1 s3 s1^-2 s2 s3^-1", 4);
        let nf = normal_form(&x);
        assert_eq!(normal_form(&nf.to_word()), nf);
        let inv = x.invert().concat(&nf.to_word()).unwrap();
        assert!(is_trivial(&inv));
    }
}
