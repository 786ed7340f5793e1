//! Kauffman bracket by brute-force state sum.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::diagram::{LinkDiagram, UnionFind};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Default bound on the number of crossings for the state sum.
pub const DEFAULT_CROSSING_LIMIT: usize = 20;

/// Environment variable overriding [`DEFAULT_CROSSING_LIMIT`].
pub const CROSSING_LIMIT_ENV: &str = "KNIT_CROSSING_LIMIT";

pub fn crossing_limit() -> usize {
    std::env::var(CROSSING_LIMIT_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CROSSING_LIMIT)
}

/// `δ = -A^2 - A^-2` as a polynomial in `A`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(8, -1), (-8, -1)])
}

/// Bracket in the variable `A`, normalized so a single circle is 1.
///
/// At crossing `X[a,b,c,d]` the A-smoothing joins `(a,d)` and `(b,c)`, the
/// B-smoothing `(a,b)` and `(c,d)`.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with_limit(d, crossing_limit())
}

pub fn kauffman_bracket_with_limit(d: &LinkDiagram, limit: usize) -> Result<LaurentPoly> {
    let k = d.crossing_count();
    if k > limit {
        return Err(Error::CrossingLimit { crossings: k, limit });
    }
    if k > 40 {
        return Err(Error::SizeLimit(format!("{k} crossings overflow the state counter")));
    }
    let v = d.validate();
    if !v.is_empty() {
        return Err(Error::MalformedDiagram(v.iter().map(ToString::to_string).collect()));
    }

    // dense edge indices
    let mut index: HashMap<usize, usize> = HashMap::new();
    let pairs: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|c| {
            c.edges.map(|e| {
                let next = index.len();
                *index.entry(e).or_insert(next)
            })
        })
        .collect();
    let edges = index.len();

    let counts = state_counts(&pairs, edges);

    let delta = loop_value();
    let max_loops = counts.keys().map(|&(_, l)| l).max().unwrap_or(0) + d.free_loops();
    let mut delta_pows = vec![LaurentPoly::one()];
    for i in 1..=max_loops {
        let next = &delta_pows[i - 1] * &delta;
        delta_pows.push(next);
    }

    if k == 0 {
        return Ok(delta_pows[d.free_loops().saturating_sub(1)].clone());
    }
    let mut out = LaurentPoly::zero();
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort_unstable();
    for ((a_minus_b, loops), n) in keys {
        let total = loops + d.free_loops();
        let term = delta_pows[total - 1].shift(4 * a_minus_b).scale(&n.into());
        out += &term;
    }
    Ok(out)
}

/// Histogram of `(#A - #B, loops)` over all `2^k` states.
fn state_counts(pairs: &[[usize; 4]], edges: usize) -> HashMap<(i64, usize), u64> {
    let k = pairs.len();
    let total: u64 = 1 << k;
    let chunk = 1u64 << k.saturating_sub(6).min(14);
    let chunks: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    chunks
        .into_par_iter()
        .map(|start| {
            let mut local: HashMap<(i64, usize), u64> = HashMap::new();
            let mut uf = UnionFind::new(edges);
            for state in start..(start + chunk).min(total) {
                uf.reset();
                for (i, [a, b, c, d]) in pairs.iter().enumerate() {
                    if state >> i & 1 == 0 {
                        uf.union(*a, *d);
                        uf.union(*b, *c);
                    } else {
                        uf.union(*a, *b);
                        uf.union(*c, *d);
                    }
                }
                let b_count = state.count_ones() as i64;
                let key = (k as i64 - 2 * b_count, uf.count());
                *local.entry(key).or_insert(0) += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, n) in b {
                *a.entry(key).or_insert(0) += n;
            }
            a
        })
}

/// Jones polynomial in `t = A^-4`: `(-A^3)^(-w) <D>`.
pub fn jones_polynomial(d: &LinkDiagram) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d)?;
    bracket_to_jones(&bracket, d.writhe())
}

/// Writhe-normalizes a bracket and changes variable to `t = A^-4`.
pub fn bracket_to_jones(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly> {
    let factor = LaurentPoly::monomial(-1, 12).pow(-writhe)?;
    (&factor * bracket).substitute_power(-1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::{closure_trace, Crossing};

    fn a(k: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, 4 * k)
    }

    #[test]
    fn unknots() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(1)).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(2)).unwrap(), loop_value());
        let kink = LinkDiagram::new(vec![Crossing::new([1, 2, 2, 1], 1)], 0).unwrap();
        assert_eq!(kink.writhe(), 1);
        assert_eq!(kauffman_bracket(&kink).unwrap(), -a(3));
        assert_eq!(jones_polynomial(&kink).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn trefoil_and_hopf() {
        let t = closure_trace(&BraidWord::parse("s1^3", 2).unwrap());
        // A^-7 - A^-3 - A^5 by enumerating the eight states
        let expected = &(&a(-7) - &a(-3)) - &a(5);
        assert_eq!(kauffman_bracket(&t).unwrap(), expected);
        let v = jones_polynomial(&t).unwrap();
        assert_eq!(v, LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)]));
        let h = closure_trace(&BraidWord::parse("s1^2", 2).unwrap());
        let v = jones_polynomial(&h).unwrap();
        assert_eq!(v, LaurentPoly::from_terms([(2, -1), (10, -1)]));
    }

    #[test]
    fn limit_is_enforced() {
        let t = closure_trace(&BraidWord::parse("s1^5", 2).unwrap());
        assert!(matches!(kauffman_bracket_with_limit(&t, 4), Err(Error::CrossingLimit { crossings: 5, limit: 4 })));
    }
}
