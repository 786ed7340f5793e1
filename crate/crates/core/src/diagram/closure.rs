//! Trace and plat closures of braid words.
//!
//! The braid is drawn downward; letter `k` sits between levels `k` and
//! `k + 1`. At `s_i` the strand entering from the top-left leaves at the
//! bottom-right and passes over (`s_i^-1`: under) the other strand.

use super::{Crossing, LinkDiagram, UnionFind};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Copy, Clone, PartialEq, Eq)]
enum Closure {
    Trace,
    Plat,
}

/// Joins the i-th top endpoint to the i-th bottom endpoint. Every strand
/// is oriented downward, so the writhe equals the exponent sum.
pub fn closure_trace(w: &BraidWord) -> LinkDiagram {
    build(w, Closure::Trace)
}

/// Caps strands `(2i-1, 2i)` at the top and cups them at the bottom. Each
/// component is oriented downward along the leftmost strand of its first
/// cap.
pub fn closure_plat(w: &BraidWord) -> Result<LinkDiagram> {
    if !w.index().is_multiple_of(2) {
        return Err(Error::OddIndex(w.index()));
    }
    Ok(build(w, Closure::Plat))
}

/// Component index of each top endpoint in the plat closure. Components
/// are numbered by their first cap, left to right.
pub fn plat_component_of_strand(w: &BraidWord) -> Result<Vec<usize>> {
    let n = w.index();
    if !n.is_multiple_of(2) {
        return Err(Error::OddIndex(n));
    }
    let perm = w.underlying_permutation();
    // nodes 0..n are top endpoints, n..2n bottom endpoints
    let mut uf = UnionFind::new(2 * n);
    for m in (0..n).step_by(2) {
        uf.union(m, m + 1);
        uf.union(n + m, n + m + 1);
    }
    for p in 0..n {
        uf.union(p, n + perm.apply(p));
    }
    let mut ids: Vec<usize> = Vec::new();
    Ok((0..n)
        .map(|p| {
            let root = uf.find(p);
            match ids.iter().position(|&r| r == root) {
                Some(i) => i,
                None => {
                    ids.push(root);
                    ids.len() - 1
                }
            }
        })
        .collect())
}

#[derive(Copy, Clone, Default)]
struct Pass {
    down: bool,
    in_label: usize,
    out_label: usize,
}

fn build(w: &BraidWord, closure: Closure) -> LinkDiagram {
    let n = w.index();
    let len = w.len();
    let letters = w.letters();
    // passes[k][0] is the strand through the top-left end (A), [1] the
    // strand through the top-right end (B)
    let mut passes = vec![[Pass::default(); 2]; len];
    let mut top_seen = vec![false; n];
    let mut next_label = 1usize;
    let mut free_loops = 0;

    for start in 0..n {
        if top_seen[start] {
            continue;
        }
        let first_label = next_label;
        let mut label = first_label;
        let mut crossed = false;
        let (mut pos, mut level, mut down) = (start, 0usize, true);
        let mut started = false;
        loop {
            if level == 0 {
                if started && down && pos == start {
                    break;
                }
                top_seen[pos] = true;
            }
            started = true;
            if down {
                if level == len {
                    match closure {
                        Closure::Trace => level = 0,
                        Closure::Plat => {
                            pos ^= 1;
                            down = false;
                        }
                    }
                    continue;
                }
                let g = letters[level].generator - 1;
                if pos == g || pos == g + 1 {
                    let strand = if pos == g { 0 } else { 1 };
                    passes[level][strand] = Pass { down: true, in_label: label, out_label: label + 1 };
                    label += 1;
                    crossed = true;
                    pos = if pos == g { g + 1 } else { g };
                }
                level += 1;
            } else {
                if level == 0 {
                    // plat cap
                    pos ^= 1;
                    down = true;
                    continue;
                }
                let g = letters[level - 1].generator - 1;
                if pos == g || pos == g + 1 {
                    // arriving from below at the bottom-left end belongs to
                    // strand B, bottom-right to strand A
                    let strand = if pos == g { 1 } else { 0 };
                    passes[level - 1][strand] = Pass { down: false, in_label: label, out_label: label + 1 };
                    label += 1;
                    crossed = true;
                    pos = if pos == g { g + 1 } else { g };
                }
                level -= 1;
            }
        }
        if crossed {
            // the final outgoing label closes up onto the first one
            for pass in passes.iter_mut().flatten() {
                if pass.out_label == label && pass.in_label >= first_label {
                    pass.out_label = first_label;
                }
            }
            next_label = label;
        } else {
            free_loops += 1;
        }
    }

    let crossings = letters.iter().zip(&passes).map(|(l, [a, b])| crossing_from_passes(*a, *b, l.positive)).collect();
    LinkDiagram::from_parts(crossings, free_loops)
}

/// Geometry of one braid crossing. Corners counterclockwise: TR, TL, BL, BR.
fn crossing_from_passes(a: Pass, b: Pass, positive: bool) -> Crossing {
    const TR: usize = 0;
    const TL: usize = 1;
    const BL: usize = 2;
    const BR: usize = 3;
    let mut labels = [0usize; 4];
    // strand A joins TL and BR, strand B joins TR and BL
    let (a_in, a_out) = if a.down { (TL, BR) } else { (BR, TL) };
    let (b_in, b_out) = if b.down { (TR, BL) } else { (BL, TR) };
    labels[a_in] = a.in_label;
    labels[a_out] = a.out_label;
    labels[b_in] = b.in_label;
    labels[b_out] = b.out_label;
    let dir_a: (i64, i64) = if a.down { (1, -1) } else { (-1, 1) };
    let dir_b: (i64, i64) = if b.down { (-1, -1) } else { (1, 1) };
    let (under_in, under_dir, over_dir) = if positive { (b_in, dir_b, dir_a) } else { (a_in, dir_a, dir_b) };
    let cross = under_dir.0 * over_dir.1 - under_dir.1 * over_dir.0;
    let edges = [labels[under_in], labels[(under_in + 1) % 4], labels[(under_in + 2) % 4], labels[(under_in + 3) % 4]];
    Crossing::new(edges, if cross > 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn trace_closures() {
        let t = closure_trace(&w("s1^3", 2));
        assert_eq!((t.crossing_count(), t.component_count().unwrap()), (3, 1));
        let e = closure_trace(&w("", 3));
        assert_eq!((e.crossing_count(), e.component_count().unwrap()), (0, 3));
        let h = closure_trace(&w("s1^2", 2));
        assert_eq!((h.crossing_count(), h.component_count().unwrap()), (2, 2));
        assert_eq!(closure_trace(&w("s1 s1^-1", 2)).writhe(), 0);
        let x = w("s1 s2^-1 s3 s1 s2 s3^-1 s2", 4);
        let d = closure_trace(&x);
        assert!(d.validate().is_empty(), "{:?}", d.validate());
        assert_eq!(d.writhe(), x.exponent_sum());
        assert_eq!(d.component_count().unwrap(), x.underlying_permutation().cycles().len());
    }

    #[test]
    fn plat_closures() {
        let u = closure_plat(&w("", 2)).unwrap();
        assert_eq!((u.crossing_count(), u.component_count().unwrap()), (0, 1));
        let k = closure_plat(&w("s1", 2)).unwrap();
        assert_eq!((k.crossing_count(), k.component_count().unwrap()), (1, 1));
        assert_eq!(k.writhe(), -1);
        let t = closure_plat(&w("s2^3", 4)).unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(t.component_count().unwrap(), 1);
        let h = closure_plat(&w("s2^2", 4)).unwrap();
        assert_eq!(h.component_count().unwrap(), 2);
        assert!(matches!(closure_plat(&w("s1", 3)), Err(Error::OddIndex(3))));
    }

    #[test]
    fn plat_component_labels() {
        assert_eq!(plat_component_of_strand(&w("s2^2", 4)).unwrap(), vec![0, 0, 1, 1]);
        assert_eq!(plat_component_of_strand(&w("s2^3", 4)).unwrap(), vec![0, 0, 0, 0]);
    }
}
