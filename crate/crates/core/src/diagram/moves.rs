//! Reidemeister moves as surgery on PD codes.
//!
//! A face side is named by the end its edge is walked away from; walking
//! from that end to the other one keeps the face on the left.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{Crossing, EdgeId, End, LinkDiagram, UnionFind};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] =
        [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// Adds a curl on `edge` (0 targets a free loop). With `over_first`
    /// the strand meets the new crossing on the over strand first.
    KinkAdd { edge: EdgeId, sign: i8, over_first: bool },
    /// Removes a crossing two of whose adjacent slots share an edge.
    KinkRemove { crossing: usize },
    /// Pushes the side leaving `over` across the side leaving `under`;
    /// both sides must bound the same face.
    PokeAdd { over: End, under: End },
    /// Removes a bigon whose two crossings share the over strand.
    PokeRemove { crossings: [usize; 2] },
    /// Slides a strand across the crossing opposite a triangular face.
    Slide { edges: [EdgeId; 3] },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::KinkAdd { .. } => MoveKind::R1Add,
            Move::KinkRemove { .. } => MoveKind::R1Remove,
            Move::PokeAdd { .. } => MoveKind::R2Add,
            Move::PokeRemove { .. } => MoveKind::R2Remove,
            Move::Slide { .. } => MoveKind::R3,
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::SiteNotAdmissible(msg.into())
}

pub(super) fn apply(d: &LinkDiagram, mv: &Move) -> Result<LinkDiagram> {
    match *mv {
        Move::KinkAdd { edge, sign, over_first } => kink_add(d, edge, sign, over_first),
        Move::KinkRemove { crossing } => kink_remove(d, crossing),
        Move::PokeAdd { over, under } => poke_add(d, over, under),
        Move::PokeRemove { crossings } => poke_remove(d, crossings),
        Move::Slide { edges } => slide(d, edges),
    }
}

pub(super) fn sites(d: &LinkDiagram, kind: MoveKind) -> Vec<Move> {
    match kind {
        MoveKind::R1Add => {
            let mut edges: Vec<EdgeId> = d.edge_ends().into_keys().collect();
            edges.sort_unstable();
            if d.free_loops() > 0 {
                edges.insert(0, 0);
            }
            let mut out = Vec::new();
            for edge in edges {
                for sign in [1, -1] {
                    for over_first in [false, true] {
                        out.push(Move::KinkAdd { edge, sign, over_first });
                    }
                }
            }
            out
        }
        MoveKind::R1Remove => (0..d.crossing_count())
            .filter(|&c| kink_loop(&d.crossings()[c]).is_some())
            .map(|crossing| Move::KinkRemove { crossing })
            .collect(),
        MoveKind::R2Add => {
            let mut out = Vec::new();
            for face in d.faces() {
                let sides: Vec<End> = face.iter().map(|&(c, s)| (c, (s + 3) % 4)).collect();
                for &over in &sides {
                    for &under in &sides {
                        if d.edge(over) != d.edge(under) {
                            out.push(Move::PokeAdd { over, under });
                        }
                    }
                }
            }
            out
        }
        MoveKind::R2Remove => {
            let mut out = Vec::new();
            for face in d.faces() {
                if let [(a, sa), (b, sb)] = face[..] {
                    if a != b && bigon_over_edge(d, (a, sa), (b, sb)).is_some() {
                        out.push(Move::PokeRemove { crossings: [a.min(b), a.max(b)] });
                    }
                }
            }
            out.sort_by_key(|m| match m {
                Move::PokeRemove { crossings } => *crossings,
                _ => unreachable!(),
            });
            out.dedup();
            out
        }
        MoveKind::R3 => {
            let mut out = Vec::new();
            for face in d.faces() {
                if face.len() != 3 {
                    continue;
                }
                let cs: HashSet<usize> = face.iter().map(|e| e.0).collect();
                if cs.len() != 3 {
                    continue;
                }
                let mut edges = [0; 3];
                for (k, &end) in face.iter().enumerate() {
                    edges[k] = d.edge(end);
                }
                if slide_admissible(d, edges) {
                    edges.sort_unstable();
                    out.push(Move::Slide { edges });
                }
            }
            out
        }
    }
}

/// Removes `dead` crossings, merges each label pair in `joins`, and turns
/// merged classes with no surviving ends into free loops.
fn rebuild(
    d: &LinkDiagram,
    mut crossings: Vec<Crossing>,
    dead: &[usize],
    joins: &[(EdgeId, EdgeId)],
    vanished: &[EdgeId],
) -> LinkDiagram {
    let mut ids: HashMap<EdgeId, usize> = HashMap::new();
    let id = |e: EdgeId, ids: &mut HashMap<EdgeId, usize>| {
        let next = ids.len();
        *ids.entry(e).or_insert(next)
    };
    for &(a, b) in joins {
        id(a, &mut ids);
        id(b, &mut ids);
    }
    let mut uf = UnionFind::new(ids.len());
    for &(a, b) in joins {
        uf.union(ids[&a], ids[&b]);
    }
    // representative label of each class: the smallest
    let mut rep: HashMap<usize, EdgeId> = HashMap::new();
    for (&e, &i) in &ids {
        let r = uf.find(i);
        let slot = rep.entry(r).or_insert(e);
        *slot = (*slot).min(e);
    }
    let mut keep = Vec::new();
    for (i, c) in crossings.drain(..).enumerate() {
        if dead.contains(&i) {
            continue;
        }
        let edges = c.edges.map(|e| match ids.get(&e) {
            Some(&i) => rep[&uf.find(i)],
            None => e,
        });
        keep.push(Crossing::new(edges, c.sign));
    }
    let alive: HashSet<EdgeId> = keep.iter().flat_map(|c| c.edges).collect();
    let mut loops = d.free_loops();
    let mut counted = HashSet::new();
    for (&e, &i) in &ids {
        let r = uf.find(i);
        if vanished.contains(&e) || alive.contains(&rep[&r]) {
            continue;
        }
        if counted.insert(r) {
            loops += 1;
        }
    }
    LinkDiagram::from_parts(keep, loops)
}

fn kink_add(d: &LinkDiagram, edge: EdgeId, sign: i8, over_first: bool) -> Result<LinkDiagram> {
    if sign != 1 && sign != -1 {
        return Err(bad(format!("sign {sign}")));
    }
    let next = d.max_label() + 1;
    let mut crossings = d.crossings().to_vec();
    let mut loops = d.free_loops();
    let (i, x, o) = if edge == 0 {
        if loops == 0 {
            return Err(bad("no free loop"));
        }
        loops -= 1;
        (next, next + 1, next)
    } else {
        let ends = d.edge_ends();
        let Some(list) = ends.get(&edge) else {
            return Err(bad(format!("no edge {edge}")));
        };
        // the incoming end of `edge` now receives the new outgoing label
        let &(c, s) = list.iter().find(|&&(c, s)| !crossings[c].is_outgoing(s)).expect("validated diagram");
        crossings[c].edges[s] = next + 1;
        (edge, next, next + 1)
    };
    let new = match (over_first, sign) {
        (false, 1) => Crossing::new([i, x, x, o], 1),
        (false, _) => Crossing::new([i, o, x, x], -1),
        (true, 1) => Crossing::new([x, i, o, x], 1),
        (true, _) => Crossing::new([x, x, o, i], -1),
    };
    crossings.push(new);
    Ok(LinkDiagram::from_parts(crossings, loops))
}

/// Slot pair `(s, s+1)` holding the loop edge of a curl.
fn kink_loop(c: &Crossing) -> Option<usize> {
    (0..4).find(|&s| c.edges[s] == c.edges[(s + 1) % 4])
}

fn kink_remove(d: &LinkDiagram, crossing: usize) -> Result<LinkDiagram> {
    let Some(c) = d.crossings().get(crossing) else {
        return Err(bad(format!("no crossing {crossing}")));
    };
    let Some(s) = kink_loop(c) else {
        return Err(bad(format!("crossing {crossing} is not a curl")));
    };
    let x = c.edges[s];
    let a = c.edges[(s + 2) % 4];
    let b = c.edges[(s + 3) % 4];
    Ok(rebuild(d, d.crossings().to_vec(), &[crossing], &[(a, b)], &[x]))
}

fn poke_add(d: &LinkDiagram, over: End, under: End) -> Result<LinkDiagram> {
    let ends = d.edge_ends();
    let check = |e: End| e.0 < d.crossing_count() && e.1 < 4;
    if !check(over) || !check(under) {
        return Err(bad("side out of range"));
    }
    let e1 = d.edge(over);
    let e2 = d.edge(under);
    if e1 == e2 {
        return Err(bad("sides lie on the same edge"));
    }
    let face_of = |start: End| -> Vec<End> {
        let mut face = Vec::new();
        let mut cur = start;
        loop {
            face.push(cur);
            cur = (cur.0, (cur.1 + 3) % 4);
            cur = d.other_end(&ends, cur);
            if cur == start {
                return face;
            }
        }
    };
    // arrival end for the side leaving `over`
    let arrive1 = d.other_end(&ends, over);
    let arrive2 = d.other_end(&ends, under);
    if !face_of(arrive1).contains(&arrive2) {
        return Err(bad("sides do not bound a common face"));
    }

    let mut crossings = d.crossings().to_vec();
    // orientation of each side relative to the walk
    let o1: i8 = if crossings[over.0].is_outgoing(over.1) { 1 } else { -1 };
    let o2: i8 = if crossings[under.0].is_outgoing(under.1) { 1 } else { -1 };

    let n = d.max_label();
    let (alpha, beta, gamma) = (n + 1, n + 2, n + 3);
    let (rho, mu, nu) = (n + 4, n + 5, n + 6);
    crossings[over.0].edges[over.1] = alpha;
    crossings[arrive1.0].edges[arrive1.1] = gamma;
    crossings[under.0].edges[under.1] = rho;
    crossings[arrive2.0].edges[arrive2.1] = nu;

    // In a frame where the over side runs east along the bottom of the
    // face and the under side west along its top, the finger rises at x=-1
    // (crossing a) and descends at x=+1 (crossing b).
    let a = if o2 > 0 {
        Crossing::new([mu, beta, nu, alpha], -o1 * o2)
    } else {
        Crossing::new([nu, alpha, mu, beta], -o1 * o2)
    };
    let b = if o2 > 0 {
        Crossing::new([rho, beta, mu, gamma], o1 * o2)
    } else {
        Crossing::new([mu, gamma, rho, beta], o1 * o2)
    };
    crossings.push(a);
    crossings.push(b);
    Ok(LinkDiagram::from_parts(crossings, d.free_loops()))
}

/// For a bigon face listed by its arrival ends, the bigon edge that is
/// over at both crossings.
fn bigon_over_edge(d: &LinkDiagram, p: End, q: End) -> Option<(EdgeId, EdgeId)> {
    let ep = d.edge(p);
    let eq = d.edge(q);
    // each bigon edge has one end at each crossing
    let slot = |c: usize, e: EdgeId| -> Vec<usize> { (0..4).filter(|&s| d.crossings()[c].edges[s] == e).collect() };
    let (a, b) = (p.0, q.0);
    let (pa, pb, qa, qb) = (slot(a, ep), slot(b, ep), slot(a, eq), slot(b, eq));
    if pa.len() != 1 || pb.len() != 1 || qa.len() != 1 || qb.len() != 1 {
        return None;
    }
    let over = |s: usize| Crossing::is_over(s);
    if over(pa[0]) && over(pb[0]) && !over(qa[0]) && !over(qb[0]) {
        Some((ep, eq))
    } else if over(qa[0]) && over(qb[0]) && !over(pa[0]) && !over(pb[0]) {
        Some((eq, ep))
    } else {
        None
    }
}

fn poke_remove(d: &LinkDiagram, [a, b]: [usize; 2]) -> Result<LinkDiagram> {
    if a == b || a >= d.crossing_count() || b >= d.crossing_count() {
        return Err(bad("need two distinct crossings"));
    }
    let face = d
        .faces()
        .into_iter()
        .find(|f| {
            f.len() == 2 && {
                let cs = [f[0].0, f[1].0];
                cs.contains(&a) && cs.contains(&b)
            }
        })
        .ok_or_else(|| bad("crossings do not bound a bigon"))?;
    let (top, bottom) = bigon_over_edge(d, face[0], face[1]).ok_or_else(|| bad("bigon is not a poke"))?;
    let opposite = |c: usize, e: EdgeId| {
        let cr = &d.crossings()[c];
        let s = (0..4).find(|&s| cr.edges[s] == e).expect("bigon edge");
        cr.edges[(s + 2) % 4]
    };
    let joins = [(opposite(a, top), opposite(b, top)), (opposite(a, bottom), opposite(b, bottom))];
    Ok(rebuild(d, d.crossings().to_vec(), &[a, b], &joins, &[top, bottom]))
}

/// Ends of each triangle edge, with the three crossings distinct and one
/// strand over at both of its crossings.
fn triangle_ends(d: &LinkDiagram, edges: [EdgeId; 3]) -> Option<[[End; 2]; 3]> {
    let all = d.edge_ends();
    let mut out = [[(0, 0); 2]; 3];
    let mut cs = HashSet::new();
    for (k, e) in edges.iter().enumerate() {
        let list = all.get(e)?;
        if list.len() != 2 || list[0].0 == list[1].0 {
            return None;
        }
        out[k] = [list[0], list[1]];
        cs.insert(list[0].0);
        cs.insert(list[1].0);
    }
    if cs.len() != 3 {
        return None;
    }
    let on_top = out.iter().any(|[p, q]| Crossing::is_over(p.1) && Crossing::is_over(q.1));
    on_top.then_some(out)
}

fn slide_admissible(d: &LinkDiagram, edges: [EdgeId; 3]) -> bool {
    let wanted: HashSet<EdgeId> = edges.into_iter().collect();
    wanted.len() == 3
        && triangle_ends(d, edges).is_some()
        && d.faces().iter().any(|f| f.len() == 3 && f.iter().map(|&e| d.edge(e)).collect::<HashSet<_>>() == wanted)
}

fn slide(d: &LinkDiagram, edges: [EdgeId; 3]) -> Result<LinkDiagram> {
    if !slide_admissible(d, edges) {
        return Err(bad("edges do not bound a slidable triangle"));
    }
    let ends = triangle_ends(d, edges).expect("admissible");
    let old = d.crossings();
    let mut crossings = old.to_vec();
    // Along each strand the two triangle crossings trade places: every
    // crossing keeps its slots, but the slots that faced into the triangle
    // now face away from it.
    for (k, [(x, a), (y, b)]) in ends.into_iter().enumerate() {
        let ext_x = old[x].edges[(a + 2) % 4];
        let ext_y = old[y].edges[(b + 2) % 4];
        crossings[x].edges[a] = ext_y;
        crossings[y].edges[b] = ext_x;
        crossings[x].edges[(a + 2) % 4] = edges[k];
        crossings[y].edges[(b + 2) % 4] = edges[k];
    }
    Ok(LinkDiagram::from_parts(crossings, d.free_loops()))
}
