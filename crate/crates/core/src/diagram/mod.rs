//! Oriented link diagrams as PD codes.
//!
//! A crossing lists its four edge labels counterclockwise starting from the
//! incoming under-strand. The under-strand runs from position 0 to 2. The
//! over-strand runs 1 -> 3 on a positive crossing and 3 -> 1 on a negative
//! one; a crossing is positive when the over direction is the under
//! direction turned a quarter counterclockwise. Crossing-free circles are
//! counted separately since a PD code cannot express them.

mod closure;
mod moves;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use closure::{closure_plat, closure_trace, plat_component_of_strand};
pub use moves::{Move, MoveKind};

pub type EdgeId = usize;

/// A position on a crossing: `(crossing index, slot 0..4)`.
pub type End = (usize, usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub edges: [EdgeId; 4],
    /// +1 or -1.
    pub sign: i8,
}

impl Crossing {
    pub fn new(edges: [EdgeId; 4], sign: i8) -> Self {
        Self { edges, sign }
    }

    /// Whether the edge at `slot` leaves this crossing.
    pub fn is_outgoing(&self, slot: usize) -> bool {
        match slot {
            0 => false,
            2 => true,
            1 => self.sign < 0,
            _ => self.sign > 0,
        }
    }

    /// Whether `slot` belongs to the over-strand.
    pub fn is_over(slot: usize) -> bool {
        slot % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    /// Label 0 is reserved.
    ZeroLabel,
    EdgeMultiplicity {
        edge: EdgeId,
        count: usize,
    },
    /// The edge is not entered at exactly one end and left at the other.
    Orientation {
        edge: EdgeId,
    },
    BadSign {
        crossing: usize,
    },
    /// Face count disagrees with the Euler characteristic of a planar
    /// 4-valent graph.
    Planarity {
        faces: usize,
        expected: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroLabel => write!(f, "edge label 0 is not allowed"),
            Violation::EdgeMultiplicity { edge, count } => {
                write!(f, "edge multiplicity: edge {edge} appears {count} times")
            }
            Violation::Orientation { edge } => {
                write!(f, "orientation: edge {edge} needs one incoming and one outgoing end")
            }
            Violation::BadSign { crossing } => write!(f, "crossing {crossing} has sign 0"),
            Violation::Planarity { faces, expected } => {
                write!(f, "planarity: {faces} faces, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl LinkDiagram {
    /// A validated diagram.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let d = Self { crossings, free_loops };
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::MalformedDiagram(v.iter().map(ToString::to_string).collect()))
        }
    }

    /// No validation; use [`LinkDiagram::validate`] afterwards.
    pub fn from_parts(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Self { crossings, free_loops }
    }

    /// `k` disjoint circles without crossings.
    pub fn unlink(k: usize) -> Self {
        Self { crossings: Vec::new(), free_loops: k }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn edge(&self, (c, s): End) -> EdgeId {
        self.crossings[c].edges[s]
    }

    /// Both ends of every edge.
    pub(crate) fn edge_ends(&self) -> HashMap<EdgeId, Vec<End>> {
        let mut map: HashMap<EdgeId, Vec<End>> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (s, &e) in c.edges.iter().enumerate() {
                map.entry(e).or_default().push((ci, s));
            }
        }
        map
    }

    /// Checks the structural invariants. Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if c.sign == 0 {
                out.push(Violation::BadSign { crossing: i });
            }
            if c.edges.contains(&0) && !out.contains(&Violation::ZeroLabel) {
                out.push(Violation::ZeroLabel);
            }
        }
        let ends: BTreeMap<_, _> = self.edge_ends().into_iter().collect();
        let mut well_formed = true;
        for (&e, list) in &ends {
            if list.len() != 2 {
                out.push(Violation::EdgeMultiplicity { edge: e, count: list.len() });
                well_formed = false;
                continue;
            }
            let outs = list.iter().filter(|&&(c, s)| self.crossings[c].is_outgoing(s)).count();
            if outs != 1 {
                out.push(Violation::Orientation { edge: e });
            }
        }
        if well_formed && !self.crossings.is_empty() {
            let faces = self.faces().len();
            // every connected piece of the 4-valent graph is a planar map on
            // its own sphere: V - E + F = 2 with E = 2V
            let expected = self.crossings.len() + 2 * self.split_components();
            if faces != expected {
                out.push(Violation::Planarity { faces, expected });
            }
        }
        out
    }

    /// The other end of the edge at `end`.
    pub(crate) fn other_end(&self, ends: &HashMap<EdgeId, Vec<End>>, end: End) -> End {
        let list = &ends[&self.edge(end)];
        if list[0] == end {
            list[1]
        } else {
            list[0]
        }
    }

    /// Faces as cyclic lists of arrival ends; walking an edge into the
    /// listed end keeps the face on the left.
    pub fn faces(&self) -> Vec<Vec<End>> {
        let ends = self.edge_ends();
        let mut seen = vec![[false; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                if seen[c][s] {
                    continue;
                }
                let mut face = Vec::new();
                let mut cur = (c, s);
                while !seen[cur.0][cur.1] {
                    seen[cur.0][cur.1] = true;
                    face.push(cur);
                    cur = self.other_end(&ends, (cur.0, (cur.1 + 3) % 4));
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected components of the underlying 4-valent graph.
    fn split_components(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        for list in self.edge_ends().values() {
            if list.len() == 2 {
                uf.union(list[0].0, list[1].0);
            }
        }
        uf.count()
    }

    /// Edge labels of each component in traversal order, starting from
    /// the smallest label. Free loops are not included.
    pub fn component_edges(&self) -> Vec<Vec<EdgeId>> {
        let ends = self.edge_ends();
        let mut labels: Vec<EdgeId> = ends.keys().copied().collect();
        labels.sort_unstable();
        let mut seen: HashMap<EdgeId, bool> = HashMap::new();
        let mut out = Vec::new();
        for &start in &labels {
            if seen.contains_key(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            loop {
                if seen.insert(e, true).is_some() {
                    break;
                }
                comp.push(e);
                // follow e to the crossing it enters, then through the strand
                let Some(&head) = ends[&e].iter().find(|&&(c, s)| !self.crossings[c].is_outgoing(s)) else {
                    break;
                };
                e = self.edge((head.0, (head.1 + 2) % 4));
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> Result<usize> {
        let v = self.validate();
        if !v.is_empty() {
            return Err(Error::MalformedDiagram(v.iter().map(ToString::to_string).collect()));
        }
        Ok(self.component_edges().len() + self.free_loops)
    }

    /// Reflection through the projection plane: every crossing switches.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.edges;
                if c.sign > 0 {
                    Crossing::new([b, cc, d, a], -1)
                } else {
                    Crossing::new([d, a, b, cc], 1)
                }
            })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// Relabels edges 1, 2, ... in order of first appearance.
    pub fn canonical(&self) -> LinkDiagram {
        let mut map: HashMap<EdgeId, EdgeId> = HashMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let mut edges = [0; 4];
                for (slot, e) in c.edges.iter().enumerate() {
                    let next = map.len() + 1;
                    edges[slot] = *map.entry(*e).or_insert(next);
                }
                Crossing::new(edges, c.sign)
            })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    pub(crate) fn max_label(&self) -> EdgeId {
        self.crossings.iter().flat_map(|c| c.edges).max().unwrap_or(0)
    }

    pub fn apply_move(&self, mv: &Move) -> Result<LinkDiagram> {
        moves::apply(self, mv)
    }

    /// Every admissible site for the given move kind.
    pub fn sites(&self, kind: MoveKind) -> Vec<Move> {
        moves::sites(self, kind)
    }
}

/// Applies a Reidemeister move at the site it names.
pub fn apply_reidemeister(d: &LinkDiagram, mv: &Move) -> Result<LinkDiagram> {
    d.apply_move(mv)
}

/// `Ok(())` or every violated diagram invariant.
pub fn validate_pd(d: &LinkDiagram) -> std::result::Result<(), Vec<Violation>> {
    let v = d.validate();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.edges;
                let s = if c.sign > 0 { '+' } else { '-' };
                format!("X[{a},{b},{cc},{d};{s}]")
            })
            .collect();
        if self.free_loops > 0 || parts.is_empty() {
            parts.push(format!("O[{}]", self.free_loops));
        }
        f.write_str(&parts.join(", "))
    }
}

impl FromStr for LinkDiagram {
    type Err = Error;

    /// Parses `X[a,b,c,d;+], ..., O[k]`; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        let mut rest = s.as_str();
        let mut pos = 0;
        let syntax = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.into() };
        while !rest.is_empty() {
            let close = rest.find(']').ok_or_else(|| syntax(pos, "missing ']'"))?;
            let (token, tail) = rest.split_at(close + 1);
            if let Some(body) = token.strip_prefix("X[").and_then(|t| t.strip_suffix(']')) {
                let (labels, sign) = body.split_once(';').ok_or_else(|| syntax(pos, "missing ';sign'"))?;
                let sign = match sign {
                    "+" | "+1" => 1,
                    "-" | "-1" => -1,
                    _ => return Err(syntax(pos, "sign must be + or -")),
                };
                let labels: Vec<EdgeId> = labels
                    .split(',')
                    .map(|l| l.parse().map_err(|_| syntax(pos, "bad edge label")))
                    .collect::<Result<_>>()?;
                let edges: [EdgeId; 4] = labels.try_into().map_err(|_| syntax(pos, "a crossing needs four labels"))?;
                crossings.push(Crossing::new(edges, sign));
            } else if let Some(body) = token.strip_prefix("O[").and_then(|t| t.strip_suffix(']')) {
                free_loops += body.parse::<usize>().map_err(|_| syntax(pos, "bad loop count"))?;
            } else {
                return Err(syntax(pos, "expected X[...] or O[...]"));
            }
            pos += token.len();
            rest = tail;
            if let Some(t) = rest.strip_prefix(',') {
                rest = t;
                pos += 1;
            }
        }
        LinkDiagram::new(crossings, free_loops)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
