//! Randomized checks that the Jones polynomial survives Markov and
//! Reidemeister moves.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::diagram::{closure_trace, LinkDiagram, Move, MoveKind};
use crate::error::Result;
use crate::jones::jones_polynomial;

/// Longest random braid word the suite draws.
pub const MAX_WORD: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub trials: usize,
    pub passed: usize,
    /// first few failing cases, for diagnosis
    pub failures: Vec<String>,
}

impl CheckTally {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub seed: u64,
    pub checks: Vec<CheckTally>,
}

impl InvarianceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckTally::all_passed)
    }
}

fn random_word(rng: &mut ChaCha8Rng, min_index: usize) -> Result<BraidWord> {
    let n = rng.gen_range(min_index.max(2)..=4);
    let len = rng.gen_range(1..=MAX_WORD);
    BraidWord::random_with(n, len, rng)
}

type Trial = fn(&mut ChaCha8Rng) -> Result<std::result::Result<(), String>>;

fn conjugation(rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let w = random_word(rng, 2)?;
    let len = rng.gen_range(1..=4);
    let a = BraidWord::random_with(w.index(), len, rng)?;
    let c = w.markov_conjugate(&a)?;
    let (x, y) = (jones_polynomial(&closure_trace(&w))?, jones_polynomial(&closure_trace(&c))?);
    Ok(if x == y { Ok(()) } else { Err(format!("{w} conjugated by {a}")) })
}

fn stabilization(rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let w = random_word(rng, 2)?;
    let positive = rng.gen_bool(0.5);
    let s = w.markov_stabilize(positive);
    let (x, y) = (jones_polynomial(&closure_trace(&w))?, jones_polynomial(&closure_trace(&s))?);
    Ok(if x == y && s.index() == w.index() + 1 {
        Ok(())
    } else {
        Err(format!("{w} stabilized ({})", if positive { "+" } else { "-" }))
    })
}

/// A closure together with a random site of one of the given kinds.
fn pick_site(d: &LinkDiagram, kinds: &[MoveKind], rng: &mut ChaCha8Rng) -> Option<Move> {
    let all: Vec<Move> = kinds.iter().flat_map(|&k| d.sites(k)).collect();
    all.choose(rng).cloned()
}

/// Applies `mv` and checks the invariants every Reidemeister move keeps,
/// returning the changes in crossing count and writhe.
fn moved(d: &LinkDiagram, mv: &Move) -> Result<std::result::Result<(i64, i64), String>> {
    let e = d.apply_move(mv)?;
    let v = e.validate();
    if !v.is_empty() {
        return Ok(Err(format!("{mv:?} on {d}: invalid result {}", v[0])));
    }
    if e.component_count()? != d.component_count()? {
        return Ok(Err(format!("{mv:?} on {d}: component count changed")));
    }
    if jones_polynomial(&e)? != jones_polynomial(d)? {
        return Ok(Err(format!("{mv:?} on {d}: Jones polynomial changed")));
    }
    let dk = e.crossing_count() as i64 - d.crossing_count() as i64;
    Ok(Ok((dk, e.writhe() - d.writhe())))
}

fn reidemeister_1(rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let d = closure_trace(&random_word(rng, 2)?);
    let mv = pick_site(&d, &[MoveKind::R1Add, MoveKind::R1Remove], rng).expect("curls fit anywhere");
    Ok(moved(&d, &mv)?.and_then(|(dk, dw)| {
        let ok = match mv {
            Move::KinkAdd { sign, .. } => dk == 1 && dw == sign as i64,
            _ => dk == -1 && dw.abs() == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("{mv:?} on {d}: crossings {dk:+}, writhe {dw:+}"))
        }
    }))
}

fn reidemeister_2(rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let d = closure_trace(&random_word(rng, 2)?);
    let mv = pick_site(&d, &[MoveKind::R2Add, MoveKind::R2Remove], rng).expect("a face has two sides");
    Ok(moved(&d, &mv)?.and_then(|(dk, dw)| {
        if dk.abs() == 2 && dw == 0 {
            Ok(())
        } else {
            Err(format!("{mv:?} on {d}: crossings {dk:+}, writhe {dw:+}"))
        }
    }))
}

/// A random word with a braid-relation triple spliced in, so that its
/// closure has at least one triangle to slide across.
fn word_with_triangle(rng: &mut ChaCha8Rng) -> Result<BraidWord> {
    let w = random_word(rng, 3)?;
    let i = rng.gen_range(1..w.index() - 1);
    let positive = rng.gen_bool(0.5);
    let triple = [i, i + 1, i].map(|generator| Letter { generator, positive });
    let at = rng.gen_range(0..=w.len());
    let mut letters = w.letters().to_vec();
    letters.splice(at..at, triple);
    BraidWord::new(w.index(), letters)
}

fn reidemeister_3(rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let w = word_with_triangle(rng)?;
    let d = closure_trace(&w);
    let Some(mv) = pick_site(&d, &[MoveKind::R3], rng) else {
        return Ok(Err(format!("no triangle in the closure of {w}")));
    };
    Ok(moved(&d, &mv)?.and_then(|(dk, dw)| {
        if dk == 0 && dw == 0 {
            Ok(())
        } else {
            Err(format!("{mv:?} on {d}: crossings {dk:+}, writhe {dw:+}"))
        }
    }))
}

pub const CHECKS: [(&str, Trial); 5] = [
    ("markov_conjugation", conjugation),
    ("markov_stabilization", stabilization),
    ("reidemeister_1", reidemeister_1),
    ("reidemeister_2", reidemeister_2),
    ("reidemeister_3", reidemeister_3),
];

/// Runs `trials` seeded trials of every check. Each check draws from its
/// own stream, so adding trials never changes earlier ones.
pub fn invariance_suite(trials: usize, seed: u64) -> Result<InvarianceReport> {
    let mut checks = Vec::new();
    for (stream, (name, trial)) in CHECKS.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64);
        let mut tally = CheckTally { name: name.to_string(), trials, passed: 0, failures: Vec::new() };
        for _ in 0..trials {
            match trial(&mut rng)? {
                Ok(()) => tally.passed += 1,
                Err(msg) if tally.failures.len() < 5 => tally.failures.push(msg),
                Err(_) => {}
            }
        }
        checks.push(tally);
    }
    Ok(InvarianceReport { seed, checks })
}
