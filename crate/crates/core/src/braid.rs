//! Braid words in the Artin generators of `B_n`.
//!
//! Word order: the leftmost letter acts first, i.e. it is the topmost
//! crossing of a braid drawn with strands running downward.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single letter `s_i^{+1}` or `s_i^{-1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    /// Generator index, 1-based.
    pub generator: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Self { generator, positive: true }
    }

    pub fn neg(generator: usize) -> Self {
        Self { generator, positive: false }
    }

    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Self { generator: self.generator, positive: !self.positive }
    }
}

/// A word in `B_n`. Powers are expanded, so every letter has exponent ±1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    index: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The identity of `B_n`.
    pub fn identity(index: usize) -> Result<Self> {
        if index < 1 {
            return Err(Error::InvalidIndex(index));
        }
        Ok(Self { index, letters: Vec::new() })
    }

    pub fn new(index: usize, letters: Vec<Letter>) -> Result<Self> {
        if index < 1 {
            return Err(Error::InvalidIndex(index));
        }
        for l in &letters {
            if l.generator < 1 || l.generator >= index {
                return Err(Error::GeneratorOutOfRange { generator: l.generator, index });
            }
        }
        Ok(Self { index, letters })
    }

    /// Builds a word from signed generator indices: `3` is `s3`, `-3` is `s3^-1`.
    pub fn from_signed(index: usize, letters: &[i64]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&g| {
                if g == 0 {
                    Err(Error::GeneratorOutOfRange { generator: 0, index })
                } else {
                    Ok(Letter { generator: g.unsigned_abs() as usize, positive: g > 0 })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(index, letters)
    }

    /// Parses text such as `"s3^-1 s2 s1^3"`.
    pub fn parse(text: &str, index: usize) -> Result<Self> {
        if index < 2 {
            return Err(Error::InvalidIndex(index));
        }
        let letters = parse_letters(text)?;
        Self::new(index, letters)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.index != other.index {
            return Err(Error::IndexMismatch(self.index, other.index));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { index: self.index, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { index: self.index, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Cancels adjacent `s_i s_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { index: self.index, letters: out }
    }

    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.index);
        for l in &self.letters {
            p = p.then(&Permutation::transposition(self.index, l.generator));
        }
        p
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    /// Markov move i): `a w a^-1`.
    pub fn markov_conjugate(&self, a: &BraidWord) -> Result<BraidWord> {
        a.concat(self)?.concat(&a.invert())
    }

    /// Markov move ii): embeds into `B_{n+1}` and appends `s_n^{±1}`.
    pub fn markov_stabilize(&self, positive: bool) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Letter { generator: self.index, positive });
        BraidWord { index: self.index + 1, letters }
    }

    /// The same letters viewed in a braid group with more strands.
    pub fn embed(&self, index: usize) -> Result<BraidWord> {
        if index < self.index {
            return Err(Error::IndexMismatch(self.index, index));
        }
        Ok(BraidWord { index, letters: self.letters.clone() })
    }

    /// The mirror image: every letter sign flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { index: self.index, letters: self.letters.iter().map(|l| l.inverse()).collect() }
    }

    /// Uniformly random word of the given length, deterministic in `seed`.
    pub fn random(index: usize, length: usize, seed: u64) -> Result<BraidWord> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(index, length, &mut rng)
    }

    pub fn random_with<R: Rng>(index: usize, length: usize, rng: &mut R) -> Result<BraidWord> {
        if index < 2 {
            return Err(Error::InvalidIndex(index));
        }
        let letters =
            (0..length).map(|_| Letter { generator: rng.gen_range(1..index), positive: rng.gen_bool(0.5) }).collect();
        Ok(BraidWord { index, letters })
    }
}

impl fmt::Display for BraidWord {
    /// Concrete syntax accepted by [`BraidWord::parse`], with runs of equal
    /// letters folded into powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = run as i64 * l.sign();
            if exp == 1 {
                write!(f, "s{}", l.generator)?;
            } else {
                write!(f, "s{}^{}", l.generator, exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut letters = Vec::new();
    let err = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    while pos < bytes.len() {
        if !letters.is_empty() && !bytes[pos - 1].is_ascii_whitespace() {
            return Err(err(pos, "expected whitespace between tokens"));
        }
        if bytes[pos] != b's' {
            return Err(err(pos, "expected 's'"));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(err(pos, "expected generator index"));
        }
        let generator: usize = text[start..pos].parse().map_err(|_| err(start, "generator index too large"))?;
        if generator == 0 {
            return Err(err(start, "generator index must be >= 1"));
        }
        let mut exp: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                pos += 1;
            }
            let digits = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digits == pos {
                return Err(err(pos, "expected exponent"));
            }
            exp = text[start..pos].parse().map_err(|_| err(start, "exponent too large"))?;
            if exp == 0 {
                return Err(err(start, "exponent must be nonzero"));
            }
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(err(pos, "unexpected character"));
        }
        let letter = Letter { generator, positive: exp > 0 };
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        skip_ws(&mut pos);
    }
    Ok(letters)
}

/// A permutation of `{1..n}`, stored 0-based: `map[i]` is the image of `i`.
///
/// For braids, `map[i]` is the bottom position of the strand starting at
/// top position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    /// Swap of the 1-based positions `i` and `i+1`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// Validates a 0-based image table.
    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &m in &map {
            if m >= n || seen[m] {
                return Err(Error::InvalidParameter(format!("not a permutation: {map:?}")));
            }
            seen[m] = true;
        }
        Ok(Self { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { map: self.map.iter().map(|&i| other.map[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            inv[m] = i;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// Cycle decomposition, each cycle listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.map[i];
            }
            out.push(cycle);
        }
        out
    }
}
