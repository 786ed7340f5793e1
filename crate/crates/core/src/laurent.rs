//! Exact Laurent polynomials in one variable with quarter-integer exponents,
//! plus numeric evaluation at roots of unity.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fixed denominator of every exponent.
pub const EXP_DEN: i64 = 4;

/// A Laurent polynomial `sum c_k x^(k/4)` with big-integer coefficients.
///
/// Terms are keyed by the exponent numerator over [`EXP_DEN`]; zero
/// coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * x^(num/4)`.
    pub fn monomial(c: impl Into<BigInt>, num: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(num, c.into());
        p
    }

    /// `x^k` for an integer power `k`.
    pub fn var_pow(k: i64) -> Self {
        Self::monomial(1, k * EXP_DEN)
    }

    /// Builds a polynomial from `(numerator, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, num: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(num).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&num);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order, as `(numerator, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `x^(num/4)`.
    pub fn coeff(&self, num: i64) -> BigInt {
        self.terms.get(&num).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^(num/4)`.
    pub fn shift(&self, num: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + num, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Integer power; negative powers are allowed only for monomials
    /// with unit coefficient.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            let mut acc = Self::one();
            let mut base = self.clone();
            let mut k = k as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                base = &base * &base;
                k >>= 1;
            }
            return Ok(acc);
        }
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.abs().is_one() => {
                let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
                Ok(Self::monomial(sign, -e * k.abs()))
            }
            _ => Err(Error::InvalidParameter("negative power of a non-unit Laurent polynomial".into())),
        }
    }

    /// Replaces every exponent `e` by `e * factor/4`.
    pub fn substitute_power(&self, factor: i64) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidParameter("substitution factor must be nonzero".into()));
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let prod = e * factor;
            if prod % EXP_DEN != 0 {
                return Err(Error::NonRepresentableExponent { num: *e, factor });
            }
            out.add_term(prod / EXP_DEN, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at `x = exp(2 pi i / r)`, principal branch for fractional
    /// powers: `x^(k/4) = exp(2 pi i k / (4 r))`.
    pub fn evaluate_at_root(&self, r: u32) -> Result<Complex64> {
        if r == 0 {
            return Err(Error::InvalidParameter("root order r must be >= 1".into()));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += root_power(*e, r) * c;
        }
        Ok(acc)
    }

    /// Evaluates at an arbitrary complex `x`, given `x^(1/4)`.
    pub fn evaluate_with_quarter(&self, quarter: Complex64) -> Complex64 {
        self.terms.iter().map(|(e, c)| quarter.powi(*e as i32) * c.to_f64().unwrap_or(f64::NAN)).sum()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms.iter().map(|(e, c)| JsonTerm { num: *e, den: EXP_DEN, coeff: c.to_string() }).collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            if t.den <= 0 || EXP_DEN % t.den != 0 {
                return Err(Error::InvalidParameter(format!("unsupported denominator {}", t.den)));
            }
            let c: BigInt =
                t.coeff.parse().map_err(|_| Error::InvalidParameter(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(t.num * (EXP_DEN / t.den), c);
        }
        Ok(p)
    }

    /// Pretty form using the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !unit {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(var);
            if *e != EXP_DEN {
                out.push('^');
                out.push_str(&format_exponent(*e));
            }
        }
        out
    }
}

/// `exp(2 pi i num / (4 r))`, exact on the axes.
pub(crate) fn root_power(num: i64, r: u32) -> Complex64 {
    let period = EXP_DEN * r as i64;
    let k = num.rem_euclid(period);
    if (4 * k) % period == 0 {
        return match 4 * k / period {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / period as f64)
}

fn format_exponent(num: i64) -> String {
    let g = gcd(num.abs(), EXP_DEN);
    let (n, d) = (num / g, EXP_DEN / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("({n}/{d})")
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// One term of the JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub num: i64,
    pub den: i64,
    pub coeff: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        LaurentPoly::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}
