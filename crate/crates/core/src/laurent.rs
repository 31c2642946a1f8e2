//! Laurent polynomials in a single indeterminate `q` with arbitrary-precision
//! integer coefficients, plus exact rationals for point evaluation.
//!
//! A [`LaurentPoly`] is stored sparsely as an ordered map from exponent to a
//! nonzero coefficient. The zero polynomial is the empty map, so structural
//! equality is mathematical equality.
//!
//! Exponent arithmetic is checked. The `checked_*` methods report
//! [`Error::Overflow`]; the operator impls (`*`, `+`, ...) panic instead of
//! wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::qpow(0)
    }

    /// The monomial `q^e`.
    pub fn qpow(e: i64) -> Self {
        Self::monomial(e, BigInt::one())
    }

    /// The monomial `c * q^e` (zero when `c == 0`).
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Duplicate
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *terms.entry(e).or_default() += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// `1 - c*q^e`, the shape of every q-Pochhammer factor.
    pub fn one_minus(e: i64, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        Self::from_terms([(0, BigInt::one()), (e, -c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// `(minimum exponent, maximum exponent)`.
    pub fn valuation_degree(&self) -> Result<(i64, i64)> {
        let lo = self.terms.keys().next().ok_or(Error::ZeroPolynomial)?;
        let hi = self.terms.keys().next_back().ok_or(Error::ZeroPolynomial)?;
        Ok((*lo, *hi))
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(*e).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.checked_add(*e2).ok_or(Error::Overflow)?;
                *terms.entry(e).or_default() += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { terms })
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                k.checked_add(e)
                    .map(|k| (k, c.clone()))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// `sign * q^e * self`, the shape of every transformation prefactor.
    pub fn signed_shift(&self, negative: bool, e: i64) -> Result<Self> {
        let p = self.shift(e)?;
        Ok(if negative { -p } else { p })
    }

    /// Replaces `q` by `1/q`.
    pub fn substitute_qinv(&self) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                e.checked_neg()
                    .map(|e| (e, c.clone()))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    /// Exact quotient `self / d`.
    ///
    /// Both operands are shifted to ordinary polynomials and divided from the
    /// low end; any nonzero remainder is [`Error::InexactDivision`].
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (dv, dd) = d.valuation_degree().map_err(|_| Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (pv, pd) = self.valuation_degree()?;
        let divisor = dense_window(d, dv, dd)?;
        let mut rem = dense_window(self, pv, pd)?;
        if rem.len() < divisor.len() {
            return Err(Error::InexactDivision);
        }
        let qlen = rem.len() - divisor.len() + 1;
        let lead = &divisor[0];
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                quot.push(c);
                continue;
            }
            let (t, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, dj) in divisor.iter().enumerate().skip(1) {
                rem[i + j] -= &t * dj;
            }
            quot.push(t);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        let offset = pv.checked_sub(dv).ok_or(Error::Overflow)?;
        let mut terms = BTreeMap::new();
        for (i, c) in quot.into_iter().enumerate() {
            if !c.is_zero() {
                let e = offset.checked_add(i as i64).ok_or(Error::Overflow)?;
                terms.insert(e, c);
            }
        }
        Ok(Self { terms })
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        let x = &q0.0;
        if x.is_zero() {
            if self.terms.keys().any(|e| *e < 0) {
                return Err(Error::EvalAtZero);
            }
            return Ok(Rational(BigRational::from_integer(self.coeff(0))));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += rational_pow(x, *e) * BigRational::from_integer(c.clone());
        }
        Ok(Rational(acc))
    }

    /// `{"terms":[{"exp":e,"coeff":"c"},...]}`, ascending exponents.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("LaurentPoly serialization is infallible")
    }
}

fn dense_window(p: &LaurentPoly, lo: i64, hi: i64) -> Result<Vec<BigInt>> {
    let width = hi.checked_sub(lo).ok_or(Error::Overflow)?;
    let width = usize::try_from(width).map_err(|_| Error::Overflow)?;
    let mut v = vec![BigInt::zero(); width + 1];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    Ok(v)
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        n >>= 1;
        if n > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sep)?;
            let mag = c.abs();
            match *e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: i64,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| JsonTerm {
                    exp: *e,
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            pairs.push((t.exp, c));
        }
        Ok(LaurentPoly::from_terms(pairs))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a.add_ref(b));
forward_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a
    .checked_mul(b)
    .expect("exponent overflow in LaurentPoly multiplication"));

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

/// Exact reduced fraction; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/r` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational `{s}`"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, r)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let r: BigInt = r.trim().parse().map_err(|_| bad())?;
                Rational::new(p, r)
            }
            None => Ok(Rational::integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}
