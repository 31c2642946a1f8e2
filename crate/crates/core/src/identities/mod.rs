//! Grid-driven verification of the q-binomial transformation and summation
//! identities.
//!
//! Every check compares canonical [`LaurentPoly`] values for exact equality.
//! The binomial values used by the checks come from a [`BinomialSource`],
//! normally [`qbinom`]; swapping in a perturbed source is how the checker
//! itself is tested.

pub mod report;
pub mod xseries;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rational};
use crate::qbinom::{absorption_sides, qbinom, qbinom_oracle, trans1, trans2};
use crate::qseries::{narrow, pochhammer, pochhammer_reversed, QMonomial};

pub use report::{Failure, GridSpec, IdentityReport, ParamRange};
pub use xseries::{xprod_pos, xseries_inverse, XSeries};

/// Supplies `[n, k]` to the checks.
pub trait BinomialSource: Sync {
    fn binom(&self, n: i64, k: i64) -> Result<LaurentPoly>;
}

impl<F> BinomialSource for F
where
    F: Fn(i64, i64) -> Result<LaurentPoly> + Sync,
{
    fn binom(&self, n: i64, k: i64) -> Result<LaurentPoly> {
        self(n, k)
    }
}

static DISPATCHER: fn(i64, i64) -> Result<LaurentPoly> = qbinom;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Symmetry,
    Absorption,
    Zeros,
    Selfrec,
    PochhammerReversal,
    Trans1,
    Trans2,
    Negdef,
    Qbinpos,
    Qbinneg,
    ProductRule,
    Qbinsum1,
    Qbinsum2,
    Qbinsum3,
    Qbinsum4,
    DerivedTransform,
    Q1Specialization,
    LinkageT7T5,
    LinkageT7T6,
    /// Second-case right side of `qbinsum3` applied for every `a`, `b`.
    /// Informational; not part of `all`.
    Qbinsum3Case2,
}

impl Identity {
    /// Everything `check all` runs, in report order.
    pub const ALL: [Identity; 19] = [
        Identity::Symmetry,
        Identity::Absorption,
        Identity::Zeros,
        Identity::Selfrec,
        Identity::PochhammerReversal,
        Identity::Trans1,
        Identity::Trans2,
        Identity::Negdef,
        Identity::Qbinpos,
        Identity::Qbinneg,
        Identity::ProductRule,
        Identity::Qbinsum1,
        Identity::Qbinsum2,
        Identity::Qbinsum3,
        Identity::Qbinsum4,
        Identity::DerivedTransform,
        Identity::Q1Specialization,
        Identity::LinkageT7T5,
        Identity::LinkageT7T6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Symmetry => "symmetry",
            Identity::Absorption => "absorption",
            Identity::Zeros => "zeros",
            Identity::Selfrec => "selfrec",
            Identity::PochhammerReversal => "pochhammer_reversal",
            Identity::Trans1 => "trans1",
            Identity::Trans2 => "trans2",
            Identity::Negdef => "negdef",
            Identity::Qbinpos => "qbinpos",
            Identity::Qbinneg => "qbinneg",
            Identity::ProductRule => "product_rule",
            Identity::Qbinsum1 => "qbinsum1",
            Identity::Qbinsum2 => "qbinsum2",
            Identity::Qbinsum3 => "qbinsum3",
            Identity::Qbinsum4 => "qbinsum4",
            Identity::DerivedTransform => "derived_transform",
            Identity::Q1Specialization => "q1_specialization",
            Identity::LinkageT7T5 => "linkage_qbinsum3_qbinsum1",
            Identity::LinkageT7T6 => "linkage_qbinsum3_qbinsum2",
            Identity::Qbinsum3Case2 => "qbinsum3_case2",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .chain(std::iter::once(&Identity::Qbinsum3Case2))
            .copied()
            .find(|id| id.name() == name)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }

    /// Grid parameters, in iteration order. For `pochhammer_reversal`, `a` is
    /// the exponent of the monomial argument `+/-q^a`.
    pub fn params(self) -> &'static [char] {
        use Identity::*;
        match self {
            Symmetry | Absorption | Zeros | Selfrec | Trans1 | Trans2 | Negdef
            | Q1Specialization => &['n', 'k'],
            PochhammerReversal => &['a', 'k'],
            Qbinpos | Qbinneg => &['n'],
            ProductRule => &['a', 'b'],
            Qbinsum1 | Qbinsum2 | Qbinsum3 | Qbinsum4 | DerivedTransform | LinkageT7T5
            | LinkageT7T6 | Qbinsum3Case2 => &['a', 'b', 'n'],
        }
    }

    pub fn default_grid(self) -> GridSpec {
        use Identity::*;
        let r = |lo, hi| Some(ParamRange::new(lo, hi).expect("static range"));
        match self {
            Symmetry | Absorption | Zeros | Selfrec | Trans1 | Trans2 | Negdef
            | Q1Specialization => GridSpec {
                n: r(-12, 12),
                k: r(-12, 12),
                ..Default::default()
            },
            PochhammerReversal => GridSpec {
                a: r(-6, 6),
                k: r(0, 8),
                ..Default::default()
            },
            Qbinpos => GridSpec {
                n: r(0, 12),
                ..Default::default()
            },
            Qbinneg => GridSpec {
                n: r(1, 8),
                ..Default::default()
            },
            ProductRule => GridSpec {
                a: r(0, 8),
                b: r(0, 8),
                ..Default::default()
            },
            Qbinsum1 | Qbinsum2 | Qbinsum3 | Qbinsum4 | LinkageT7T5 | Qbinsum3Case2 => GridSpec {
                a: r(0, 6),
                b: r(0, 6),
                n: r(0, 6),
                ..Default::default()
            },
            DerivedTransform | LinkageT7T6 => GridSpec {
                a: r(1, 6),
                b: r(0, 6),
                n: r(0, 6),
                ..Default::default()
            },
        }
    }
}

/// One side-by-side disagreement found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub detail: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

fn expect_eq(
    out: &mut Vec<Mismatch>,
    detail: Option<String>,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
) {
    if lhs != rhs {
        out.push(Mismatch {
            detail,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

fn qp(e: i128) -> Result<LaurentPoly> {
    Ok(LaurentPoly::qpow(narrow(e)?))
}

fn sign(m: i128) -> LaurentPoly {
    if m.rem_euclid(2) == 0 {
        LaurentPoly::one()
    } else {
        -LaurentPoly::one()
    }
}

fn product(factors: &[LaurentPoly]) -> Result<LaurentPoly> {
    factors
        .iter()
        .try_fold(LaurentPoly::one(), |acc, f| acc.checked_mul(f))
}

fn tri(k: i128) -> i128 {
    k * (k - 1) / 2
}

/// `(-1)^k [a, k] [b+n-k, b]`, the summand core shared by
/// `qbinsum3`, `qbinsum4` and the linkage checks.
fn alternating_core(c: &Checker<'_>, a: i128, b: i128, n: i128, k: i128) -> Result<LaurentPoly> {
    product(&[sign(k), c.bin(a, k)?, c.bin(b + n - k, b)?])
}

/// Independent integer binomial for all integer arguments, used only to
/// cross-check the `q = 1` specialization.
fn int_binom(n: i64, k: i64) -> BigInt {
    fn choose(n: i64, k: i64) -> BigInt {
        if k < 0 || k > n {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }
    let signed = |m: i64, v: BigInt| if m.rem_euclid(2) == 0 { v } else { -v };
    if n >= 0 {
        choose(n, k)
    } else if k >= 0 {
        signed(k, choose(-n + k - 1, k))
    } else if k <= n {
        signed(n - k, choose(-k - 1, n - k))
    } else {
        BigInt::zero()
    }
}

/// Runs individual identity checks against a [`BinomialSource`].
#[derive(Clone, Copy)]
pub struct Checker<'a> {
    src: &'a dyn BinomialSource,
}

impl Default for Checker<'static> {
    fn default() -> Self {
        Checker { src: &DISPATCHER }
    }
}

impl<'a> Checker<'a> {
    pub fn new(src: &'a dyn BinomialSource) -> Self {
        Checker { src }
    }

    fn bin(&self, n: i128, k: i128) -> Result<LaurentPoly> {
        self.src.binom(narrow(n)?, narrow(k)?)
    }

    pub fn symmetry(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (n, k) = (i128::from(n), i128::from(k));
        expect_eq(&mut out, None, &self.bin(n, k)?, &self.bin(n, n - k)?);
        Ok(out)
    }

    pub fn absorption(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (lhs, rhs) = absorption_sides(n, k, &|n, k| self.src.binom(n, k))?;
        expect_eq(&mut out, None, &lhs, &rhs);
        Ok(out)
    }

    /// `[n, k] = 0` exactly on `n >= 0, (k < 0 or k > n)` and `n < k < 0`.
    pub fn zeros(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let expect_zero = (n >= 0 && (k < 0 || k > n)) || (n < 0 && n < k && k < 0);
        let value = self.src.binom(n, k)?;
        if value.is_zero() != expect_zero {
            return Ok(vec![Mismatch {
                detail: Some(format!(
                    "expected {}",
                    if expect_zero { "zero" } else { "nonzero" }
                )),
                lhs: value.to_string(),
                rhs: if expect_zero {
                    "0".into()
                } else {
                    "nonzero".into()
                },
            }]);
        }
        Ok(vec![])
    }

    /// Self-reciprocity `[n,k]_{1/q} = q^{-k(n-k)} [n,k]` and the two
    /// reflected reciprocal forms.
    pub fn selfrec(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (n, k) = (i128::from(n), i128::from(k));
        let recip = |n: i128, k: i128| self.bin(n, k)?.substitute_qinv();
        let r = recip(n, k)?;
        expect_eq(
            &mut out,
            Some("self-reciprocal".into()),
            &r,
            &qp(-k * (n - k))?.checked_mul(&self.bin(n, k)?)?,
        );
        if k >= 0 {
            let rhs = product(&[sign(k), qp(-(n * k - tri(k)))?, recip(-n + k - 1, k)?])?;
            expect_eq(
                &mut out,
                Some("reciprocal reflection k >= 0".into()),
                &r,
                &rhs,
            );
        }
        if k <= n {
            let rhs = product(&[
                sign(n - k),
                qp(-((n - k) * (n + k + 1) / 2))?,
                recip(-k - 1, n - k)?,
            ])?;
            expect_eq(
                &mut out,
                Some("reciprocal reflection k <= n".into()),
                &r,
                &rhs,
            );
        }
        Ok(out)
    }

    pub fn trans1(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let t = trans1(n, k)?;
        let rhs = t.apply(&self.src.binom(t.args.n, t.args.k)?)?;
        expect_eq(&mut out, None, &self.src.binom(n, k)?, &rhs);
        Ok(out)
    }

    pub fn trans2(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let t = trans2(n, k)?;
        let rhs = t.apply(&self.src.binom(t.args.n, t.args.k)?)?;
        expect_eq(&mut out, None, &self.src.binom(n, k)?, &rhs);
        Ok(out)
    }

    /// The dispatcher agrees with the product-quotient oracle.
    pub fn negdef(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        expect_eq(
            &mut out,
            None,
            &self.src.binom(n, k)?,
            &qbinom_oracle(n, k)?,
        );
        Ok(out)
    }

    pub fn q1_specialization(&self, n: i64, k: i64) -> Result<Vec<Mismatch>> {
        let at_one = self.src.binom(n, k)?.eval(&Rational::integer(1))?;
        let expected = Rational::integer(int_binom(n, k));
        if at_one != expected {
            return Ok(vec![Mismatch {
                detail: Some("value at q = 1".into()),
                lhs: at_one.to_string(),
                rhs: expected.to_string(),
            }]);
        }
        Ok(vec![])
    }

    pub fn pochhammer_reversal(&self, e: i64, k: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let k = u32::try_from(k)
            .map_err(|_| Error::InvalidArgument(format!("k must be >= 0, got {k}")))?;
        for c in [1i64, -1] {
            let a = QMonomial::new(c, e);
            expect_eq(
                &mut out,
                Some(format!("a = {}", a.to_poly())),
                &pochhammer(&a, k)?,
                &pochhammer_reversed(&a, k)?,
            );
        }
        Ok(out)
    }

    /// `prod_{k<n} (1 + x q^k) = sum_k q^{k(k-1)/2} [n, k] x^k`
    pub fn qbinpos(&self, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let order = usize::try_from(n).map_err(|_| Error::InvalidArgument("n < 0".into()))?;
        let s = xprod_pos(order, 0)?;
        for k in 0..=n {
            let rhs = qp(tri(k.into()))?.checked_mul(&self.src.binom(n, k)?)?;
            expect_eq(&mut out, Some(format!("x^{k}")), s.coeff(k as usize), &rhs);
        }
        Ok(out)
    }

    /// `1 / prod_{k<n} (1 - x q^k) = sum_k [n+k-1, n-1] x^k` up to `order`.
    pub fn qbinneg(&self, n: i64, order: usize) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let len = usize::try_from(n).map_err(|_| Error::InvalidArgument("n < 0".into()))?;
        let inv = xprod_pos(len, 0)?.negate_x().with_order(order).inverse()?;
        for (k, c) in inv.coeffs().iter().enumerate() {
            let k = k as i128;
            let n = i128::from(n);
            expect_eq(
                &mut out,
                Some(format!("x^{k}")),
                c,
                &self.bin(n + k - 1, n - 1)?,
            );
        }
        Ok(out)
    }

    /// `prod_{k<a} (1 + x q^k) prod_{k<b} (1 + x q^{a+k}) = prod_{k<a+b} (1 + x q^k)`
    pub fn product_rule(&self, a: i64, b: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let neg = || Error::InvalidArgument("a, b must be >= 0".into());
        let (au, bu) = (
            usize::try_from(a).map_err(|_| neg())?,
            usize::try_from(b).map_err(|_| neg())?,
        );
        let order = au + bu;
        let lhs = xprod_pos(au, 0)?
            .with_order(order)
            .mul(&xprod_pos(bu, a)?.with_order(order))?;
        let rhs = xprod_pos(order, 0)?;
        for i in 0..=order {
            expect_eq(&mut out, Some(format!("x^{i}")), lhs.coeff(i), rhs.coeff(i));
        }
        Ok(out)
    }

    /// q-Chu-Vandermonde, with the printed and the re-indexed summand powers.
    pub fn qbinsum1(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let rhs = self.bin(a + b, n)?;
        let mut printed = LaurentPoly::zero();
        let mut alternate = LaurentPoly::zero();
        for k in 0..=n {
            let core = self.bin(a, k)?.checked_mul(&self.bin(b, n - k)?)?;
            printed = printed + qp((a - k) * (n - k))?.checked_mul(&core)?;
            alternate = alternate + qp((b - n + k) * k)?.checked_mul(&core)?;
        }
        expect_eq(&mut out, Some("q^{(a-k)(n-k)}".into()), &printed, &rhs);
        expect_eq(&mut out, Some("q^{(b-n+k)k}".into()), &alternate, &rhs);
        Ok(out)
    }

    pub fn qbinsum2(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let rhs = self.bin(n + a + b + 1, n)?;
        let mut printed = LaurentPoly::zero();
        let mut alternate = LaurentPoly::zero();
        for k in 0..=n {
            let core = self.bin(a + k, a)?.checked_mul(&self.bin(b + n - k, b)?)?;
            printed = printed + qp((b + 1) * k)?.checked_mul(&core)?;
            alternate = alternate + qp((a + 1) * (n - k))?.checked_mul(&core)?;
        }
        expect_eq(&mut out, Some("q^{(b+1)k}".into()), &printed, &rhs);
        expect_eq(&mut out, Some("q^{(a+1)(n-k)}".into()), &alternate, &rhs);
        Ok(out)
    }

    fn qbinsum3_rhs(&self, a: i128, b: i128, n: i128, force_second: bool) -> Result<LaurentPoly> {
        if a <= b && !force_second {
            qp(a * n)?.checked_mul(&self.bin(n - a + b, n)?)
        } else {
            product(&[
                sign(n),
                qp(b * n + n * (n + 1) / 2)?,
                self.bin(a - b - 1, n)?,
            ])
        }
    }

    fn qbinsum3_lhs(&self, a: i128, b: i128, n: i128) -> Result<LaurentPoly> {
        let mut lhs = LaurentPoly::zero();
        for k in 0..=n {
            lhs = lhs + qp(tri(k))?.checked_mul(&alternating_core(self, a, b, n, k)?)?;
        }
        Ok(lhs)
    }

    pub fn qbinsum3(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let case = if a <= b { "a <= b" } else { "a > b" };
        expect_eq(
            &mut out,
            Some(case.into()),
            &self.qbinsum3_lhs(a, b, n)?,
            &self.qbinsum3_rhs(a, b, n, false)?,
        );
        Ok(out)
    }

    /// `qbinsum3` with the `a > b` right side used unconditionally.
    pub fn qbinsum3_case2(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        expect_eq(
            &mut out,
            Some("second case, any a, b".into()),
            &self.qbinsum3_lhs(a, b, n)?,
            &self.qbinsum3_rhs(a, b, n, true)?,
        );
        Ok(out)
    }

    pub fn qbinsum4(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let mut lhs = LaurentPoly::zero();
        for k in 0..=n {
            let e = (a - b) * (n - k) + k * (k + 1) / 2;
            lhs = lhs + qp(e)?.checked_mul(&alternating_core(self, a, b, n, k)?)?;
        }
        let (case, rhs) = if a <= b {
            (
                "a <= b",
                qp((a - b) * n)?.checked_mul(&self.bin(n - a + b, n)?)?,
            )
        } else {
            (
                "a > b",
                product(&[sign(n), qp(n * (n + 1) / 2)?, self.bin(a - b - 1, n)?])?,
            )
        };
        expect_eq(&mut out, Some(case.into()), &lhs, &rhs);
        Ok(out)
    }

    fn derived_summand(&self, a: i128, b: i128, n: i128, k: i128) -> Result<LaurentPoly> {
        product(&[
            qp(a * (n - k))?,
            self.bin(a + k - 1, a - 1)?,
            self.bin(b + n - k, b)?,
        ])
    }

    /// `sum_k q^{a(n-k)} [a+k-1, a-1] [b+n-k, b] = [n+a+b, n]`, `a >= 1`.
    pub fn derived_transform(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let mut lhs = LaurentPoly::zero();
        for k in 0..=n {
            lhs = lhs + self.derived_summand(a, b, n, k)?;
        }
        expect_eq(&mut out, None, &lhs, &self.bin(n + a + b, n)?);
        Ok(out)
    }

    /// `qbinsum3` at `b -> -(b+1)`, rescaled by `(-1)^n q^{bn - n(n-1)/2}`,
    /// matches the re-indexed `qbinsum1` summand term by term.
    pub fn linkage_qbinsum3_qbinsum1(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let scale = sign(n).checked_mul(&qp(b * n - tri(n))?)?;
        let neg_b = -(b + 1);
        let mut total = LaurentPoly::zero();
        for k in 0..=n {
            let transformed = scale
                .checked_mul(&qp(tri(k))?)?
                .checked_mul(&alternating_core(self, a, neg_b, n, k)?)?;
            let reindexed = product(&[qp(k * (b - n + k))?, self.bin(a, k)?, self.bin(b, n - k)?])?;
            // printed qbinsum1 summand with a <-> b, k -> n-k
            let printed = product(&[
                qp((b - (n - k)) * (n - (n - k)))?,
                self.bin(b, n - k)?,
                self.bin(a, n - (n - k))?,
            ])?;
            expect_eq(
                &mut out,
                Some(format!("k={k} transformed term")),
                &transformed,
                &reindexed,
            );
            expect_eq(
                &mut out,
                Some(format!("k={k} re-indexed term")),
                &reindexed,
                &printed,
            );
            total = total + transformed;
        }
        expect_eq(&mut out, Some("sum".into()), &total, &self.bin(a + b, n)?);
        Ok(out)
    }

    /// `qbinsum3` at `a -> -a`, rescaled by `q^{an}`, matches the derived
    /// transform summand term by term, which re-indexes onto `qbinsum2`.
    pub fn linkage_qbinsum3_qbinsum2(&self, a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
        let mut out = vec![];
        let (a, b, n) = (i128::from(a), i128::from(b), i128::from(n));
        let mut total = LaurentPoly::zero();
        for k in 0..=n {
            let transformed = product(&[
                qp(a * n)?,
                qp(tri(k))?,
                alternating_core(self, -a, b, n, k)?,
            ])?;
            let derived = self.derived_summand(a, b, n, k)?;
            expect_eq(
                &mut out,
                Some(format!("k={k} transformed term")),
                &transformed,
                &derived,
            );
            // derived summand at (a, b, k) -> (b+1, a, n-k) is the qbinsum2 summand
            let qbinsum2_term = product(&[
                qp((b + 1) * k)?,
                self.bin(a + k, a)?,
                self.bin(b + n - k, b)?,
            ])?;
            expect_eq(
                &mut out,
                Some(format!("k={k} re-indexed term")),
                &self.derived_summand(b + 1, a, n, n - k)?,
                &qbinsum2_term,
            );
            total = total + derived;
        }
        expect_eq(
            &mut out,
            Some("sum".into()),
            &total,
            &self.bin(n + a + b, n)?,
        );
        Ok(out)
    }

    fn applicable(identity: Identity, p: &Point) -> bool {
        use Identity::*;
        let g = |c| p.get(c);
        match identity {
            Trans1 => g('k') >= 0,
            Trans2 => g('k') <= g('n'),
            PochhammerReversal => g('k') >= 0,
            Qbinpos | Qbinneg => g('n') >= 0,
            ProductRule => g('a') >= 0 && g('b') >= 0,
            Qbinsum1 | Qbinsum2 | Qbinsum3 | Qbinsum4 | LinkageT7T5 | Qbinsum3Case2 => {
                g('a') >= 0 && g('b') >= 0 && g('n') >= 0
            }
            DerivedTransform | LinkageT7T6 => g('a') >= 1 && g('b') >= 0 && g('n') >= 0,
            _ => true,
        }
    }

    fn check_point(&self, identity: Identity, p: &Point) -> Result<Vec<Mismatch>> {
        use Identity::*;
        let g = |c| p.get(c);
        match identity {
            Symmetry => self.symmetry(g('n'), g('k')),
            Absorption => self.absorption(g('n'), g('k')),
            Zeros => self.zeros(g('n'), g('k')),
            Selfrec => self.selfrec(g('n'), g('k')),
            PochhammerReversal => self.pochhammer_reversal(g('a'), g('k')),
            Trans1 => self.trans1(g('n'), g('k')),
            Trans2 => self.trans2(g('n'), g('k')),
            Negdef => self.negdef(g('n'), g('k')),
            Q1Specialization => self.q1_specialization(g('n'), g('k')),
            Qbinpos => self.qbinpos(g('n')),
            Qbinneg => {
                let n = g('n');
                let order = usize::try_from(n.saturating_add(4)).unwrap_or(0).max(12);
                self.qbinneg(n, order)
            }
            ProductRule => self.product_rule(g('a'), g('b')),
            Qbinsum1 => self.qbinsum1(g('a'), g('b'), g('n')),
            Qbinsum2 => self.qbinsum2(g('a'), g('b'), g('n')),
            Qbinsum3 => self.qbinsum3(g('a'), g('b'), g('n')),
            Qbinsum3Case2 => self.qbinsum3_case2(g('a'), g('b'), g('n')),
            Qbinsum4 => self.qbinsum4(g('a'), g('b'), g('n')),
            DerivedTransform => self.derived_transform(g('a'), g('b'), g('n')),
            LinkageT7T5 => self.linkage_qbinsum3_qbinsum1(g('a'), g('b'), g('n')),
            LinkageT7T6 => self.linkage_qbinsum3_qbinsum2(g('a'), g('b'), g('n')),
        }
    }

    /// Evaluates `identity` at every applicable point of its default grid
    /// overridden by `overrides`. Points are evaluated in parallel; the report
    /// lists failures in lexicographic parameter order.
    pub fn run(&self, identity: Identity, overrides: &GridSpec) -> IdentityReport {
        let grid = identity.default_grid().overridden_by(overrides);
        let points: Vec<Point> = grid_points(identity.params(), &grid)
            .into_iter()
            .filter(|p| Self::applicable(identity, p))
            .collect();
        let results: Vec<Vec<Failure>> = points
            .par_iter()
            .map(|p| {
                let mismatches = self.check_point(identity, p).unwrap_or_else(|e| {
                    vec![Mismatch {
                        detail: Some("error".into()),
                        lhs: e.to_string(),
                        rhs: String::new(),
                    }]
                });
                mismatches
                    .into_iter()
                    .map(|m| Failure {
                        params: p.to_map(),
                        detail: m.detail,
                        lhs: m.lhs,
                        rhs: m.rhs,
                    })
                    .collect()
            })
            .collect();
        IdentityReport {
            identity: identity.name().to_string(),
            grid,
            checked: points.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }

    /// Every identity in [`Identity::ALL`].
    pub fn run_all(&self, overrides: &GridSpec) -> Vec<IdentityReport> {
        Identity::ALL
            .iter()
            .map(|id| self.run(*id, overrides))
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Point(Vec<(char, i64)>);

impl Point {
    fn get(&self, c: char) -> i64 {
        self.0
            .iter()
            .find(|(p, _)| *p == c)
            .map(|(_, v)| *v)
            .expect("parameter present")
    }

    fn to_map(&self) -> BTreeMap<String, i64> {
        self.0.iter().map(|(p, v)| (p.to_string(), *v)).collect()
    }
}

fn grid_points(params: &[char], grid: &GridSpec) -> Vec<Point> {
    let mut points = vec![Point(vec![])];
    for &p in params {
        let range = grid.get(p).expect("default grid covers every parameter");
        points = points
            .into_iter()
            .flat_map(|pt| {
                range.iter().map(move |v| {
                    let mut next = pt.0.clone();
                    next.push((p, v));
                    Point(next)
                })
            })
            .collect();
    }
    points
}

/// Runs a named identity with the standard dispatcher.
pub fn run_grid(name: &str, grid: &GridSpec) -> Result<IdentityReport> {
    let id = Identity::from_name(name)?;
    Ok(Checker::default().run(id, grid))
}

pub fn check_qbinpos(n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().qbinpos(n)
}

pub fn check_qbinneg(n: i64, order: usize) -> Result<Vec<Mismatch>> {
    Checker::default().qbinneg(n, order)
}

pub fn check_product_rule(a: i64, b: i64) -> Result<Vec<Mismatch>> {
    Checker::default().product_rule(a, b)
}

pub fn check_qbinsum1(a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().qbinsum1(a, b, n)
}

pub fn check_qbinsum2(a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().qbinsum2(a, b, n)
}

pub fn check_qbinsum3(a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().qbinsum3(a, b, n)
}

pub fn check_qbinsum4(a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().qbinsum4(a, b, n)
}

pub fn check_derived_transform(a: i64, b: i64, n: i64) -> Result<Vec<Mismatch>> {
    Checker::default().derived_transform(a, b, n)
}
