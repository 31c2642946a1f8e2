//! q-binomial (Gaussian) coefficients `[n choose k]` for every integer pair.
//!
//! Two computation paths exist and are kept independent:
//!
//! - [`qbinom_oracle`] evaluates the product quotient
//!   `prod_{j=1}^{k} (1 - q^{n-k+j}) / (1 - q^j)` by exact division. It is
//!   defined for any integer `n` when `k >= 0`; negative `k` is routed through
//!   the symmetry `[n, k] = [n, n-k]`.
//! - [`qbinom`] dispatches negative `n` through the two reflection
//!   transformations [`trans1`] / [`trans2`] onto nonnegative upper arguments,
//!   and is zero in the strip `n < k < 0`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qseries::{narrow, tri};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QBinomArgs {
    pub n: i64,
    pub k: i64,
}

impl QBinomArgs {
    pub fn new(n: i64, k: i64) -> Self {
        Self { n, k }
    }
}

/// `[n, k] = sign * q^exp * [args]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transform {
    pub sign: i8,
    pub exp: i64,
    pub args: QBinomArgs,
}

impl Transform {
    /// `sign * q^exp * p`
    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        p.signed_shift(self.sign < 0, self.exp)
    }
}

fn parity_sign(m: i64) -> i8 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Reflection valid for `k >= 0`:
/// `[n, k] = (-1)^k q^{nk - k(k-1)/2} [-n+k-1, k]`.
pub fn trans1(n: i64, k: i64) -> Result<Transform> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!(
            "trans1 needs k >= 0, got k = {k}"
        )));
    }
    let exp = narrow(i128::from(n) * i128::from(k) - i128::from(tri(k)?))?;
    let upper = narrow(-i128::from(n) + i128::from(k) - 1)?;
    Ok(Transform {
        sign: parity_sign(k),
        exp,
        args: QBinomArgs::new(upper, k),
    })
}

/// Reflection valid for `k <= n`:
/// `[n, k] = (-1)^{n-k} q^{(n-k)(n+k+1)/2} [-k-1, n-k]`.
pub fn trans2(n: i64, k: i64) -> Result<Transform> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "trans2 needs k <= n, got n = {n}, k = {k}"
        )));
    }
    let (n, k) = (i128::from(n), i128::from(k));
    // (n-k) and (n+k+1) have opposite parity, so the product is even.
    let exp = narrow((n - k) * (n + k + 1) / 2)?;
    let lower = narrow(n - k)?;
    let upper = narrow(-k - 1)?;
    Ok(Transform {
        sign: parity_sign(lower),
        exp,
        args: QBinomArgs::new(upper, lower),
    })
}

/// Product-quotient evaluation, independent of the reflection formulas.
pub fn qbinom_oracle(n: i64, k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        let m = i128::from(n) - i128::from(k);
        return if m >= 0 {
            qbinom_oracle(n, narrow(m)?)
        } else {
            Ok(LaurentPoly::zero())
        };
    }
    let base = narrow(i128::from(n) - i128::from(k))?;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in 1..=k {
        let e = base.checked_add(j).ok_or(Error::Overflow)?;
        num = num.checked_mul(&LaurentPoly::one_minus(e, 1))?;
        if num.is_zero() {
            // a factor 1 - q^0 vanished
            return Ok(num);
        }
        den = den.checked_mul(&LaurentPoly::one_minus(j, 1))?;
    }
    num.exact_div(&den)
}

/// `[n, k]` for all integers `n`, `k`.
pub fn qbinom(n: i64, k: i64) -> Result<LaurentPoly> {
    if n >= 0 {
        if k < 0 || k > n {
            return Ok(LaurentPoly::zero());
        }
        return qbinom_oracle(n, k);
    }
    if k >= 0 {
        let t = trans1(n, k)?;
        t.apply(&qbinom_oracle(t.args.n, t.args.k)?)
    } else if k <= n {
        let t = trans2(n, k)?;
        t.apply(&qbinom_oracle(t.args.n, t.args.k)?)
    } else {
        Ok(LaurentPoly::zero())
    }
}

/// `[n, k]` with `q` replaced by `1/q`.
pub fn reciprocal(n: i64, k: i64) -> Result<LaurentPoly> {
    qbinom(n, k)?.substitute_qinv()
}

/// `[n, k] == [n, n-k]`
pub fn check_symmetry(n: i64, k: i64) -> Result<bool> {
    let m = narrow(i128::from(n) - i128::from(k))?;
    Ok(qbinom(n, k)? == qbinom(n, m)?)
}

/// `(1 - q^k) [n, k] == (1 - q^n) [n-1, k-1]`
pub fn check_absorption(n: i64, k: i64) -> Result<bool> {
    let (lhs, rhs) = absorption_sides(n, k, &qbinom)?;
    Ok(lhs == rhs)
}

pub(crate) fn absorption_sides<F>(n: i64, k: i64, binom: &F) -> Result<(LaurentPoly, LaurentPoly)>
where
    F: Fn(i64, i64) -> Result<LaurentPoly> + ?Sized,
{
    let n1 = n.checked_sub(1).ok_or(Error::Overflow)?;
    let k1 = k.checked_sub(1).ok_or(Error::Overflow)?;
    let lhs = LaurentPoly::one_minus(k, BigInt::from(1)).checked_mul(&binom(n, k)?)?;
    let rhs = LaurentPoly::one_minus(n, BigInt::from(1)).checked_mul(&binom(n1, k1)?)?;
    Ok((lhs, rhs))
}

/// Whether `[n, k]` lies in a zero region.
pub fn in_zero_region(n: i64, k: i64) -> bool {
    if n >= 0 {
        k < 0 || k > n
    } else {
        n < k && k < 0
    }
}
