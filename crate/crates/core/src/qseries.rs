//! q-shifted factorials `(a;q)_k` for monomial arguments `a = c*q^e`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// The monomial `coeff * q^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub coeff: BigInt,
    pub exp: i64,
}

impl QMonomial {
    pub fn new(coeff: impl Into<BigInt>, exp: i64) -> Self {
        Self {
            coeff: coeff.into(),
            exp,
        }
    }

    /// `q^e`
    pub fn q_power(exp: i64) -> Self {
        Self::new(1, exp)
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.exp, self.coeff.clone())
    }
}

/// `k(k-1)/2` for any integer `k`.
pub fn tri(k: i64) -> Result<i64> {
    let k = i128::from(k);
    narrow(k * (k - 1) / 2)
}

pub(crate) fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// `(a;q)_k = (1 - a)(1 - a q) ... (1 - a q^{k-1})`; the empty product for `k = 0`.
pub fn pochhammer(a: &QMonomial, k: u32) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for j in 0..i64::from(k) {
        let e = a.exp.checked_add(j).ok_or(Error::Overflow)?;
        acc = acc.checked_mul(&LaurentPoly::one_minus(e, a.coeff.clone()))?;
    }
    Ok(acc)
}

/// The reversed form `(-a)^k q^{k(k-1)/2} (q^{1-k}/a; q)_k`.
///
/// Only unit coefficients are accepted so that `1/a` stays a Laurent monomial
/// with integer coefficient.
pub fn pochhammer_reversed(a: &QMonomial, k: u32) -> Result<LaurentPoly> {
    if !a.coeff.is_zero() && !a.coeff.abs().is_one() {
        return Err(Error::NonUnitCoefficient(a.coeff.to_string()));
    }
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    if a.coeff.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let k64 = i64::from(k);
    // 1/c == c for c = +/-1
    let recip = QMonomial {
        coeff: a.coeff.clone(),
        exp: narrow(1 - i128::from(k64) - i128::from(a.exp))?,
    };
    let prefactor_exp = narrow(i128::from(a.exp) * i128::from(k64) + i128::from(tri(k64)?))?;
    let prefactor_coeff = (-&a.coeff).pow(k);
    let prefactor = LaurentPoly::monomial(prefactor_exp, prefactor_coeff);
    prefactor.checked_mul(&pochhammer(&recip, k)?)
}
