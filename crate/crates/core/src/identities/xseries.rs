//! Truncated power series in `x` whose coefficients are Laurent polynomials in `q`.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `sum_{i=0}^{order} coeffs[i] x^i`, everything above `order` discarded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<LaurentPoly>,
}

impl XSeries {
    /// Panics on an empty coefficient list; a series has at least order 0.
    pub fn new(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "XSeries needs at least one coefficient");
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &LaurentPoly {
        &self.coeffs[i]
    }

    /// Drops or zero-pads coefficients so the series has the given order.
    ///
    /// Padding is only meaningful when the series is an exact polynomial.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, LaurentPoly::zero());
        Self { coeffs }
    }

    /// Substitutes `x -> -x`.
    pub fn negate_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + a.checked_mul(b)?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse to the same order. Needs constant term exactly 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut inv: Vec<LaurentPoly> = Vec::with_capacity(self.coeffs.len());
        inv.push(LaurentPoly::one());
        for m in 1..self.coeffs.len() {
            let mut acc = LaurentPoly::zero();
            for j in 1..=m {
                acc = acc + self.coeffs[j].checked_mul(&inv[m - j])?;
            }
            inv.push(-acc);
        }
        Ok(Self { coeffs: inv })
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// `prod_{k=0}^{n-1} (1 + x q^{shift+k})` as an exact series of order `n`.
pub fn xprod_pos(n: usize, shift: i64) -> Result<XSeries> {
    let mut acc = XSeries::one(n);
    for k in 0..n {
        let e = shift.checked_add(k as i64).ok_or(Error::Overflow)?;
        // multiply by (1 + x q^e) in place, high degree first
        for i in (1..=k + 1).rev() {
            let lifted = acc.coeffs[i - 1].shift(e)?;
            acc.coeffs[i] = &acc.coeffs[i] + lifted;
        }
    }
    Ok(acc)
}

/// Inverse of `s` under the recurrence `t_0 = 1`, `t_m = -sum_{j=1}^{m} s_j t_{m-j}`.
pub fn xseries_inverse(s: &XSeries) -> Result<XSeries> {
    s.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::qbinom;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().copied())
    }

    #[test]
    fn product_examples() {
        assert_eq!(xprod_pos(0, 0).unwrap(), XSeries::one(0));
        assert_eq!(
            xprod_pos(2, 0).unwrap(),
            XSeries::new(vec![
                LaurentPoly::one(),
                lp(&[(0, 1), (1, 1)]),
                LaurentPoly::qpow(1)
            ])
        );
        assert_eq!(
            xprod_pos(1, 3).unwrap(),
            XSeries::new(vec![LaurentPoly::one(), LaurentPoly::qpow(3)])
        );
    }

    #[test]
    fn inverse_examples() {
        let geo = XSeries::new(vec![LaurentPoly::one(), lp(&[(0, -1)])]).with_order(4);
        assert_eq!(
            geo.inverse().unwrap(),
            XSeries::new(vec![LaurentPoly::one(); 5])
        );
        assert_eq!(XSeries::one(0).inverse().unwrap(), XSeries::one(0));

        let s = XSeries::new(vec![
            LaurentPoly::one(),
            lp(&[(0, -1), (1, -1)]),
            LaurentPoly::qpow(1),
            LaurentPoly::zero(),
        ]);
        let t = xseries_inverse(&s).unwrap();
        for k in 0..=3i64 {
            assert_eq!(t.coeff(k as usize), &qbinom(k + 1, 1).unwrap());
        }
        assert_eq!(s.mul(&t).unwrap(), XSeries::one(3));
    }

    #[test]
    fn inverse_rejects_non_unit_constant() {
        let s = XSeries::new(vec![lp(&[(0, 2)]), LaurentPoly::one()]);
        assert_eq!(s.inverse(), Err(Error::NonUnitConstantTerm));
        let s = XSeries::new(vec![LaurentPoly::qpow(1)]);
        assert_eq!(s.inverse(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = xprod_pos(3, 0).unwrap();
        let b = xprod_pos(1, 0).unwrap();
        assert_eq!(a.mul(&b).unwrap().order(), 1);
    }

    #[test]
    fn rendering() {
        assert_eq!(xprod_pos(2, 0).unwrap().to_string(), "[1, 1 + q, q]");
    }
}
