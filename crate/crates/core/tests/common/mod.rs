//! Test-only oracles. Nothing here calls into the code paths under test
//! except to convert the final result to a `LaurentPoly` for comparison.

#![allow(dead_code)]

use qbinom_core::LaurentPoly;

/// Dense Laurent polynomial `sum coeffs[i] q^(offset + i)` over `i128`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub offset: i64,
    pub coeffs: Vec<i128>,
}

impl Dense {
    pub fn one() -> Self {
        Dense {
            offset: 0,
            coeffs: vec![1],
        }
    }

    /// `1 - q^e`
    pub fn one_minus_qpow(e: i64) -> Self {
        let lo = e.min(0);
        let mut coeffs = vec![0i128; (e.max(0) - lo + 1) as usize];
        coeffs[(0 - lo) as usize] += 1;
        coeffs[(e - lo) as usize] -= 1;
        Dense { offset: lo, coeffs }.trim()
    }

    pub fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| **c == 0).count();
        self.coeffs.drain(..lead);
        self.offset += lead as i64;
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
        self
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Dense {
                offset: 0,
                coeffs: vec![],
            };
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Dense {
            offset: self.offset + other.offset,
            coeffs,
        }
        .trim()
    }

    /// Schoolbook division from the HIGH end; `None` if it leaves a remainder.
    pub fn div_exact(&self, d: &Dense) -> Option<Dense> {
        if self.coeffs.is_empty() {
            return Some(self.clone());
        }
        if d.coeffs.len() > self.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        let ql = rem.len() - dl + 1;
        let lead = *d.coeffs.last().unwrap();
        let mut q = vec![0i128; ql];
        for i in (0..ql).rev() {
            let c = rem[i + dl - 1];
            if c % lead != 0 {
                return None;
            }
            let t = c / lead;
            q[i] = t;
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= t * dj;
            }
        }
        if rem.iter().any(|c| *c != 0) {
            return None;
        }
        Some(
            Dense {
                offset: self.offset - d.offset,
                coeffs: q,
            }
            .trim(),
        )
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (self.offset + i as i64, *c as i64)),
        )
    }
}

/// Gaussian coefficient `[n, k]`, `0 <= k <= n`, by enumeration: the
/// coefficient of `q^j` counts k-subsets of `{0..n-1}` whose element sum is
/// `j + k(k-1)/2`.
pub fn gauss_by_subsets(n: u32, k: u32) -> LaurentPoly {
    let base = i64::from(k) * (i64::from(k) - 1) / 2;
    let mut pairs = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == k {
            let s: i64 = (0..n).filter(|i| mask & (1 << i) != 0).map(i64::from).sum();
            pairs.push((s - base, 1i64));
        }
    }
    LaurentPoly::from_terms(pairs)
}

/// `prod_{j=1}^{k} (1 - q^{n-k+j}) / (1 - q^j)` for `k >= 0`, any `n`,
/// via dense i128 arithmetic and high-end division.
pub fn product_quotient(n: i64, k: i64) -> LaurentPoly {
    let mut num = Dense::one();
    let mut den = Dense::one();
    for j in 1..=k {
        num = num.mul(&Dense::one_minus_qpow(n - k + j));
        den = den.mul(&Dense::one_minus_qpow(j));
    }
    num.div_exact(&den)
        .expect("product quotient divides exactly")
        .to_poly()
}

/// Integer binomial for all integer arguments, three-case reflection.
pub fn int_binom(n: i64, k: i64) -> i128 {
    fn fact(m: i64) -> i128 {
        (1..=m as i128).product()
    }
    fn choose(n: i64, k: i64) -> i128 {
        if k < 0 || k > n {
            0
        } else {
            fact(n) / (fact(k) * fact(n - k))
        }
    }
    let sgn = |m: i64| if m.rem_euclid(2) == 0 { 1 } else { -1 };
    if n >= 0 {
        choose(n, k)
    } else if k >= 0 {
        sgn(k) * choose(-n + k - 1, k)
    } else if k <= n {
        sgn(n - k) * choose(-k - 1, n - k)
    } else {
        0
    }
}

pub fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(pairs.iter().copied())
}
