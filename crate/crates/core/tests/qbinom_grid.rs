mod common;

use common::{gauss_by_subsets, int_binom, lp, product_quotient};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use qbinom_core::{
    pochhammer, pochhammer_reversed, qbinom, qbinom_oracle, reciprocal, trans1, trans2,
    LaurentPoly, QMonomial, Rational,
};

const R: std::ops::RangeInclusive<i64> = -12..=12;

#[test]
fn nonnegative_values_match_subset_enumeration() {
    for n in 0..=12u32 {
        for k in 0..=n {
            let expected = gauss_by_subsets(n, k);
            assert_eq!(qbinom(n.into(), k.into()).unwrap(), expected, "[{n},{k}]");
            assert_eq!(
                qbinom_oracle(n.into(), k.into()).unwrap(),
                expected,
                "[{n},{k}]"
            );
        }
    }
    assert_eq!(
        gauss_by_subsets(4, 2),
        lp(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
    );
}

#[test]
fn oracle_matches_dense_product_quotient() {
    for n in R {
        for k in 0..=12 {
            assert_eq!(
                qbinom_oracle(n, k).unwrap(),
                product_quotient(n, k),
                "[{n},{k}]"
            );
        }
    }
    assert_eq!(
        product_quotient(-3, 2),
        lp(&[(-7, 1), (-6, 1), (-5, 2), (-4, 1), (-3, 1)])
    );
}

#[test]
fn dispatcher_matches_oracle_on_grid() {
    for n in R {
        for k in R {
            assert_eq!(
                qbinom(n, k).unwrap(),
                qbinom_oracle(n, k).unwrap(),
                "[{n},{k}]"
            );
            if n < 0 && k >= 0 {
                assert_eq!(qbinom(n, k).unwrap(), product_quotient(n, k));
            }
        }
    }
}

#[test]
fn symmetry_absorption_zeros() {
    for n in R {
        for k in R {
            let v = qbinom(n, k).unwrap();
            assert_eq!(v, qbinom(n, n - k).unwrap(), "symmetry [{n},{k}]");
            let lhs = LaurentPoly::one_minus(k, 1) * &v;
            let rhs = LaurentPoly::one_minus(n, 1) * qbinom(n - 1, k - 1).unwrap();
            assert_eq!(lhs, rhs, "absorption [{n},{k}]");
            let zero = (n >= 0 && (k < 0 || k > n)) || (n < 0 && n < k && k < 0);
            assert_eq!(v.is_zero(), zero, "zero region [{n},{k}]");
        }
    }
}

#[test]
fn self_reciprocity_and_reflected_forms() {
    for n in R {
        for k in R {
            let r = reciprocal(n, k).unwrap();
            let v = qbinom(n, k).unwrap();
            assert_eq!(r, v.shift(-k * (n - k)).unwrap(), "[{n},{k}]");
            if !v.is_zero() {
                // palindromic window
                let (lo, hi) = v.valuation_degree().unwrap();
                for e in lo..=hi {
                    assert_eq!(v.coeff(e), v.coeff(lo + hi - e));
                }
                assert_eq!(lo + hi, k * (n - k));
            }
            let sgn = |m: i64| if m.rem_euclid(2) == 0 { 1 } else { -1 };
            if k >= 0 {
                let rhs = reciprocal(-n + k - 1, k)
                    .unwrap()
                    .scale(&BigInt::from(sgn(k)));
                assert_eq!(r, rhs.shift(-(n * k - k * (k - 1) / 2)).unwrap());
            }
            if k <= n {
                let rhs = reciprocal(-k - 1, n - k)
                    .unwrap()
                    .scale(&BigInt::from(sgn(n - k)));
                assert_eq!(r, rhs.shift(-((n - k) * (n + k + 1) / 2)).unwrap());
            }
        }
    }
}

#[test]
fn value_at_one_is_the_integer_binomial() {
    for n in R {
        for k in R {
            let at_one = qbinom(n, k).unwrap().eval(&Rational::integer(1)).unwrap();
            assert_eq!(at_one, Rational::integer(int_binom(n, k)), "[{n},{k}]");
        }
    }
}

#[test]
fn positivity_and_degree_for_nonnegative_arguments() {
    for n in 0..=12 {
        for k in 0..=n {
            let v = qbinom(n, k).unwrap();
            assert!(v.terms().all(|(_, c)| c.is_positive()));
            assert_eq!(v.valuation_degree().unwrap(), (0, k * (n - k)));
        }
    }
}

#[test]
fn minus_one_closed_form() {
    for k in -8..=8i64 {
        let sign = if k >= 0 { k } else { k + 1 };
        let c = if sign.rem_euclid(2) == 0 { 1 } else { -1 };
        let expected = LaurentPoly::monomial(-k * (k + 1) / 2, c);
        assert_eq!(qbinom(-1, k).unwrap(), expected, "k = {k}");
    }
}

#[test]
fn transforms_hold_on_grid() {
    for n in R {
        for k in R {
            let v = qbinom(n, k).unwrap();
            if k >= 0 {
                let t = trans1(n, k).unwrap();
                assert_eq!(v, t.apply(&qbinom(t.args.n, t.args.k).unwrap()).unwrap());
            }
            if k <= n {
                let t = trans2(n, k).unwrap();
                assert_eq!(v, t.apply(&qbinom(t.args.n, t.args.k).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn large_central_coefficients_are_exact() {
    // coefficient sum of [40,20] is C(40,20); it exceeds 2^37, and the middle
    // coefficient of [80,40] exceeds 2^64
    let v = qbinom(40, 20).unwrap();
    let total: BigInt = v.terms().map(|(_, c)| c.clone()).sum();
    assert_eq!(total, BigInt::from(137_846_528_820u64));
    let big = qbinom(80, 40).unwrap();
    assert!(big.coeff(800) > BigInt::from(u64::MAX));
}

proptest! {
    #[test]
    fn pochhammer_reversal_property(e in -6i64..=6, k in 0u32..=8, neg in any::<bool>()) {
        let a = QMonomial::new(if neg { -1 } else { 1 }, e);
        prop_assert_eq!(pochhammer(&a, k).unwrap(), pochhammer_reversed(&a, k).unwrap());
    }
}

#[test]
fn q_pascal_recurrence() {
    // [n,k] = [n-1,k-1] + q^k [n-1,k] for all integers except n = k = 0,
    // where [0,0] = 1 but [-1,-1] + [-1,0] = 2
    for n in -15i64..=15 {
        for k in -15i64..=15 {
            let lhs = qbinom(n, k).unwrap();
            let rhs = qbinom(n - 1, k - 1).unwrap() + qbinom(n - 1, k).unwrap().shift(k).unwrap();
            assert_eq!(lhs == rhs, (n, k) != (0, 0), "[{n},{k}]");
        }
    }
}
