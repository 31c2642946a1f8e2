mod common;

use common::gauss_by_subsets;
use qbinom_core::identities::{
    check_qbinneg, check_qbinsum3, check_qbinsum4, xprod_pos, xseries_inverse,
};
use qbinom_core::{qbinom, run_grid, Checker, GridSpec, Identity, LaurentPoly, ParamRange};

fn grid(a: Option<(i64, i64)>, b: Option<(i64, i64)>, n: Option<(i64, i64)>) -> GridSpec {
    let r = |x: Option<(i64, i64)>| x.map(|(lo, hi)| ParamRange::new(lo, hi).unwrap());
    GridSpec {
        a: r(a),
        b: r(b),
        n: r(n),
        k: None,
    }
}

#[test]
fn run_grid_counts() {
    let r = run_grid("qbinsum1", &grid(Some((0, 6)), Some((0, 6)), Some((0, 6)))).unwrap();
    assert_eq!((r.checked, r.failures.len()), (343, 0));
    let r = run_grid("product_rule", &grid(Some((0, 8)), Some((0, 8)), None)).unwrap();
    assert_eq!((r.checked, r.failures.len()), (81, 0));
    let r = run_grid("qbinpos", &grid(None, None, Some((0, 12)))).unwrap();
    assert_eq!((r.checked, r.failures.len()), (13, 0));
    assert!(run_grid("nosuch", &GridSpec::default()).is_err());
}

#[test]
fn positive_theorem_coefficients_match_enumeration() {
    // x^k coefficient of prod_{j<n} (1 + x q^j) is q^{k(k-1)/2} [n,k]
    for n in 0..=10u32 {
        let s = xprod_pos(n as usize, 0).unwrap();
        for k in 0..=n {
            let expected = gauss_by_subsets(n, k).shift(i64::from(k * k.saturating_sub(1) / 2));
            assert_eq!(s.coeff(k as usize), &expected.unwrap());
        }
    }
}

#[test]
fn negative_power_series_is_prefix_stable() {
    for n in 0..=6usize {
        let base = xprod_pos(n, 0).unwrap().negate_x();
        let long = xseries_inverse(&base.with_order(16)).unwrap();
        for m in 0..16 {
            let short = xseries_inverse(&base.with_order(m)).unwrap();
            assert_eq!(short, long.with_order(m), "n={n} order {m}");
        }
    }
    for n in 0..=8 {
        assert!(check_qbinneg(n, 12).unwrap().is_empty());
    }
}

#[test]
fn truncated_product_is_coherent() {
    let a = xprod_pos(5, 0).unwrap().with_order(9);
    let b = xprod_pos(4, 5).unwrap().with_order(9);
    let full = a.mul(&b).unwrap();
    for m in 0..9 {
        assert_eq!(
            a.with_order(m).mul(&b.with_order(m)).unwrap(),
            full.with_order(m)
        );
    }
    assert_eq!(full, xprod_pos(9, 0).unwrap());
}

#[test]
fn exercise_special_cases_of_alternating_sum() {
    for a in 1..=6 {
        for n in 1..=6 {
            assert!(check_qbinsum3(a, a - 1, n).unwrap().is_empty());
            assert!(check_qbinsum4(a, a - 1, n).unwrap().is_empty());
        }
        assert!(check_qbinsum3(a, 0, a).unwrap().is_empty());
    }
}

#[test]
fn alternating_sum_second_case_holds_for_all_a_b() {
    let r = run_grid("qbinsum3_case2", &GridSpec::default()).unwrap();
    assert_eq!(r.checked, 343);
    assert!(r.passed());
}

#[test]
fn every_identity_detects_a_perturbed_source() {
    // perturb a value that every identity's default grid touches
    let perturbed = |n: i64, k: i64| {
        let v = qbinom(n, k)?;
        Ok(match (n, k) {
            (4, 2) | (3, 1) | (1, 0) | (2, 1) | (2, 5) => v + LaurentPoly::qpow(1),
            _ => v,
        })
    };
    let checker = Checker::new(&perturbed);
    let exempt = [Identity::PochhammerReversal, Identity::ProductRule];
    for id in Identity::ALL {
        let report = checker.run(id, &GridSpec::default());
        assert_eq!(report.passed(), exempt.contains(&id), "{}", id.name());
    }
}

#[test]
fn reports_are_deterministic() {
    let perturbed = |n: i64, k: i64| {
        let v = qbinom(n, k)?;
        Ok(if n == 5 { v + LaurentPoly::one() } else { v })
    };
    let checker = Checker::new(&perturbed);
    let g = grid(Some((0, 4)), Some((0, 4)), Some((0, 4)));
    let first = serde_json::to_string(&checker.run(Identity::Qbinsum2, &g)).unwrap();
    for _ in 0..3 {
        assert_eq!(
            first,
            serde_json::to_string(&checker.run(Identity::Qbinsum2, &g)).unwrap()
        );
    }
    let report = checker.run(Identity::Qbinsum2, &g);
    assert!(!report.passed());
    let params: Vec<_> = report.failures.iter().map(|f| f.params.clone()).collect();
    let mut sorted = params.clone();
    sorted.sort_by_key(|p| (p["a"], p["b"], p["n"]));
    assert_eq!(params, sorted);
}

#[test]
fn report_json_shape() {
    let r = run_grid("qbinpos", &grid(None, None, Some((0, 2)))).unwrap();
    assert_eq!(
        serde_json::to_string(&r).unwrap(),
        r#"{"identity":"qbinpos","grid":{"n":[0,2]},"checked":3,"failures":[]}"#
    );
}
