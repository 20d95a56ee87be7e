//! Closed-form sample sizes checked against exact search.

use binomci::exact_eval::expected_width_exact;
use binomci::methods::{ApproxMethod, ConfidenceLevel, MethodSpec, Side};
use binomci::sample_size::{
    cp_n_one_sided, cp_n_two_sided, exact_n, n_plus_one_sided, n_plus_two_sided, Formula, SampleSizeQuery,
};

fn lvl(alpha: f64) -> ConfidenceLevel {
    ConfidenceLevel::new(alpha).unwrap()
}

const DS: [f64; 3] = [0.04, 0.06, 0.09];
const P0S: [f64; 4] = [0.2, 0.4, 0.5, 0.7];

fn exact(m: MethodSpec, d: f64, p0: f64) -> i64 {
    exact_n(m, d, p0, lvl(0.05)).unwrap().n as i64
}

#[test]
fn linear_scan_agrees_with_search() {
    let l = lvl(0.05);
    let m = MethodSpec::clopper_pearson();
    for (d, p0) in [(0.2, 0.3), (0.15, 0.5), (0.3, 0.1)] {
        let scanned = (2u64..)
            .find(|&n| expected_width_exact(m, n, p0, l).unwrap() <= d)
            .unwrap();
        assert_eq!(exact_n(m, d, p0, l).unwrap().n, scanned, "d = {d}, p0 = {p0}");
    }
}

#[test]
fn two_sided_formula_has_small_positive_bias() {
    for d in DS {
        for p0 in P0S {
            let q = SampleSizeQuery::point(d, p0, lvl(0.05), Side::TwoSided).unwrap();
            let gap = cp_n_two_sided(&q).unwrap().n as i64 - exact(MethodSpec::clopper_pearson(), d, p0);
            assert!((0..=4).contains(&gap), "d = {d}, p0 = {p0}: gap {gap}");
        }
    }
}

#[test]
fn jeffreys_cost_tracks_search() {
    for d in DS {
        for p0 in P0S {
            let want = exact(MethodSpec::clopper_pearson(), d, p0) - exact(MethodSpec::jeffreys(), d, p0);
            let got = n_plus_two_sided(ApproxMethod::Jeffreys, d, p0, lvl(0.05), Formula::Derived).unwrap();
            assert!((got - want as f64).abs() < 3.0, "d = {d}, p0 = {p0}: {got} vs {want}");
        }
    }
}

// The Wilson size formula overstates exact Wilson n by about five, so the
// cost formula runs low by a near-constant amount.
#[test]
fn wilson_cost_runs_low() {
    for d in DS {
        for p0 in P0S {
            let want = exact(MethodSpec::clopper_pearson(), d, p0) - exact(MethodSpec::wilson(), d, p0);
            let got = n_plus_two_sided(ApproxMethod::Wilson, d, p0, lvl(0.05), Formula::Derived).unwrap();
            let short = want as f64 - got;
            assert!((4.0..=7.0).contains(&short), "d = {d}, p0 = {p0}: {got} vs {want}");
        }
    }
}

#[test]
fn one_sided_closed_form_distance() {
    let l = lvl(0.05);
    let m = MethodSpec::clopper_pearson().with_side(Side::Upper).unwrap();
    for (d, p0) in [(0.02, 0.5), (0.03, 0.3), (0.05, 0.2)] {
        let q = SampleSizeQuery::point(d, p0, l, Side::Upper).unwrap();
        let n = cp_n_one_sided(&q, Formula::Derived).unwrap().n;
        let achieved = expected_width_exact(m, n, p0, l).unwrap();
        assert!(achieved <= d * 1.01, "d = {d}, p0 = {p0}: {achieved} at n = {n}");
    }
}

#[test]
fn one_sided_cost_near_exact_difference() {
    let l = lvl(0.05);
    let cp = MethodSpec::clopper_pearson().with_side(Side::Upper).unwrap();
    let j = MethodSpec::jeffreys().with_side(Side::Upper).unwrap();
    let got = n_plus_one_sided(0.05, 0.5, l, Formula::Derived).unwrap();
    let want = exact_n(cp, 0.05, 0.5, l).unwrap().n as f64 - exact_n(j, 0.05, 0.5, l).unwrap().n as f64;
    assert!((got - want).abs() <= 4.0, "{got} vs {want}");
}
