//! Asymptotic expansions checked against exact enumeration.

use binomci::exact_eval::expected_width_exact;
use binomci::expansions::{
    cp_bound_expansion, excess_distance_one_sided, excess_length, expected_distance_expansion,
    expected_length_expansion, ExpansionOrder,
};
use binomci::methods::{clopper_pearson_interval, ApproxMethod, ConfidenceLevel, MethodSpec, Observation, Side};

fn lvl(alpha: f64) -> ConfidenceLevel {
    ConfidenceLevel::new(alpha).unwrap()
}

fn upper(m: MethodSpec) -> MethodSpec {
    m.with_side(Side::Upper).unwrap()
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn expected_length_near_exact() {
    let l = lvl(0.05);
    let e = expected_length_expansion(100, 0.5, l).unwrap().value;
    let x = expected_width_exact(MethodSpec::clopper_pearson(), 100, 0.5, l).unwrap();
    assert!((e - x).abs() < 0.01, "{e} {x}");
}

#[test]
fn expected_distance_near_exact() {
    let l = lvl(0.05);
    let m = upper(MethodSpec::clopper_pearson());
    let e = expected_distance_expansion(100, 0.3, l).unwrap().value;
    let x = expected_width_exact(m, 100, 0.3, l).unwrap();
    assert!((e - x).abs() < 0.01, "{e} {x}");

    let mut worst = 0.0f64;
    for i in 0..=90 {
        let p = 0.05 + i as f64 * 0.01;
        let e = expected_distance_expansion(50, p, l).unwrap().value;
        let x = expected_width_exact(m, 50, p, l).unwrap();
        worst = worst.max((e - x).abs());
    }
    assert!(worst < 0.01, "{worst}");
}

#[test]
fn expected_length_error_order() {
    let l = lvl(0.05);
    let ns = [50u64, 100, 200, 400, 800];
    for p in [0.2, 0.5, 0.8] {
        let errs: Vec<f64> = ns
            .iter()
            .map(|&n| {
                let e = expected_length_expansion(n, p, l).unwrap().value;
                let x = expected_width_exact(MethodSpec::clopper_pearson(), n, p, l).unwrap();
                (e - x).abs()
            })
            .collect();
        let nf: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
        let s = log_slope(&nf, &errs);
        assert!(s <= -1.8, "p = {p}: slope {s}, errors {errs:?}");
    }
}

#[test]
fn third_order_bound_error_order() {
    let l = lvl(0.05);
    let ns = [50u64, 100, 200, 400, 800];
    let errs: Vec<f64> = ns
        .iter()
        .map(|&n| {
            let o = Observation::new(n / 2, n).unwrap();
            let e = cp_bound_expansion(o, l, Side::TwoSided, ExpansionOrder::ThirdOrder).unwrap();
            let x = clopper_pearson_interval(o, l).unwrap();
            (e.upper - x.upper).abs().max((e.lower - x.lower).abs())
        })
        .collect();
    let nf: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let s = log_slope(&nf, &errs);
    assert!(s <= -1.8, "slope {s}, errors {errs:?}");
}

#[test]
fn wilson_third_order_excess() {
    let l = lvl(0.05);
    let predicted = excess_length(ApproxMethod::Wilson, 100, 0.5, l, ExpansionOrder::ThirdOrder).unwrap();
    let cp = expected_width_exact(MethodSpec::clopper_pearson(), 100, 0.5, l).unwrap();
    let ws = expected_width_exact(MethodSpec::wilson(), 100, 0.5, l).unwrap();
    assert!((cp - ws - predicted).abs() < 0.002, "{} vs {predicted}", cp - ws);
}

#[test]
fn jeffreys_excess_length() {
    let l = lvl(0.05);
    for n in [50u64, 100, 200] {
        for p in [0.3, 0.5] {
            let cp = expected_width_exact(MethodSpec::clopper_pearson(), n, p, l).unwrap();
            let j = expected_width_exact(MethodSpec::jeffreys(), n, p, l).unwrap();
            let nf = n as f64;
            let want = excess_length(ApproxMethod::Jeffreys, n, p, l, ExpansionOrder::SecondOrder).unwrap();
            assert!((cp - j - want).abs() < 2.0 / (nf * nf) + 0.001, "{n} {p}");
        }
    }
}

#[test]
fn one_sided_excess_distance() {
    let l = lvl(0.05);
    let cp = expected_width_exact(upper(MethodSpec::clopper_pearson()), 50, 0.5, l).unwrap();
    let j = expected_width_exact(upper(MethodSpec::jeffreys()), 50, 0.5, l).unwrap();
    assert!(
        (cp - j - excess_distance_one_sided(50).unwrap()).abs() < 0.004,
        "{}",
        cp - j
    );
}
