//! Confidence intervals and one-sided bounds for a binomial proportion.
//!
//! The exact Clopper–Pearson construction and the usual approximate
//! competitors (Wald, Wilson score, Agresti–Coull, equal-tailed Beta-prior
//! credible intervals such as Jeffreys) sit behind one [`MethodSpec`].

use std::fmt;

use crate::error::{Error, Result};
use crate::special_fn::{beta_quantile, normal_quantile, BetaParams};

/// `x` successes out of `n` trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Observation {
    x: u64,
    n: u64,
}

impl Observation {
    pub fn new(x: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("Observation", "n must be at least 1"));
        }
        if x > n {
            return Err(Error::domain("Observation", format!("x = {x} exceeds n = {n}")));
        }
        Ok(Observation { x, n })
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sample proportion `x / n`.
    pub fn p_hat(&self) -> f64 {
        self.x as f64 / self.n as f64
    }

    /// The observation with successes and failures swapped.
    pub fn mirrored(&self) -> Observation {
        Observation {
            x: self.n - self.x,
            n: self.n,
        }
    }
}

/// Nominal level `1 - alpha` with the two normal quantiles the approximate
/// methods and the expansions need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceLevel {
    alpha: f64,
    z_half: f64,
    z_full: f64,
}

impl ConfidenceLevel {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::domain(
                "ConfidenceLevel",
                format!("alpha = {alpha} outside (0, 1)"),
            ));
        }
        Ok(ConfidenceLevel {
            alpha,
            z_half: normal_quantile(1.0 - alpha / 2.0)?,
            z_full: normal_quantile(1.0 - alpha)?,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Upper `alpha/2` normal quantile.
    pub fn z_half(&self) -> f64 {
        self.z_half
    }

    /// Upper `alpha` normal quantile.
    pub fn z_full(&self) -> f64 {
        self.z_full
    }

    /// The quantile matching a side: `z_half` two-sided, `z_full` one-sided.
    pub fn z_for(&self, side: Side) -> f64 {
        match side {
            Side::TwoSided => self.z_half,
            Side::Upper | Side::Lower => self.z_full,
        }
    }

    /// Tail probability put on each constrained end.
    pub fn tail_for(&self, side: Side) -> f64 {
        match side {
            Side::TwoSided => self.alpha / 2.0,
            Side::Upper | Side::Lower => self.alpha,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    TwoSided,
    Upper,
    Lower,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::TwoSided => "two-sided",
            Side::Upper => "upper",
            Side::Lower => "lower",
        }
    }
}

/// Method family. The Beta-prior family carries its prior, so a prior is
/// present exactly when the family needs one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    ClopperPearson,
    Wald,
    Wilson,
    AgrestiCoull,
    BetaPrior(BetaParams),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::ClopperPearson => "clopper-pearson",
            Family::Wald => "wald",
            Family::Wilson => "wilson",
            Family::AgrestiCoull => "agresti-coull",
            Family::BetaPrior(p) if *p == BetaParams::JEFFREYS => "jeffreys",
            Family::BetaPrior(_) => "beta-prior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodSpec {
    pub family: Family,
    pub side: Side,
}

impl MethodSpec {
    pub fn new(family: Family, side: Side) -> Result<Self> {
        if side != Side::TwoSided && matches!(family, Family::Wilson | Family::AgrestiCoull) {
            return Err(Error::UnsupportedSide {
                family: family.name(),
                side: side.name(),
            });
        }
        Ok(MethodSpec { family, side })
    }

    pub fn clopper_pearson() -> Self {
        MethodSpec {
            family: Family::ClopperPearson,
            side: Side::TwoSided,
        }
    }

    pub fn wald() -> Self {
        MethodSpec {
            family: Family::Wald,
            side: Side::TwoSided,
        }
    }

    pub fn wilson() -> Self {
        MethodSpec {
            family: Family::Wilson,
            side: Side::TwoSided,
        }
    }

    pub fn agresti_coull() -> Self {
        MethodSpec {
            family: Family::AgrestiCoull,
            side: Side::TwoSided,
        }
    }

    pub fn jeffreys() -> Self {
        MethodSpec {
            family: Family::BetaPrior(BetaParams::JEFFREYS),
            side: Side::TwoSided,
        }
    }

    pub fn beta_prior(prior: BetaParams) -> Self {
        MethodSpec {
            family: Family::BetaPrior(prior),
            side: Side::TwoSided,
        }
    }

    /// Same family, different side.
    pub fn with_side(self, side: Side) -> Result<Self> {
        MethodSpec::new(self.family, side)
    }

    pub fn prior(&self) -> Option<BetaParams> {
        match self.family {
            Family::BetaPrior(p) => Some(p),
            _ => None,
        }
    }

    pub fn interval(&self, obs: Observation, level: ConfidenceLevel) -> Result<IntervalEstimate> {
        match (self.family, self.side) {
            (Family::ClopperPearson, Side::TwoSided) => clopper_pearson_interval(obs, level),
            (Family::ClopperPearson, side) => clopper_pearson_bound(obs, level, side),
            (Family::Wald, side) => Ok(wald_interval(obs, level, side)),
            (Family::Wilson, Side::TwoSided) => Ok(wilson_interval(obs, level)),
            (Family::AgrestiCoull, Side::TwoSided) => Ok(agresti_coull_interval(obs, level)),
            (Family::BetaPrior(prior), side) => beta_prior_method(obs, level, prior, side),
            (family, side) => Err(Error::UnsupportedSide {
                family: family.name(),
                side: side.name(),
            }),
        }
    }

    /// `(lower, upper)` without the metadata, for enumeration loops.
    pub(crate) fn bounds(&self, obs: Observation, level: ConfidenceLevel) -> Result<(f64, f64)> {
        self.interval(obs, level).map(|e| (e.lower, e.upper))
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::BetaPrior(p) if p != BetaParams::JEFFREYS => {
                write!(f, "beta({},{}) {}", p.a(), p.b(), self.side.name())
            }
            family => write!(f, "{} {}", family.name(), self.side.name()),
        }
    }
}

/// The approximate two-sided intervals the exact interval is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproxMethod {
    Jeffreys,
    Wilson,
    AgrestiCoull,
}

impl ApproxMethod {
    pub const ALL: [ApproxMethod; 3] = [ApproxMethod::Jeffreys, ApproxMethod::Wilson, ApproxMethod::AgrestiCoull];

    pub fn spec(self) -> MethodSpec {
        match self {
            ApproxMethod::Jeffreys => MethodSpec::jeffreys(),
            ApproxMethod::Wilson => MethodSpec::wilson(),
            ApproxMethod::AgrestiCoull => MethodSpec::agresti_coull(),
        }
    }

    pub fn name(self) -> &'static str {
        self.spec().family.name()
    }
}

/// A realized interval or bound. One-sided estimates set the unconstrained
/// end to 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalEstimate {
    pub lower: f64,
    pub upper: f64,
    pub method: MethodSpec,
    pub level: ConfidenceLevel,
}

impl IntervalEstimate {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Closed-interval membership.
    pub fn contains(&self, p: f64) -> bool {
        self.lower <= p && p <= self.upper
    }
}

fn estimate(lower: f64, upper: f64, family: Family, side: Side, level: ConfidenceLevel) -> IntervalEstimate {
    IntervalEstimate {
        lower,
        upper,
        method: MethodSpec { family, side },
        level,
    }
}

/// Lower Clopper–Pearson limit with tail probability `tail`.
fn cp_lower(obs: Observation, tail: f64) -> Result<f64> {
    let (x, n) = (obs.x, obs.n);
    if x == 0 {
        Ok(0.0)
    } else if x == n {
        Ok(tail.powf(1.0 / n as f64))
    } else {
        beta_quantile(tail, BetaParams::new(x as f64, (n - x + 1) as f64)?)
    }
}

/// Upper Clopper–Pearson limit with tail probability `tail`.
fn cp_upper(obs: Observation, tail: f64) -> Result<f64> {
    let (x, n) = (obs.x, obs.n);
    if x == n {
        Ok(1.0)
    } else if x == 0 {
        Ok(1.0 - tail.powf(1.0 / n as f64))
    } else {
        beta_quantile(1.0 - tail, BetaParams::new((x + 1) as f64, (n - x) as f64)?)
    }
}

/// Two-sided Clopper–Pearson interval, the inversion of the equal-tailed
/// binomial test: beta quantiles `B(α/2; x, n-x+1)` and `B(1-α/2; x+1, n-x)`.
pub fn clopper_pearson_interval(obs: Observation, level: ConfidenceLevel) -> Result<IntervalEstimate> {
    let tail = level.alpha / 2.0;
    Ok(estimate(
        cp_lower(obs, tail)?,
        cp_upper(obs, tail)?,
        Family::ClopperPearson,
        Side::TwoSided,
        level,
    ))
}

/// One-sided Clopper–Pearson bound at level `1 - α`.
pub fn clopper_pearson_bound(obs: Observation, level: ConfidenceLevel, side: Side) -> Result<IntervalEstimate> {
    let tail = level.alpha;
    let (lower, upper) = match side {
        Side::Upper => (0.0, cp_upper(obs, tail)?),
        Side::Lower => (cp_lower(obs, tail)?, 1.0),
        Side::TwoSided => {
            return Err(Error::domain("clopper_pearson_bound", "side must be upper or lower"));
        }
    };
    Ok(estimate(lower, upper, Family::ClopperPearson, side, level))
}

/// Wald interval `p̂ ± z √(p̂q̂/n)`, clamped to `[0, 1]`. Zero width at
/// `x ∈ {0, n}`.
pub fn wald_interval(obs: Observation, level: ConfidenceLevel, side: Side) -> IntervalEstimate {
    let p = obs.p_hat();
    let half = level.z_for(side) * (p * (1.0 - p) / obs.n as f64).sqrt();
    let lower = (p - half).max(0.0);
    let upper = (p + half).min(1.0);
    let (lower, upper) = match side {
        Side::TwoSided => (lower, upper),
        Side::Upper => (0.0, upper),
        Side::Lower => (lower, 1.0),
    };
    estimate(lower, upper, Family::Wald, side, level)
}

/// Wilson score interval.
pub fn wilson_interval(obs: Observation, level: ConfidenceLevel) -> IntervalEstimate {
    let z = level.z_half;
    let z2 = z * z;
    let n = obs.n as f64;
    let p = obs.p_hat();
    let denom = n + z2;
    let center = (obs.x as f64 + z2 / 2.0) / denom;
    let half = z / denom * (p * (1.0 - p) * n + z2 / 4.0).sqrt();
    estimate(
        (center - half).max(0.0),
        (center + half).min(1.0),
        Family::Wilson,
        Side::TwoSided,
        level,
    )
}

/// Agresti–Coull interval: the Wald interval on `ñ = n + z²`,
/// `X̃ = X + z²/2`, clamped to `[0, 1]`.
pub fn agresti_coull_interval(obs: Observation, level: ConfidenceLevel) -> IntervalEstimate {
    let z = level.z_half;
    let z2 = z * z;
    let n_tilde = obs.n as f64 + z2;
    let p_tilde = (obs.x as f64 + z2 / 2.0) / n_tilde;
    let half = z * (p_tilde * (1.0 - p_tilde) / n_tilde).sqrt();
    estimate(
        (p_tilde - half).max(0.0),
        (p_tilde + half).min(1.0),
        Family::AgrestiCoull,
        Side::TwoSided,
        level,
    )
}

/// Equal-tailed credible interval (or one-sided bound) from the posterior
/// `Beta(x + a, n - x + b)`.
pub fn beta_prior_method(
    obs: Observation,
    level: ConfidenceLevel,
    prior: BetaParams,
    side: Side,
) -> Result<IntervalEstimate> {
    let post = BetaParams::new(obs.x as f64 + prior.a(), (obs.n - obs.x) as f64 + prior.b())?;
    let tail = level.tail_for(side);
    let (lower, upper) = match side {
        Side::TwoSided => (beta_quantile(tail, post)?, beta_quantile(1.0 - tail, post)?),
        Side::Upper => (0.0, beta_quantile(1.0 - tail, post)?),
        Side::Lower => (beta_quantile(tail, post)?, 1.0),
    };
    Ok(estimate(lower, upper, Family::BetaPrior(prior), side, level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::{binom_cdf, binom_sf, reg_inc_beta};
    use proptest::prelude::*;

    fn obs(x: u64, n: u64) -> Observation {
        Observation::new(x, n).unwrap()
    }

    fn lvl(alpha: f64) -> ConfidenceLevel {
        ConfidenceLevel::new(alpha).unwrap()
    }

    /// Bisection on the incomplete beta for `I_v(a, b) = q`.
    fn quantile_oracle(q: f64, a: f64, b: f64) -> f64 {
        let ab = BetaParams::new(a, b).unwrap();
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if reg_inc_beta(mid, ab).unwrap() < q {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    const Z975: f64 = 1.959_963_984_540_054;
    const Z95: f64 = 1.644_853_626_951_472_2;

    #[test]
    fn observation_and_level_validation() {
        assert!(Observation::new(0, 0).is_err());
        assert!(Observation::new(11, 10).is_err());
        assert!(ConfidenceLevel::new(0.0).is_err());
        assert!(ConfidenceLevel::new(1.0).is_err());
        let l = lvl(0.05);
        assert!((l.z_half() - Z975).abs() < 1e-10);
        assert!((l.z_full() - Z95).abs() < 1e-10);
    }

    #[test]
    fn wilson_and_ac_have_no_one_sided_form() {
        assert!(MethodSpec::wilson().with_side(Side::Upper).is_err());
        assert!(MethodSpec::agresti_coull().with_side(Side::Lower).is_err());
        assert!(MethodSpec::jeffreys().with_side(Side::Upper).is_ok());
    }

    #[test]
    fn cp_closed_forms_at_boundary() {
        let l = lvl(0.05);
        let e = clopper_pearson_interval(obs(0, 10), l).unwrap();
        let want = 1.0 - 0.025f64.powf(0.1);
        assert_eq!(e.lower, 0.0);
        assert!((e.upper - want).abs() < 1e-15);
        assert!((e.upper - 0.308_50).abs() < 1e-5);
        let e = clopper_pearson_interval(obs(10, 10), l).unwrap();
        assert!((e.lower - 0.025f64.powf(0.1)).abs() < 1e-15);
        assert_eq!(e.upper, 1.0);
    }

    #[test]
    fn cp_interior_against_bisection() {
        let e = clopper_pearson_interval(obs(3, 10), lvl(0.05)).unwrap();
        let lo = quantile_oracle(0.025, 3.0, 8.0);
        let hi = quantile_oracle(0.975, 4.0, 7.0);
        assert!((e.lower - lo).abs() < 1e-12 && (e.upper - hi).abs() < 1e-12);
        assert!((e.lower - 0.0667).abs() < 1e-4);
        assert!((e.upper - 0.6525).abs() < 1e-4);
    }

    #[test]
    fn cp_one_sided() {
        let l = lvl(0.05);
        for n in [1u64, 7, 50] {
            let up = clopper_pearson_bound(obs(0, n), l, Side::Upper).unwrap();
            assert!((up.upper - (1.0 - 0.05f64.powf(1.0 / n as f64))).abs() < 1e-15);
            let lo = clopper_pearson_bound(obs(n, n), l, Side::Lower).unwrap();
            assert!((lo.lower - 0.05f64.powf(1.0 / n as f64)).abs() < 1e-15);
        }
        let up = clopper_pearson_bound(obs(5, 20), l, Side::Upper).unwrap();
        assert!((up.upper - quantile_oracle(0.95, 6.0, 15.0)).abs() < 1e-12);
        assert!((binom_cdf(5, 20, up.upper).unwrap() - 0.05).abs() < 1e-12);
        assert!(clopper_pearson_bound(obs(5, 20), l, Side::TwoSided).is_err());
    }

    #[test]
    fn wald_values() {
        let l = lvl(0.05);
        let e = wald_interval(obs(5, 10), l, Side::TwoSided);
        let half = Z975 * 0.025f64.sqrt();
        assert!((e.lower - (0.5 - half)).abs() < 1e-12 && (e.upper - (0.5 + half)).abs() < 1e-12);
        assert!((e.lower - 0.190_10).abs() < 1e-5);
        let e = wald_interval(obs(0, 10), l, Side::TwoSided);
        assert_eq!((e.lower, e.upper), (0.0, 0.0));
        let e = wald_interval(obs(5, 10), l, Side::Upper);
        assert!((e.upper - (0.5 + Z95 * 0.025f64.sqrt())).abs() < 1e-12);
        assert_eq!(e.lower, 0.0);
    }

    #[test]
    fn wilson_values() {
        let l = lvl(0.05);
        let e = wilson_interval(obs(5, 10), l);
        assert!((e.lower - 0.236_59).abs() < 1e-5 && (e.upper - 0.763_41).abs() < 1e-5);
        assert!((e.lower + e.upper - 1.0).abs() < 1e-15);
        let e = wilson_interval(obs(0, 10), l);
        let z2 = Z975 * Z975;
        assert!(e.lower.abs() < 1e-15);
        assert!((e.upper - z2 / (10.0 + z2)).abs() < 1e-12);
        let a = wilson_interval(obs(3, 10), l);
        let b = wilson_interval(obs(7, 10), l);
        assert!((a.lower - (1.0 - b.upper)).abs() < 1e-14);
    }

    #[test]
    fn agresti_coull_values() {
        let l = lvl(0.05);
        let z2 = Z975 * Z975;
        let e = agresti_coull_interval(obs(5, 10), l);
        let half = Z975 * (0.25 / (10.0 + z2)).sqrt();
        assert!((e.lower - (0.5 - half)).abs() < 1e-12 && (e.upper - (0.5 + half)).abs() < 1e-12);
        let e = agresti_coull_interval(obs(2, 50), l);
        let nt = 50.0 + z2;
        let pt = (2.0 + z2 / 2.0) / nt;
        let half = Z975 * (pt * (1.0 - pt) / nt).sqrt();
        assert!((e.lower - (pt - half)).abs() < 1e-12 && (e.upper - (pt + half)).abs() < 1e-12);
        // shares its centre with the Wilson interval
        for x in 0..=20 {
            let w = wilson_interval(obs(x, 20), l);
            let ac = agresti_coull_interval(obs(x, 20), l);
            let mid = (obs(x, 20).x() as f64 + z2 / 2.0) / (20.0 + z2);
            assert!(ac.contains(mid) && w.contains(mid));
        }
    }

    #[test]
    fn beta_prior_values() {
        let l = lvl(0.05);
        let j = beta_prior_method(obs(5, 10), l, BetaParams::JEFFREYS, Side::TwoSided).unwrap();
        assert!((j.lower + j.upper - 1.0).abs() < 1e-13);
        assert!((j.lower - quantile_oracle(0.025, 5.5, 5.5)).abs() < 1e-12);
        let u = beta_prior_method(obs(2, 20), l, BetaParams::UNIFORM, Side::Upper).unwrap();
        assert!((u.upper - quantile_oracle(0.95, 3.0, 19.0)).abs() < 1e-12);
        // uniform prior with one success and one failure removed gives CP
        let cp = clopper_pearson_interval(obs(4, 12), l).unwrap();
        let bayes = beta_prior_method(obs(3, 11), l, BetaParams::UNIFORM, Side::TwoSided).unwrap();
        assert!((cp.lower - bayes.lower).abs() < 1e-13);
    }

    #[test]
    fn cp_nesting_and_strict_monotonicity() {
        let alphas = [0.01, 0.02, 0.05, 0.1, 0.2];
        for n in 1..=100u64 {
            for x in 0..=n {
                let ests: Vec<_> = alphas
                    .iter()
                    .map(|&a| clopper_pearson_interval(obs(x, n), lvl(a)).unwrap())
                    .collect();
                for w in ests.windows(2) {
                    assert!(w[0].lower <= w[1].lower && w[1].upper <= w[0].upper, "x={x} n={n}");
                    if x != 0 && x != n {
                        assert!(w[0].lower < w[1].lower && w[1].upper < w[0].upper);
                    }
                }
            }
        }
    }

    #[test]
    fn cp_test_inversion() {
        let l = lvl(0.05);
        for n in 2..=80u64 {
            for x in 1..n {
                let e = clopper_pearson_interval(obs(x, n), l).unwrap();
                let upper_tail = binom_sf(x, n, e.lower).unwrap();
                let lower_tail = binom_cdf(x, n, e.upper).unwrap();
                assert!((upper_tail - 0.025).abs() < 1e-9, "x={x} n={n}");
                assert!((lower_tail - 0.025).abs() < 1e-9, "x={x} n={n}");
            }
        }
    }

    #[test]
    fn shrinkage_identity() {
        for &alpha in &[0.01, 0.05, 0.1] {
            let l = lvl(alpha);
            for n in 2..=60u64 {
                for x in 1..n {
                    let cp = clopper_pearson_interval(obs(x, n), l).unwrap();
                    let removed = beta_prior_method(obs(x - 1, n - 1), l, BetaParams::UNIFORM, Side::TwoSided).unwrap();
                    assert!((cp.lower - removed.lower).abs() < 1e-13);
                    let mirror =
                        beta_prior_method(obs(n - x - 1, n - 1), l, BetaParams::UNIFORM, Side::TwoSided).unwrap();
                    assert!((cp.upper - (1.0 - mirror.lower)).abs() < 1e-12, "x={x} n={n}");
                }
            }
        }
    }

    #[test]
    fn cp_contains_jeffreys() {
        for &alpha in &[0.01, 0.05, 0.1] {
            let l = lvl(alpha);
            for n in 1..=80u64 {
                for x in 0..=n {
                    let cp = clopper_pearson_interval(obs(x, n), l).unwrap();
                    let j = MethodSpec::jeffreys().interval(obs(x, n), l).unwrap();
                    assert!(cp.lower <= j.lower && j.upper <= cp.upper, "x={x} n={n}");
                }
            }
        }
    }

    fn all_methods() -> Vec<MethodSpec> {
        let mut v = vec![
            MethodSpec::clopper_pearson(),
            MethodSpec::wald(),
            MethodSpec::wilson(),
            MethodSpec::agresti_coull(),
            MethodSpec::jeffreys(),
            MethodSpec::beta_prior(BetaParams::new(2.0, 2.0).unwrap()),
        ];
        for side in [Side::Upper, Side::Lower] {
            v.push(MethodSpec::clopper_pearson().with_side(side).unwrap());
            v.push(MethodSpec::wald().with_side(side).unwrap());
            v.push(MethodSpec::jeffreys().with_side(side).unwrap());
        }
        v
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn equivariance(n in 1u64..300, frac in 0.0f64..=1.0, alpha in 0.001f64..0.4) {
            let x = ((n as f64) * frac).round() as u64;
            let l = lvl(alpha);
            for m in all_methods() {
                let mirror_side = match m.side {
                    Side::TwoSided => Side::TwoSided,
                    Side::Upper => Side::Lower,
                    Side::Lower => Side::Upper,
                };
                let mirror = MethodSpec { family: m.family, side: mirror_side };
                let e = m.interval(obs(x, n), l).unwrap();
                let f = mirror.interval(obs(n - x, n), l).unwrap();
                prop_assert!((e.lower - (1.0 - f.upper)).abs() < 1e-12, "{} x={} n={}", m, x, n);
                prop_assert!((e.upper - (1.0 - f.lower)).abs() < 1e-12, "{} x={} n={}", m, x, n);
                prop_assert!(0.0 <= e.lower && e.lower <= e.upper && e.upper <= 1.0);
            }
        }
    }
}
