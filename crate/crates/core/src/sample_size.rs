//! Sample sizes for a target expected width (two-sided) or expected
//! distance to `p` (upper bound), by closed form or by exact search, and
//! the extra observations the exact interval costs over approximate ones.
//!
//! Several closed forms come in two flavours selected by [`Formula`]:
//! the value obtained by solving the second-order expansion directly, and
//! the display as typeset in the literature. They coincide for the
//! two-sided Jeffreys and Agresti–Coull comparisons and differ elsewhere.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_eval::expected_width_exact;
use crate::methods::{ApproxMethod, ConfidenceLevel, MethodSpec, Side};
use crate::special_fn::{ln_gamma_pos, BetaParams, Probability};

/// Upper limit for [`exact_n`].
pub const DEFAULT_N_MAX: u64 = 1_000_000;

/// How far below the first passing `n` the exact search re-checks, since
/// expected width is not monotone in `n`.
pub const VERIFY_WINDOW: u64 = 25;

/// Which version of a closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Formula {
    /// Solve the truncated expansion algebraically.
    #[default]
    Derived,
    /// Evaluate the published display term by term.
    AsPrinted,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Derived => "derived",
            Formula::AsPrinted => "printed",
        }
    }
}

/// Prior knowledge about `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Guess {
    Point(Probability),
    Prior(BetaParams),
}

/// Target and assumptions for a sample-size calculation. For a two-sided
/// interval `d` is the full expected width; for an upper bound it is the
/// expected distance `E(U - p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSizeQuery {
    d: f64,
    guess: Guess,
    level: ConfidenceLevel,
    side: Side,
}

impl SampleSizeQuery {
    pub fn new(d: f64, guess: Guess, level: ConfidenceLevel, side: Side) -> Result<Self> {
        if !(d > 0.0 && d < 1.0) {
            return Err(Error::domain("SampleSizeQuery", format!("d = {d} outside (0, 1)")));
        }
        if side == Side::Lower {
            return Err(Error::UnsupportedSide {
                family: "sample size",
                side: side.name(),
            });
        }
        Ok(SampleSizeQuery { d, guess, level, side })
    }

    /// Point guess `p0`.
    pub fn point(d: f64, p0: f64, level: ConfidenceLevel, side: Side) -> Result<Self> {
        Self::new(d, Guess::Point(Probability::new(p0)?), level, side)
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn guess(&self) -> Guess {
        self.guess
    }

    pub fn level(&self) -> ConfidenceLevel {
        self.level
    }

    pub fn side(&self) -> Side {
        self.side
    }

    fn interior_point(&self, routine: &'static str) -> Result<f64> {
        match self.guess {
            Guess::Point(p) if p.value() > 0.0 && p.value() < 1.0 => Ok(p.value()),
            Guess::Point(p) => Err(Error::domain(routine, format!("p0 = {p} must lie in (0, 1)"))),
            Guess::Prior(_) => Err(Error::domain(routine, "needs a point guess")),
        }
    }

    fn prior(&self, routine: &'static str) -> Result<BetaParams> {
        match self.guess {
            Guess::Prior(ab) => Ok(ab),
            Guess::Point(_) => Err(Error::domain(routine, "needs a prior guess")),
        }
    }

    fn expect_side(&self, routine: &'static str, side: Side) -> Result<()> {
        if self.side == side {
            Ok(())
        } else {
            Err(Error::domain(
                routine,
                format!("needs side {}, got {}", side.name(), self.side.name()),
            ))
        }
    }
}

/// Where a sample size came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Closed(Formula),
    ExactSearch,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSizeResult {
    pub n: u64,
    pub n_unrounded: f64,
    pub source: Source,
    /// Exact expected width (or distance) at `n`, when known.
    pub achieved: Option<f64>,
}

impl SampleSizeResult {
    fn closed(n_unrounded: f64, formula: Formula) -> Self {
        SampleSizeResult {
            n: n_unrounded.ceil().max(1.0) as u64,
            n_unrounded,
            source: Source::Closed(formula),
            achieved: None,
        }
    }
}

impl fmt::Display for SampleSizeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}", self.n)
    }
}

/// `R(a, b) = E√(p(1-p))` for `p ~ Beta(a, b)`, i.e.
/// `Γ(a+½)Γ(b+½) / ((a+b)Γ(a)Γ(b))`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PriorMoment(f64);

impl PriorMoment {
    pub fn new(prior: BetaParams) -> Self {
        let (a, b) = (prior.a(), prior.b());
        let ln = ln_gamma_pos(a + 0.5) + ln_gamma_pos(b + 0.5) - (a + b).ln() - ln_gamma_pos(a) - ln_gamma_pos(b);
        PriorMoment(ln.exp())
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Positive root in `n` of `2z√(v/n) + 1/n = d` where `v` plays the role
/// of `p0 q0`, written with `s = √v`.
fn two_sided_root(z: f64, s: f64, d: f64) -> f64 {
    let v = s * s;
    (2.0 * z * z * v + 2.0 * z * (z * z * v * v + d * v).sqrt() + d) / (d * d)
}

/// Two-sided Clopper–Pearson sample size from a point guess.
pub fn cp_n_two_sided(q: &SampleSizeQuery) -> Result<SampleSizeResult> {
    q.expect_side("cp_n_two_sided", Side::TwoSided)?;
    let p = q.interior_point("cp_n_two_sided")?;
    let n = two_sided_root(q.level.z_half(), (p * (1.0 - p)).sqrt(), q.d);
    Ok(SampleSizeResult::closed(n, Formula::Derived))
}

/// Two-sided Clopper–Pearson sample size averaging the leading term over a
/// Beta prior.
pub fn cp_n_two_sided_prior(q: &SampleSizeQuery) -> Result<SampleSizeResult> {
    q.expect_side("cp_n_two_sided_prior", Side::TwoSided)?;
    let r = PriorMoment::new(q.prior("cp_n_two_sided_prior")?).value();
    let n = two_sided_root(q.level.z_half(), r, q.d);
    Ok(SampleSizeResult::closed(n, Formula::Derived))
}

/// Upper-bound sample size from a point guess.
///
/// `Derived` solves `z√(pq/n) + C/(3n) = d`, `C = 2(½-p)z² + 1 + q`, as a
/// quadratic in `√n`. `AsPrinted` evaluates the published display.
pub fn cp_n_one_sided(q: &SampleSizeQuery, formula: Formula) -> Result<SampleSizeResult> {
    q.expect_side("cp_n_one_sided", Side::Upper)?;
    let p = q.interior_point("cp_n_one_sided")?;
    let (z, d) = (q.level.z_full(), q.d);
    let pq = p * (1.0 - p);
    let qq = 1.0 - p;
    let n = match formula {
        Formula::Derived => {
            let c = 2.0 * (0.5 - p) * z * z + 1.0 + qq;
            let root = (z * (pq.sqrt()) + (z * z * pq + 4.0 * d * c / 3.0).sqrt()) / (2.0 * d);
            root * root
        }
        Formula::AsPrinted => {
            let z2 = z * z;
            let inner = 3.0 * z2 * pq + 4.0 * (d * z2 - 2.0 * d * z2 * p + d * (1.0 + qq));
            (9.0 * z2 * pq + 3.0 * z * (3.0 * pq).sqrt() * inner.sqrt() + 6.0 * (2.0 * z2 * (0.5 - p) + (1.0 + qq)))
                / (2.0 * d * d)
        }
    };
    Ok(SampleSizeResult::closed(n, formula))
}

/// Coefficients `(A, B)` of the prior-averaged upper-bound distance
/// `A n^{-1/2} + B n^{-1}` for `p ~ Beta(a, b)`. Defined for `a, b < 2`.
pub fn one_sided_prior_coefficients(prior: BetaParams, level: ConfidenceLevel) -> Result<(f64, f64)> {
    let (a, b) = (prior.a(), prior.b());
    if a >= 2.0 || b >= 2.0 {
        return Err(Error::domain(
            "one_sided_prior_coefficients",
            format!("prior ({a}, {b}) needs a, b < 2"),
        ));
    }
    let z = level.z_full();
    let g = ln_gamma_pos;
    let big_a = z * (g(2.5 - a) + g(2.5 - b) - g(5.0 - a - b)).exp();
    let t1 = (2.0 + z * z) * (g(2.0 - a) + g(2.0 - b) - g(4.0 - a - b)).exp();
    let t2 = (2.0 * z * z + 1.0) * (g(3.0 - a) + g(2.0 - b) - g(5.0 - a - b)).exp();
    Ok((big_a, (t1 - t2) / 3.0))
}

/// Upper-bound sample size averaging the second-order distance over a
/// Beta prior, found by solving `A n^{-1/2} + B n^{-1} = d`.
///
/// With `AsPrinted` and the Jeffreys prior the published closed form is
/// used instead; other priors have no printed closed form and are solved
/// the same way under both settings.
pub fn cp_n_one_sided_prior(q: &SampleSizeQuery, formula: Formula) -> Result<SampleSizeResult> {
    q.expect_side("cp_n_one_sided_prior", Side::Upper)?;
    let prior = q.prior("cp_n_one_sided_prior")?;
    let d = q.d;
    if formula == Formula::AsPrinted && prior == BetaParams::JEFFREYS {
        let z = q.level.z_full();
        let pi = std::f64::consts::PI;
        let n = 6.0 * z * (z + (z * z + 9.0 * d * pi).sqrt()) / (d * d) + pi / (16.0 * d);
        return Ok(SampleSizeResult::closed(n, Formula::AsPrinted));
    }
    let (a, b) = one_sided_prior_coefficients(prior, q.level)?;
    let disc = a * a + 4.0 * b * d;
    if disc < 0.0 || a + disc.sqrt() <= 0.0 {
        return Err(Error::domain(
            "cp_n_one_sided_prior",
            format!("no positive root for d = {d}"),
        ));
    }
    let root = (a + disc.sqrt()) / (2.0 * d);
    Ok(SampleSizeResult::closed(root * root, formula))
}

/// Published sample-size formulas for the approximate intervals.
pub fn approx_method_n(vs: ApproxMethod, d: f64, p0: f64, level: ConfidenceLevel) -> Result<SampleSizeResult> {
    check_d_p0("approx_method_n", d, p0)?;
    let z2 = level.z_half().powi(2);
    let pq = p0 * (1.0 - p0);
    let d2 = d * d;
    let n = match vs {
        ApproxMethod::Jeffreys => 4.0 * z2 * pq / d2,
        ApproxMethod::Wilson => z2 * (pq + d2 / 2.0 + (pq * pq + d2 * (p0 - 0.5).powi(2)).sqrt()) / (d2 / 2.0),
        ApproxMethod::AgrestiCoull => 4.0 * z2 * pq / d2 - z2,
    };
    Ok(SampleSizeResult::closed(n, Formula::AsPrinted))
}

fn check_d_p0(routine: &'static str, d: f64, p0: f64) -> Result<()> {
    if !(d > 0.0 && d < 1.0) {
        return Err(Error::domain(routine, format!("d = {d} outside (0, 1)")));
    }
    if !(p0 > 0.0 && p0 < 1.0) {
        return Err(Error::domain(routine, format!("p0 = {p0} outside (0, 1)")));
    }
    Ok(())
}

/// Extra observations needed by the two-sided Clopper–Pearson interval
/// over `vs` at expected width `d`, without rounding.
pub fn n_plus_two_sided(vs: ApproxMethod, d: f64, p0: f64, level: ConfidenceLevel, formula: Formula) -> Result<f64> {
    check_d_p0("n_plus_two_sided", d, p0)?;
    let z = level.z_half();
    let pq = p0 * (1.0 - p0);
    let d2 = d * d;
    let root = (z * z * pq * pq + d * pq).sqrt();
    Ok(match (formula, vs) {
        (Formula::Derived, _) => {
            let q = SampleSizeQuery::point(d, p0, level, Side::TwoSided)?;
            cp_n_two_sided(&q)?.n_unrounded - approx_method_n(vs, d, p0, level)?.n_unrounded
        }
        (Formula::AsPrinted, ApproxMethod::Jeffreys) => (d - 2.0 * z * (z * pq - root)) / d2,
        (Formula::AsPrinted, ApproxMethod::Wilson) => {
            let other = (z * z * pq * pq + d2 * z * z * (p0 - 0.5).powi(2)).sqrt();
            (d * (1.0 + d * z * z) + 2.0 * z * (root - other)) / d2
        }
        (Formula::AsPrinted, ApproxMethod::AgrestiCoull) => (d + z * z * (d2 - 2.0 * pq) + 2.0 * z * root) / d2,
    })
}

/// Extra observations needed by the Clopper–Pearson upper bound over an
/// approximate bound sized by `z² p0 q0 / d²`, at expected distance `d`.
pub fn n_plus_one_sided(d: f64, p0: f64, level: ConfidenceLevel, formula: Formula) -> Result<f64> {
    check_d_p0("n_plus_one_sided", d, p0)?;
    let z = level.z_full();
    let (pq, q0) = (p0 * (1.0 - p0), 1.0 - p0);
    Ok(match formula {
        Formula::Derived => {
            let q = SampleSizeQuery::point(d, p0, level, Side::Upper)?;
            cp_n_one_sided(&q, Formula::Derived)?.n_unrounded - z * z * pq / (d * d)
        }
        Formula::AsPrinted => {
            let z2 = z * z;
            let omega = 9.0 * z2 * pq + 12.0 * d * z2 - 24.0 * d * z2 * p0;
            let inner = omega + 12.0 * d * (0.5 - p0);
            if inner < 0.0 {
                return Err(Error::domain(
                    "n_plus_one_sided",
                    format!("printed form undefined at d = {d}, p0 = {p0}"),
                ));
            }
            ((omega + 12.0 * d * (1.0 + q0)).sqrt() - inner.sqrt() + d / 2.0) / (d * d)
        }
    })
}

/// Extra observations needed by the level `1 - α` Clopper–Pearson interval
/// over a Jeffreys interval run at the stricter nominal level `1 - γ`.
pub fn n_plus_adjusted(d: f64, p0: f64, level: ConfidenceLevel, gamma: ConfidenceLevel) -> Result<f64> {
    check_d_p0("n_plus_adjusted", d, p0)?;
    let za = level.z_half();
    let zg = gamma.z_half();
    let pq = p0 * (1.0 - p0);
    Ok((d + 2.0 * pq * (za * za - 2.0 * zg * zg) + 2.0 * za * (za * za * pq * pq + d * pq).sqrt()) / (d * d))
}

/// Smallest `n` whose exact expected width (distance, for one-sided
/// methods) at `p0` is at most `d`, searching up to [`DEFAULT_N_MAX`].
pub fn exact_n(method: MethodSpec, d: f64, p0: f64, level: ConfidenceLevel) -> Result<SampleSizeResult> {
    exact_n_within(method, d, p0, level, DEFAULT_N_MAX)
}

/// [`exact_n`] with an explicit search limit.
///
/// Starts from the leading-order estimate, brackets the first passing `n`,
/// bisects, then re-checks the [`VERIFY_WINDOW`] values below it and moves
/// down whenever a smaller passing `n` turns up.
pub fn exact_n_within(
    method: MethodSpec,
    d: f64,
    p0: f64,
    level: ConfidenceLevel,
    n_max: u64,
) -> Result<SampleSizeResult> {
    if !(d > 0.0) {
        return Err(Error::domain("exact_n", format!("d = {d} must be positive")));
    }
    if !(0.0..=1.0).contains(&p0) {
        return Err(Error::domain("exact_n", format!("p0 = {p0} outside [0, 1]")));
    }
    if n_max < 2 {
        return Err(Error::domain("exact_n", "n_max must be at least 2"));
    }
    let width = |n: u64| expected_width_exact(method, n, p0, level);
    let found = |n: u64, w: f64| SampleSizeResult {
        n,
        n_unrounded: n as f64,
        source: Source::ExactSearch,
        achieved: Some(w),
    };

    let w2 = width(2)?;
    if w2 <= d {
        return Ok(found(2, w2));
    }

    let z = level.z_for(method.side);
    let spread = if method.side == Side::TwoSided { 4.0 } else { 1.0 };
    let guess = (spread * z * z * p0 * (1.0 - p0) / (d * d)).clamp(3.0, n_max as f64) as u64;

    // lo fails, hi passes
    let (mut lo, mut hi) = if width(guess)? <= d {
        let mut hi = guess;
        let mut lo = (guess / 2).max(2);
        while lo > 2 && width(lo)? <= d {
            hi = lo;
            lo = (lo / 2).max(2);
        }
        (lo, hi)
    } else {
        let mut lo = guess;
        let mut hi = guess.saturating_mul(2).min(n_max);
        loop {
            if width(hi)? <= d {
                break (lo, hi);
            }
            if hi == n_max {
                return Err(Error::Budget { n_max, target: d });
            }
            lo = hi;
            hi = hi.saturating_mul(2).min(n_max);
        }
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if width(mid)? <= d {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let mut best = hi;
    loop {
        let start = best.saturating_sub(VERIFY_WINDOW).max(2);
        let mut lower = None;
        for n in start..best {
            if width(n)? <= d {
                lower = Some(n);
                break;
            }
        }
        match lower {
            Some(n) => best = n,
            None => break,
        }
    }
    Ok(found(best, width(best)?))
}
