//! Exact evaluation by enumeration over the binomial sample space:
//! expected width, coverage probability, minimum and mean coverage, and
//! calibration of the nominal level against a coverage target.
//!
//! Grid scans run in parallel but reduce sequentially in ascending `p`, so
//! reports do not depend on the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::methods::{ConfidenceLevel, MethodSpec, Observation, Side};
use crate::special_fn::{inc_beta_pair, pmf_unchecked, Probability};

/// Relative offset of the probes placed either side of each realized
/// endpoint when searching for the coverage infimum.
pub const ENDPOINT_PROBE: f64 = 1e-12;

/// Coverage tolerance used when deciding whether a level passes a
/// minimum-coverage target.
pub const COVERAGE_SLACK: f64 = 1e-9;

/// Equidistant grid of `points` values on `[lo, hi]`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PGrid {
    lo: Probability,
    hi: Probability,
    points: usize,
}

impl PGrid {
    pub fn new(lo: f64, hi: f64, points: usize) -> Result<Self> {
        if !(0.0 < lo && lo < hi && hi < 1.0) {
            return Err(Error::domain(
                "PGrid",
                format!("need 0 < lo < hi < 1, got [{lo}, {hi}]"),
            ));
        }
        if points < 2 {
            return Err(Error::domain("PGrid", "need at least 2 points"));
        }
        Ok(PGrid {
            lo: Probability::new(lo)?,
            hi: Probability::new(hi)?,
            points,
        })
    }

    pub fn lo(&self) -> f64 {
        self.lo.value()
    }

    pub fn hi(&self) -> f64 {
        self.hi.value()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            return self.hi();
        }
        let (lo, hi) = (self.lo(), self.hi());
        lo + (hi - lo) * (i as f64 / (self.points - 1) as f64)
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.point(i))
    }

    pub fn contains(&self, p: f64) -> bool {
        self.lo() <= p && p <= self.hi()
    }
}

/// The realized limits `L(x)`, `U(x)` for every `x = 0..=n`.
#[derive(Debug, Clone)]
pub struct Endpoints {
    n: u64,
    lower: Vec<f64>,
    upper: Vec<f64>,
    monotone: bool,
}

impl Endpoints {
    pub fn new(method: MethodSpec, n: u64, level: ConfidenceLevel) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("Endpoints", "n must be at least 1"));
        }
        let pairs = (0..=n)
            .into_par_iter()
            .map(|x| method.bounds(Observation::new(x, n)?, level))
            .collect::<Result<Vec<_>>>()?;
        let (lower, upper): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        let monotone = lower.windows(2).all(|w| w[0] <= w[1]) && upper.windows(2).all(|w| w[0] <= w[1]);
        Ok(Endpoints {
            n,
            lower,
            upper,
            monotone,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Whether both endpoint sequences are nondecreasing in `x`.
    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    /// `P(L(X) <= p <= U(X))` under `X ~ Bin(n, p)`.
    pub fn coverage(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain("coverage", format!("p = {p} outside [0, 1]")));
        }
        if !self.monotone {
            return Ok(self.coverage_by_sum(p));
        }
        // covering x form the run [b, a)
        let a = self.lower.partition_point(|&l| l <= p);
        let b = self.upper.partition_point(|&u| u < p);
        if b >= a {
            return Ok(0.0);
        }
        let n = self.n;
        let below = if b == 0 { 0.0 } else { lower_tail(b as u64 - 1, n, p)? };
        let above = if a as u64 > n { 0.0 } else { upper_tail(a as u64, n, p)? };
        Ok((1.0 - below - above).clamp(0.0, 1.0))
    }

    fn coverage_by_sum(&self, p: f64) -> f64 {
        let mut total = 0.0;
        for x in 0..=self.n {
            let i = x as usize;
            if self.lower[i] <= p && p <= self.upper[i] {
                total += pmf_unchecked(x, self.n, p);
            }
        }
        total.min(1.0)
    }

    /// Closed-form mean coverage under a uniform prior on `p`.
    pub fn mean_coverage(&self) -> Result<f64> {
        let n = self.n;
        let terms = (0..=n)
            .into_par_iter()
            .map(|x| {
                let (a, b) = ((x + 1) as f64, (n - x + 1) as f64);
                let (iu, cu) = inc_beta_pair(self.upper[x as usize], a, b)?;
                let (il, cl) = inc_beta_pair(self.lower[x as usize], a, b)?;
                Ok(if il > 0.5 { cl - cu } else { iu - il }.max(0.0))
            })
            .collect::<Result<Vec<f64>>>()?;
        Ok((terms.iter().sum::<f64>() / (n + 1) as f64).min(1.0))
    }

    /// Endpoint probes `e(1 ± ε)` for every realized endpoint inside the grid.
    fn probes(&self, grid: &PGrid) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .lower
            .iter()
            .chain(&self.upper)
            .flat_map(|&e| [e * (1.0 - ENDPOINT_PROBE), e * (1.0 + ENDPOINT_PROBE)])
            .filter(|&p| grid.contains(p))
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

// P(X <= k)
fn lower_tail(k: u64, n: u64, p: f64) -> Result<f64> {
    if k >= n {
        return Ok(1.0);
    }
    inc_beta_pair(p, (k + 1) as f64, (n - k) as f64).map(|(_, ic)| ic)
}

// P(X >= k), k >= 1
fn upper_tail(k: u64, n: u64, p: f64) -> Result<f64> {
    inc_beta_pair(p, k as f64, (n - k + 1) as f64).map(|(i, _)| i)
}

/// Range of `x` outside which `Bin(n, p)` mass is below `1e-20` per point.
fn support(n: u64, p: f64) -> (u64, u64) {
    const CUTOFF: f64 = 1e-20;
    let mode = (((n + 1) as f64 * p).floor() as u64).min(n);
    let mut lo = mode;
    while lo > 0 && pmf_unchecked(lo - 1, n, p) >= CUTOFF {
        lo -= 1;
    }
    let mut hi = mode;
    while hi < n && pmf_unchecked(hi + 1, n, p) >= CUTOFF {
        hi += 1;
    }
    (lo, hi)
}

/// Exact expected width `Σ_x P(X = x) w(x)` where `w` is `U - L` for a
/// two-sided method, `U - p` for an upper bound and `p - L` for a lower
/// bound. Terms with probability below `1e-20` are skipped.
pub fn expected_width_exact(method: MethodSpec, n: u64, p: f64, level: ConfidenceLevel) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("expected_width_exact", "n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain("expected_width_exact", format!("p = {p} outside [0, 1]")));
    }
    let (lo, hi) = support(n, p);
    let term = |x: u64| -> Result<f64> {
        let (l, u) = method.bounds(Observation::new(x, n)?, level)?;
        let w = match method.side {
            Side::TwoSided => u - l,
            Side::Upper => u - p,
            Side::Lower => p - l,
        };
        Ok(pmf_unchecked(x, n, p) * w)
    };
    let terms = if hi - lo > 256 {
        (lo..=hi).into_par_iter().map(term).collect::<Result<Vec<_>>>()?
    } else {
        (lo..=hi).map(term).collect::<Result<Vec<_>>>()?
    };
    Ok(terms.iter().sum())
}

/// Coverage probability of `method` at a single `p`.
pub fn coverage_probability(method: MethodSpec, n: u64, p: f64, level: ConfidenceLevel) -> Result<Probability> {
    let ends = Endpoints::new(method, n, level)?;
    Probability::new(ends.coverage(p)?)
}

/// Result of a coverage scan.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    /// Minimum over the grid and the endpoint probes.
    pub min_coverage: Probability,
    pub argmin_p: Probability,
    /// Minimum over grid points only.
    pub grid_min_coverage: Probability,
    pub grid_argmin_p: Probability,
    pub mean_coverage: Probability,
    pub grid: PGrid,
    /// `(p, coverage)` for every grid point, when requested.
    pub per_point: Option<Vec<(f64, f64)>>,
}

// smallest value, ties to the earliest (smallest p) entry
fn argmin(values: &[(f64, f64)]) -> (f64, f64) {
    let mut best = values[0];
    for &(p, c) in &values[1..] {
        if c < best.1 {
            best = (p, c);
        }
    }
    best
}

fn coverage_at(ends: &Endpoints, ps: Vec<f64>) -> Result<Vec<(f64, f64)>> {
    ps.into_par_iter().map(|p| ends.coverage(p).map(|c| (p, c))).collect()
}

/// Minimum coverage over `grid`, refined with probes just either side of
/// each realized endpoint inside the grid.
pub fn min_coverage(method: MethodSpec, n: u64, level: ConfidenceLevel, grid: PGrid) -> Result<CoverageReport> {
    let ends = Endpoints::new(method, n, level)?;
    scan(&ends, grid, false)
}

/// Like [`min_coverage`] but keeps the per-point coverage curve.
pub fn coverage_curve(method: MethodSpec, n: u64, level: ConfidenceLevel, grid: PGrid) -> Result<CoverageReport> {
    let ends = Endpoints::new(method, n, level)?;
    scan(&ends, grid, true)
}

fn scan(ends: &Endpoints, grid: PGrid, keep: bool) -> Result<CoverageReport> {
    let on_grid = coverage_at(ends, grid.iter().collect())?;
    let probed = coverage_at(ends, ends.probes(&grid))?;
    let (gp, gc) = argmin(&on_grid);

    let mut all = on_grid.clone();
    all.extend_from_slice(&probed);
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (mp, mc) = argmin(&all);

    Ok(CoverageReport {
        min_coverage: Probability::new(mc)?,
        argmin_p: Probability::new(mp)?,
        grid_min_coverage: Probability::new(gc)?,
        grid_argmin_p: Probability::new(gp)?,
        mean_coverage: Probability::new(ends.mean_coverage()?)?,
        grid,
        per_point: keep.then_some(on_grid),
    })
}

/// Mean coverage under a uniform prior on `p`, in closed form.
pub fn mean_coverage(method: MethodSpec, n: u64, level: ConfidenceLevel) -> Result<Probability> {
    Probability::new(Endpoints::new(method, n, level)?.mean_coverage()?)
}

/// Target for [`calibrate_alpha`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CalibrationCriterion {
    /// Minimum coverage over the grid at least `1 - α`.
    MinCoverage(PGrid),
    /// Mean coverage equal to `1 - α`.
    MeanCoverage,
}

/// Outcome of [`calibrate_alpha`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    pub gamma: ConfidenceLevel,
    /// Criterion coverage at `gamma`.
    pub coverage: f64,
    /// A larger `γ` where the minimum-coverage target fails, with its
    /// coverage. `None` when `γ = α` already passes or for the mean target.
    pub witness: Option<(f64, f64)>,
}

const GAMMA_MIN: f64 = 1e-6;
const GAMMA_MAX: f64 = 0.5;
const GAMMA_TOL: f64 = 1e-5;
const SCAN_STEP: f64 = 1e-4;
const WITNESS_GAP: f64 = 1e-3;

/// Finds the nominal `γ` at which `method` meets a coverage target of
/// `1 - α`.
///
/// For the minimum-coverage target the search runs over `γ ≤ α` and
/// returns the largest passing `γ`; bisection is checked against the
/// witness at `γ + 0.001` and replaced by a descending scan when coverage
/// turns out not to be monotone in `γ`. For the mean target `γ` is
/// bisected on `(1e-6, 0.5)`.
pub fn calibrate_alpha(
    method: MethodSpec,
    n: u64,
    level: ConfidenceLevel,
    criterion: CalibrationCriterion,
) -> Result<Calibration> {
    let target = 1.0 - level.alpha();
    match criterion {
        CalibrationCriterion::MinCoverage(grid) => calibrate_min(method, n, level.alpha(), target, grid),
        CalibrationCriterion::MeanCoverage => calibrate_mean(method, n, target),
    }
}

fn min_at(method: MethodSpec, n: u64, gamma: f64, grid: PGrid) -> Result<f64> {
    let level = ConfidenceLevel::new(gamma)?;
    Ok(min_coverage(method, n, level, grid)?.min_coverage.value())
}

fn calibrate_min(method: MethodSpec, n: u64, alpha: f64, target: f64, grid: PGrid) -> Result<Calibration> {
    let passes = |c: f64| c >= target - COVERAGE_SLACK;
    let done = |gamma: f64, coverage: f64, witness| {
        Ok(Calibration {
            gamma: ConfidenceLevel::new(gamma)?,
            coverage,
            witness,
        })
    };

    let top = min_at(method, n, alpha, grid)?;
    if passes(top) {
        return done(alpha, top, None);
    }
    let bottom = min_at(method, n, GAMMA_MIN, grid)?;
    if !passes(bottom) {
        return Err(Error::Calibration(format!(
            "{method} at n = {n} covers only {bottom} at gamma = {GAMMA_MIN}, target {target}"
        )));
    }

    let (mut lo, mut lo_cov, mut hi) = (GAMMA_MIN, bottom, alpha);
    while hi - lo > GAMMA_TOL {
        let mid = 0.5 * (lo + hi);
        let c = min_at(method, n, mid, grid)?;
        if passes(c) {
            (lo, lo_cov) = (mid, c);
        } else {
            hi = mid;
        }
    }

    // every step above lo up to the witness must fail
    let mut monotone = true;
    let mut step = lo + SCAN_STEP;
    let mut witness = None;
    while step <= (lo + WITNESS_GAP).min(alpha) + 1e-15 {
        let c = min_at(method, n, step, grid)?;
        if passes(c) {
            monotone = false;
            break;
        }
        witness = Some((step, c));
        step += SCAN_STEP;
    }
    if monotone {
        return done(lo, lo_cov, witness);
    }

    let mut g = alpha;
    let mut last_fail = (alpha, top);
    while g > GAMMA_MIN {
        let c = min_at(method, n, g, grid)?;
        if passes(c) {
            return done(g, c, Some(last_fail));
        }
        last_fail = (g, c);
        g -= SCAN_STEP;
    }
    done(GAMMA_MIN, bottom, Some(last_fail))
}

fn calibrate_mean(method: MethodSpec, n: u64, target: f64) -> Result<Calibration> {
    let mean_at = |gamma: f64| -> Result<f64> { Ok(mean_coverage(method, n, ConfidenceLevel::new(gamma)?)?.value()) };
    let (mut lo, mut hi) = (GAMMA_MIN, GAMMA_MAX);
    let (c_lo, c_hi) = (mean_at(lo)?, mean_at(hi)?);
    if c_lo < target || c_hi > target {
        return Err(Error::Calibration(format!(
            "{method} at n = {n}: mean coverage spans [{c_hi}, {c_lo}], target {target}"
        )));
    }
    let mut best = (lo, c_lo);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        let c = mean_at(mid)?;
        if (c - target).abs() < (best.1 - target).abs() {
            best = (mid, c);
        }
        if c >= target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 {
            break;
        }
    }
    if (best.1 - target).abs() > GAMMA_TOL {
        return Err(Error::Calibration(format!(
            "{method} at n = {n}: mean coverage jumps past {target} near gamma = {}",
            best.0
        )));
    }
    Ok(Calibration {
        gamma: ConfidenceLevel::new(best.0)?,
        coverage: best.1,
        witness: None,
    })
}
