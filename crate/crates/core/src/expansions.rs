//! Asymptotic expansions for the Clopper–Pearson bounds, the expected
//! length of the interval, the expected distance of the upper bound, and
//! the excess length over approximate intervals.
//!
//! Expansions are kept in coefficient form so each order can be checked
//! on its own.

use crate::error::{Error, Result};
use crate::methods::{ApproxMethod, ConfidenceLevel, Family, IntervalEstimate, MethodSpec, Observation, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionOrder {
    /// Terms through `n^{-1}`.
    SecondOrder,
    /// Adds the `n^{-3/2}` terms.
    ThirdOrder,
}

/// `t_zero + t_half n^{-1/2} + t_one n^{-1} + t_threehalf n^{-3/2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerms {
    pub n: f64,
    pub t_zero: f64,
    pub t_half: f64,
    pub t_one: f64,
    pub t_threehalf: f64,
    /// Sum through the order the terms were requested at.
    pub value: f64,
}

impl ExpansionTerms {
    fn assemble(n: f64, t_zero: f64, t_half: f64, t_one: f64, t_threehalf: f64, order: ExpansionOrder) -> Self {
        let mut terms = ExpansionTerms {
            n,
            t_zero,
            t_half,
            t_one,
            t_threehalf,
            value: 0.0,
        };
        terms.value = terms.at(order);
        terms
    }

    /// The sum truncated at `order`.
    pub fn at(&self, order: ExpansionOrder) -> f64 {
        let second = self.t_zero + self.t_half / self.n.sqrt() + self.t_one / self.n;
        match order {
            ExpansionOrder::SecondOrder => second,
            ExpansionOrder::ThirdOrder => second + self.t_threehalf / (self.n * self.n.sqrt()),
        }
    }
}

fn check_p(routine: &'static str, p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(routine, format!("p = {p} outside (0, 1)")))
    }
}

fn check_n(routine: &'static str, n: u64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::domain(routine, "n must be at least 1"))
    }
}

/// Expansion of the Clopper–Pearson lower limit with normal quantile `z`.
pub fn cp_lower_terms(obs: Observation, z: f64, order: ExpansionOrder) -> Result<ExpansionTerms> {
    let (p, q) = interior_phat("cp_lower_terms", obs)?;
    let z2 = z * z;
    let sd = (p * q).sqrt();
    let t_half = -z * sd;
    let t_one = (2.0 * (0.5 - p) * z2 - (1.0 + p)) / 3.0;
    let bracket = -53.0 / 36.0 - (0.5 - p) / p + (z2 + 11.0) / (36.0 * p * q) - 13.0 * z2 / 36.0;
    let t_threehalf = -z * sd * bracket;
    Ok(ExpansionTerms::assemble(
        obs.n() as f64,
        p,
        t_half,
        t_one,
        t_threehalf,
        order,
    ))
}

/// Expansion of the Clopper–Pearson upper limit with normal quantile `z`.
pub fn cp_upper_terms(obs: Observation, z: f64, order: ExpansionOrder) -> Result<ExpansionTerms> {
    let (p, q) = interior_phat("cp_upper_terms", obs)?;
    let z2 = z * z;
    let sd = (p * q).sqrt();
    let t_half = z * sd;
    let t_one = (2.0 * (0.5 - p) * z2 + 1.0 + q) / 3.0;
    let bracket = -53.0 / 36.0 + (0.5 - p) / q + (z2 + 11.0) / (36.0 * p * q) - 13.0 * z2 / 36.0;
    let t_threehalf = z * sd * bracket;
    Ok(ExpansionTerms::assemble(
        obs.n() as f64,
        p,
        t_half,
        t_one,
        t_threehalf,
        order,
    ))
}

fn interior_phat(routine: &'static str, obs: Observation) -> Result<(f64, f64)> {
    if obs.x() == 0 || obs.x() == obs.n() {
        return Err(Error::domain(
            routine,
            format!("expansion undefined at x = {} of n = {}", obs.x(), obs.n()),
        ));
    }
    let p = obs.p_hat();
    Ok((p, 1.0 - p))
}

/// Closed-form approximation of the Clopper–Pearson interval or bound.
/// One-sided bounds use `z_α` in place of `z_{α/2}`. Fails at `x ∈ {0, n}`.
pub fn cp_bound_expansion(
    obs: Observation,
    level: ConfidenceLevel,
    side: Side,
    order: ExpansionOrder,
) -> Result<IntervalEstimate> {
    let z = level.z_for(side);
    let (lower, upper) = match side {
        Side::TwoSided => (
            cp_lower_terms(obs, z, order)?.value,
            cp_upper_terms(obs, z, order)?.value,
        ),
        Side::Upper => (0.0, cp_upper_terms(obs, z, order)?.value),
        Side::Lower => (cp_lower_terms(obs, z, order)?.value, 1.0),
    };
    Ok(IntervalEstimate {
        lower,
        upper,
        method: MethodSpec {
            family: Family::ClopperPearson,
            side,
        },
        level,
    })
}

/// Expected length of the two-sided `1 - α` Clopper–Pearson interval,
/// with the remainder `O(n^{-2})`.
pub fn expected_length_expansion(n: u64, p: f64, level: ConfidenceLevel) -> Result<ExpansionTerms> {
    check_n("expected_length_expansion", n)?;
    check_p("expected_length_expansion", p)?;
    let z = level.z_half();
    let z2 = z * z;
    let pq = p * (1.0 - p);
    let t_half = 2.0 * z * pq.sqrt();
    let t_threehalf = z / 18.0 * (z2 - 2.5 - 17.0 * pq - 13.0 * pq * z2) / pq.sqrt();
    Ok(ExpansionTerms::assemble(
        n as f64,
        0.0,
        t_half,
        1.0,
        t_threehalf,
        ExpansionOrder::ThirdOrder,
    ))
}

/// Expected distance `E(p_U - p)` of the one-sided `1 - α` upper
/// Clopper–Pearson bound.
pub fn expected_distance_expansion(n: u64, p: f64, level: ConfidenceLevel) -> Result<ExpansionTerms> {
    check_n("expected_distance_expansion", n)?;
    check_p("expected_distance_expansion", p)?;
    let z = level.z_full();
    let z2 = z * z;
    let q = 1.0 - p;
    let pq = p * q;
    let t_half = z * pq.sqrt();
    let t_one = (2.0 * (0.5 - p) * z2 + 1.0 + q) / 3.0;
    let bracket = -53.0 / 36.0 + (0.5 - p) / q + (z2 + 6.5) / (36.0 * pq) - 13.0 * z2 / 36.0;
    let t_threehalf = z * pq.sqrt() * bracket;
    Ok(ExpansionTerms::assemble(
        n as f64,
        0.0,
        t_half,
        t_one,
        t_threehalf,
        ExpansionOrder::ThirdOrder,
    ))
}

/// Asymptotic excess `E(L_CP) - E(L_vs)` of the Clopper–Pearson interval
/// over an approximate interval.
///
/// Against Jeffreys the excess is `1/n` up to `O(n^{-2})`. Against Wilson
/// and Agresti–Coull it is `1/n` at second order; third order subtracts
/// an `n^{-3/2}` bracket specific to each.
pub fn excess_length(vs: ApproxMethod, n: u64, p: f64, level: ConfidenceLevel, order: ExpansionOrder) -> Result<f64> {
    check_n("excess_length", n)?;
    check_p("excess_length", p)?;
    let nf = n as f64;
    let base = 1.0 / nf;
    if order == ExpansionOrder::SecondOrder || vs == ApproxMethod::Jeffreys {
        return Ok(base);
    }
    let z = level.z_half();
    let z2 = z * z;
    let pq = p * (1.0 - p);
    let shifted = (26.0 / 9.0 * pq - 2.0 / 9.0).powi(2);
    let bracket = match vs {
        ApproxMethod::Wilson => 9.0 * z * (z + shifted) + 34.0 * pq * (1.0 - 2.0 * z2) - 4.0,
        ApproxMethod::AgrestiCoull => 9.0 * z * (2.0 * z + shifted) + pq * (34.0 - 108.0 * z2) - 4.0,
        ApproxMethod::Jeffreys => unreachable!(),
    };
    Ok(base - z / (36.0 * pq.sqrt()) * bracket / (nf * nf.sqrt()))
}

/// Excess expected distance of the one-sided Clopper–Pearson upper bound
/// over the Jeffreys bound: `1/(2n)`.
pub fn excess_distance_one_sided(n: u64) -> Result<f64> {
    check_n("excess_distance_one_sided", n)?;
    Ok(0.5 / n as f64)
}
