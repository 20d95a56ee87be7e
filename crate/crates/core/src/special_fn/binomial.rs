//! Binomial probabilities via Loader's saddle-point expansion.

use super::inc_beta::inc_beta_pair;
use crate::error::{Error, Result};

const LN_2PI: f64 = 1.837_877_066_409_345_483_560_659_472_811;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_6;

/// `ln(k!) - [(k + 1/2) ln k - k + ln√(2π)]` for integer `k >= 1`.
fn stirlerr(k: u64) -> f64 {
    if k <= 15 {
        let kf = k as f64;
        let fact: f64 = (1..=k).map(|j| j as f64).product();
        return fact.ln() - (kf + 0.5) * kf.ln() + kf - HALF_LN_2PI;
    }
    let r = 1.0 / k as f64;
    let r2 = r * r;
    r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 * (1.0 / 1680.0 - r2 * (1.0 / 1188.0)))))
}

/// Deviance term `x ln(x / m) + m - x`.
fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        let mut ej = 2.0 * x * v;
        let v2 = v * v;
        for j in 1..1000 {
            ej *= v2;
            let s1 = s + ej / (2 * j + 1) as f64;
            if s1 == s {
                return s1;
            }
            s = s1;
        }
        s
    } else {
        x * (x / m).ln() + m - x
    }
}

fn check(routine: &'static str, k: u64, n: u64, p: f64) -> Result<()> {
    if k > n {
        return Err(Error::domain(routine, format!("k = {k} exceeds n = {n}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(routine, format!("p = {p} outside [0, 1]")));
    }
    Ok(())
}

pub(crate) fn pmf_unchecked(k: u64, n: u64, p: f64) -> f64 {
    let q = 1.0 - p;
    if p == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    let nf = n as f64;
    if k == 0 {
        if n == 0 {
            return 1.0;
        }
        let lc = if p < 0.1 {
            -bd0(nf, nf * q) - nf * p
        } else {
            nf * (-p).ln_1p()
        };
        return lc.exp();
    }
    if k == n {
        let lc = if q < 0.1 {
            -bd0(nf, nf * p) - nf * q
        } else {
            nf * p.ln()
        };
        return lc.exp();
    }
    let kf = k as f64;
    let lc = stirlerr(n) - stirlerr(k) - stirlerr(n - k) - bd0(kf, nf * p) - bd0(nf - kf, nf * q);
    let lf = LN_2PI + kf.ln() + (-kf / nf).ln_1p();
    (lc - 0.5 * lf).exp()
}

/// `P(X = k)` for `X ~ Bin(n, p)`.
pub fn binom_pmf(k: u64, n: u64, p: f64) -> Result<f64> {
    check("binom_pmf", k, n, p)?;
    Ok(pmf_unchecked(k, n, p))
}

/// `P(X <= k)` for `X ~ Bin(n, p)`, through the beta tail identity
/// `P(X <= k) = 1 - I_p(k + 1, n - k)`.
pub fn binom_cdf(k: u64, n: u64, p: f64) -> Result<f64> {
    check("binom_cdf", k, n, p)?;
    cdf_unchecked(k, n, p)
}

fn cdf_unchecked(k: u64, n: u64, p: f64) -> Result<f64> {
    if k >= n || p == 0.0 {
        return Ok(1.0);
    }
    if p == 1.0 {
        return Ok(0.0);
    }
    inc_beta_pair(p, (k + 1) as f64, (n - k) as f64).map(|(_, ic)| ic)
}

/// `P(X >= k)`, i.e. `I_p(k, n - k + 1)`.
pub fn binom_sf(k: u64, n: u64, p: f64) -> Result<f64> {
    check("binom_sf", k, n, p)?;
    if k == 0 {
        return Ok(1.0);
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    inc_beta_pair(p, k as f64, (n - k + 1) as f64).map(|(i, _)| i)
}
