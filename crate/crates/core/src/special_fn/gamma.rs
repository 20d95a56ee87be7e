use crate::error::{Error, Result};

// Lanczos approximation with g = 6.024680040776729583740234375 and 13 terms,
// in the rational form used by Boost.Math (`lanczos13m53`) and CPython's
// `math.lgamma`. Documented relative error of the sum is below 1e-15 for
// double precision on x > 0.
const LANCZOS_G: f64 = 6.024_680_040_776_729_583_740_234_375;
const LANCZOS_G_MINUS_HALF: f64 = 5.524_680_040_776_729_583_740_234_375;

#[allow(clippy::excessive_precision)]
const LANCZOS_NUM: [f64; 13] = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
];

const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39916800.0,
    120543840.0,
    150917976.0,
    105258076.0,
    45995730.0,
    13339535.0,
    2637558.0,
    357423.0,
    32670.0,
    1925.0,
    66.0,
    1.0,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_6;

fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    if x < 5.0 {
        for i in (0..13).rev() {
            num = num * x + LANCZOS_NUM[i];
            den = den * x + LANCZOS_DEN[i];
        }
    } else {
        for i in 0..13 {
            num = num / x + LANCZOS_NUM[i];
            den = den / x + LANCZOS_DEN[i];
        }
    }
    num / den
}

/// Natural logarithm of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "log_gamma",
            format!("x = {x} must be positive and finite"),
        ));
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 1e-8 {
        // Γ(x) = 1/x - γ + O(x)
        return -x.ln() - 0.577_215_664_901_532_9 * x;
    }
    let lead = (x - 0.5) * ((x + LANCZOS_G_MINUS_HALF).ln() - 1.0);
    lanczos_sum(x).ln() - LANCZOS_G + lead
}

/// Stirling remainder `δ(z) = lnΓ(z) - (z - 1/2) ln z + z - ln√(2π)`,
/// valid for `z >= 10`.
pub(crate) fn stirling_delta(z: f64) -> f64 {
    debug_assert!(z >= 10.0);
    let r = 1.0 / z;
    let r2 = r * r;
    // Bernoulli series; the next term is below 1e-17 at z = 10
    r * (1.0 / 12.0
        - r2 * (1.0 / 360.0
            - r2 * (1.0 / 1260.0
                - r2 * (1.0 / 1680.0 - r2 * (1.0 / 1188.0 - r2 * (691.0 / 360360.0 - r2 * (1.0 / 156.0)))))))
}

/// `log1p(t) - t` without cancellation for small `t`.
pub(crate) fn log1pmx(t: f64) -> f64 {
    if t.abs() > 0.5 {
        return t.ln_1p() - t;
    }
    let mut term = t;
    let mut sum = 0.0;
    for k in 2..200 {
        term *= -t;
        let add = term / k as f64;
        sum += add;
        if add.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `ln B(a, b)` for positive `a`, `b`.
///
/// Large arguments go through Stirling differences so the result keeps
/// full absolute accuracy when `a + b` reaches 1e5 and beyond.
pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    let (small, large) = if a < b { (a, b) } else { (b, a) };
    let s = a + b;
    if small >= 10.0 {
        let delta = stirling_delta(a) + stirling_delta(b) - stirling_delta(s);
        a * (a / s).ln() + b * (b / s).ln() + 0.5 * (s / (a * b)).ln() + HALF_LN_2PI + delta
    } else if large >= 10.0 {
        ln_gamma_pos(small) - small * large.ln() - (s - 0.5) * (small / large).ln_1p() + small + stirling_delta(large)
            - stirling_delta(s)
    } else {
        ln_gamma_pos(a) + ln_gamma_pos(b) - ln_gamma_pos(s)
    }
}

/// `ln[x^a y^b / B(a, b)]` with `y = 1 - x`, accurate for large `a`, `b`.
pub(crate) fn ln_power_terms(x: f64, y: f64, a: f64, b: f64) -> f64 {
    if a >= 10.0 && b >= 10.0 {
        let s = a + b;
        let x0 = a / s;
        let y0 = b / s;
        let e = if x < y { x - x0 } else { y0 - y };
        let delta = stirling_delta(a) + stirling_delta(b) - stirling_delta(s);
        a * log1pmx(e / x0) + b * log1pmx(-e / y0) + 0.5 * (a * b / s).ln() - HALF_LN_2PI - delta
    } else {
        let ln_x = if y < 0.5 { (-y).ln_1p() } else { x.ln() };
        let ln_y = if x < 0.5 { (-x).ln_1p() } else { y.ln() };
        a * ln_x + b * ln_y - ln_beta(a, b)
    }
}
