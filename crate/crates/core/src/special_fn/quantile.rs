use super::inc_beta::{beta_density, inc_beta_pair};
use super::normal::normal_quantile;
use super::BetaParams;
use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Quantile of the `Beta(a, b)` distribution: the `x` with `I_x(a, b) = q`.
///
/// Newton iteration from a normal-approximation start, kept inside a
/// bisection bracket that shrinks on every residual evaluation. For
/// `q > 1/2` the residual is taken on the upper tail so that quantiles
/// near 1 keep their accuracy.
pub fn beta_quantile(q: f64, ab: BetaParams) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::domain("beta_quantile", format!("q = {q} outside (0, 1)")));
    }
    let (a, b) = (ab.a(), ab.b());
    let upper = q > 0.5;
    let target = if upper { 1.0 - q } else { q };
    let residual = |x: f64| -> Result<f64> {
        let (i, ic) = inc_beta_pair(x, a, b)?;
        Ok(if upper { target - ic } else { i - target })
    };

    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut x = initial_guess(q, a, b).clamp(1e-300, 1.0 - f64::EPSILON);
    for _ in 0..MAX_ITER {
        let r = residual(x)?;
        if r == 0.0 {
            return Ok(x);
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let f = beta_density(x, a, b);
        let mut next = if f > 0.0 && f.is_finite() { x - r / f } else { f64::NAN };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - x).abs();
        x = next;
        if step <= 2.0 * f64::EPSILON * x.min(1.0 - x) || lo.next_up() >= hi {
            return Ok(x);
        }
    }
    if hi - lo < 1e-12 {
        return Ok(x);
    }
    Err(Error::NonConvergence {
        routine: "beta_quantile",
        iterations: MAX_ITER,
        detail: format!("q = {q}, a = {a}, b = {b}, bracket [{lo}, {hi}]"),
    })
}

/// Starting point for the Newton iteration: the Cornish–Fisher style
/// normal approximation for `a, b > 1`, otherwise the leading power-law
/// behaviour of each tail.
fn initial_guess(q: f64, a: f64, b: f64) -> f64 {
    if a >= 1.0 && b >= 1.0 {
        let y = normal_quantile(q).unwrap_or(0.0);
        let r = (y * y - 3.0) / 6.0;
        let s = 1.0 / (2.0 * a - 1.0);
        let t = 1.0 / (2.0 * b - 1.0);
        let h = 2.0 / (s + t);
        let w = y * (h + r).sqrt() / h - (t - s) * (r + 5.0 / 6.0 - 2.0 / (3.0 * h));
        let x = a / (a + b * (2.0 * w).exp());
        if x.is_finite() && x > 0.0 && x < 1.0 {
            return x;
        }
    }
    let lna = (a / (a + b)).ln();
    let lnb = (b / (a + b)).ln();
    let t = (a * lna).exp() / a;
    let u = (b * lnb).exp() / b;
    let w = t + u;
    if q < t / w {
        (a * w * q).powf(1.0 / a)
    } else {
        1.0 - (b * w * (1.0 - q)).powf(1.0 / b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::reg_inc_beta;

    fn ab(a: f64, b: f64) -> BetaParams {
        BetaParams::new(a, b).unwrap()
    }

    /// Plain bisection on the incomplete beta, independent of the Newton path.
    fn bisection_oracle(q: f64, a: f64, b: f64) -> f64 {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if reg_inc_beta(mid, ab(a, b)).unwrap() < q {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn uniform_median() {
        assert!((beta_quantile(0.5, ab(1.0, 1.0)).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn closed_form_a_one() {
        for &n in &[1.0, 5.0, 10.0, 250.0, 2000.0] {
            for &q in &[0.001, 0.025, 0.5, 0.95, 0.999] {
                let want = 1.0 - f64::powf(1.0 - q, 1.0 / n);
                let got = beta_quantile(q, ab(1.0, n)).unwrap();
                assert!((got - want).abs() < 1e-12, "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn bisection_agreement() {
        let oracle = bisection_oracle(0.975, 4.0, 7.0);
        assert!((oracle - 0.6524).abs() < 5e-4);
        assert!((beta_quantile(0.975, ab(4.0, 7.0)).unwrap() - oracle).abs() < 1e-12);
        for &(q, a, b) in &[
            (0.025, 3.0, 8.0),
            (0.95, 6.0, 15.0),
            (0.005, 0.5, 30.5),
            (0.9, 120.0, 3.0),
        ] {
            let got = beta_quantile(q, ab(a, b)).unwrap();
            assert!((got - bisection_oracle(q, a, b)).abs() < 1e-12, "({q},{a},{b})");
        }
    }

    #[test]
    fn extreme_tails() {
        for &(q, a, b) in &[
            (1e-10, 1.0, 2000.0),
            (1e-8, 0.5, 0.5),
            (1.0 - 1e-9, 2.0, 2.0),
            (1e-6, 1.0, 99_999.0),
        ] {
            let x = beta_quantile(q, ab(a, b)).unwrap();
            let back = reg_inc_beta(x, ab(a, b)).unwrap();
            assert!(
                (back - q).abs() <= 1e-10 * q.max(1e-3),
                "({q},{a},{b}) -> {x}, back {back}"
            );
        }
    }

    #[test]
    fn rejects_endpoints() {
        assert!(beta_quantile(0.0, ab(2.0, 2.0)).is_err());
        assert!(beta_quantile(1.0, ab(2.0, 2.0)).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(400))]
        #[test]
        fn round_trip(log_q in -13.8f64..-0.0001, upper in proptest::bool::ANY,
                      a in 0.3f64..3000.0, b in 0.3f64..3000.0) {
            let q = if upper { 1.0 - log_q.exp() } else { log_q.exp() };
            let q = q.clamp(1e-6, 1.0 - 1e-6);
            let x = beta_quantile(q, ab(a, b)).unwrap();
            let back = reg_inc_beta(x, ab(a, b)).unwrap();
            // where one ulp of x moves I_x by more than the tolerance, q must
            // fall between the neighbouring doubles instead
            let below = reg_inc_beta(x.next_down().max(0.0), ab(a, b)).unwrap();
            let above = reg_inc_beta(x.next_up().min(1.0), ab(a, b)).unwrap();
            let bracketed = above - below > 1e-10 && below <= q && q <= above;
            proptest::prop_assert!((back - q).abs() < 1e-10 || bracketed,
                "q={} a={} b={} x={} back={}", q, a, b, x, back);
        }
    }
}
