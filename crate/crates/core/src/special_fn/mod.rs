//! Special-function kernel: log-gamma, the regularized incomplete beta
//! function and its inverse, the standard normal quantile, and binomial
//! probabilities.
//!
//! Everything here is pure `f64` arithmetic with no shared state.

mod binomial;
mod gamma;
mod inc_beta;
mod normal;
mod quantile;

use std::fmt;

use crate::error::{Error, Result};

pub use binomial::{binom_cdf, binom_pmf, binom_sf};
pub use gamma::log_gamma;
pub use inc_beta::{reg_inc_beta, reg_inc_beta_complement};
pub use normal::normal_quantile;
pub use quantile::beta_quantile;

pub(crate) use binomial::pmf_unchecked;
pub(crate) use gamma::ln_gamma_pos;
pub(crate) use inc_beta::inc_beta_pair;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::domain("Probability", format!("{value} outside [0, 1]")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - p`.
    pub fn complement(self) -> Probability {
        Probability(1.0 - self.0)
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Shape parameters of a `Beta(a, b)` distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParams {
    a: f64,
    b: f64,
}

impl BetaParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
            Ok(BetaParams { a, b })
        } else {
            Err(Error::domain(
                "BetaParams",
                format!("a = {a}, b = {b} must be positive"),
            ))
        }
    }

    /// The Jeffreys prior `Beta(1/2, 1/2)`.
    pub const JEFFREYS: BetaParams = BetaParams { a: 0.5, b: 0.5 };
    /// The uniform prior `Beta(1, 1)`.
    pub const UNIFORM: BetaParams = BetaParams { a: 1.0, b: 1.0 };

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Swaps the shape parameters, the law of `1 - X`.
    pub fn mirrored(&self) -> BetaParams {
        BetaParams { a: self.b, b: self.a }
    }
}

impl fmt::Display for BetaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Beta({}, {})", self.a, self.b)
    }
}
