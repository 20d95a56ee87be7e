use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the routine.
    #[error("domain error in {routine}: {detail}")]
    Domain { routine: &'static str, detail: String },

    /// An iterative routine exhausted its iteration budget.
    #[error("{routine} did not converge after {iterations} iterations ({detail})")]
    NonConvergence {
        routine: &'static str,
        iterations: usize,
        detail: String,
    },

    /// The requested side is not defined for the method family.
    #[error("{family} has no {side} bound")]
    UnsupportedSide { family: &'static str, side: &'static str },

    /// A coverage calibration target cannot be met in the search range.
    #[error("calibration failed: {0}")]
    Calibration(String),

    /// A sample-size search exceeded its upper limit.
    #[error("no sample size up to {n_max} reaches target {target}")]
    Budget { n_max: u64, target: f64 },
}

impl Error {
    pub(crate) fn domain(routine: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            routine,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
