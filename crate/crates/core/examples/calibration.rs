//! Finding the nominal level at which an approximate interval reaches a
//! coverage target, and what the adjusted interval then costs in sample
//! size.
//!
//! ```bash
//! cargo run --release -p binomci --example calibration
//! ```

use binomci::exact_eval::{calibrate_alpha, CalibrationCriterion, PGrid};
use binomci::methods::{ConfidenceLevel, MethodSpec};
use binomci::sample_size::n_plus_adjusted;

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;
    let grid = PGrid::new(0.01, 0.99, 20_001)?;

    for n in [100u64, 500, 1200] {
        let min = calibrate_alpha(
            MethodSpec::jeffreys(),
            n,
            level,
            CalibrationCriterion::MinCoverage(grid),
        )?;
        let mean = calibrate_alpha(MethodSpec::jeffreys(), n, level, CalibrationCriterion::MeanCoverage)?;
        print!(
            "Jeffreys n = {n:>4}: min-coverage gamma {:.5} (coverage {:.5})",
            min.gamma.alpha(),
            min.coverage
        );
        if let Some((g, c)) = min.witness {
            print!(", fails at {g:.5} ({c:.5})");
        }
        println!(", mean-coverage gamma {:.5}", mean.gamma.alpha());
    }

    // Already exact, so alpha itself is returned.
    let cp = calibrate_alpha(
        MethodSpec::clopper_pearson(),
        100,
        level,
        CalibrationCriterion::MinCoverage(grid),
    )?;
    println!("Clopper-Pearson n = 100: gamma {}", cp.gamma.alpha());

    for gamma in [0.05, 0.045, 0.04, 0.035] {
        let extra = n_plus_adjusted(0.04, 0.5, level, ConfidenceLevel::new(gamma)?)?;
        println!("d = 0.04, p0 = 0.5, gamma = {gamma}: CP needs {extra:+.1} observations");
    }
    Ok(())
}
