//! Exact coverage: a single point, a minimum over a grid refined at the
//! interval endpoints, and the closed-form mean coverage.
//!
//! ```bash
//! cargo run --release -p binomci --example coverage
//! ```

use binomci::exact_eval::{coverage_curve, coverage_probability, min_coverage, PGrid};
use binomci::methods::{ConfidenceLevel, MethodSpec};

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;
    let methods = [
        MethodSpec::jeffreys(),
        MethodSpec::wilson(),
        MethodSpec::agresti_coull(),
        MethodSpec::clopper_pearson(),
        MethodSpec::wald(),
    ];

    let c = coverage_probability(MethodSpec::wilson(), 40, 0.12, level)?;
    println!("Wilson, n = 40, p = 0.12: coverage {c}\n");

    let wide = PGrid::new(0.01, 0.99, 20_001)?;
    let inner = PGrid::new(0.1, 0.9, 20_001)?;
    println!(
        "{:<16} {:>5} {:>10} {:>10} {:>10} {:>10}",
        "method", "n", "[.01,.99]", "at p", "[.1,.9]", "mean"
    );
    for n in [50u64, 250, 1000] {
        for m in methods {
            let r = min_coverage(m, n, level, wide)?;
            let r_inner = min_coverage(m, n, level, inner)?;
            println!(
                "{:<16} {n:>5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
                m.family.name(),
                r.min_coverage.value(),
                r.argmin_p.value(),
                r_inner.min_coverage.value(),
                r.mean_coverage.value()
            );
        }
    }

    // Endpoint probes find dips that fall between grid points.
    let coarse = PGrid::new(0.01, 0.99, 99)?;
    let r = coverage_curve(MethodSpec::jeffreys(), 100, level, coarse)?;
    println!(
        "\nJeffreys, n = 100, 99 grid points: grid min {:.5}, refined min {:.5}, {} points kept",
        r.grid_min_coverage.value(),
        r.min_coverage.value(),
        r.per_point.map_or(0, |v| v.len())
    );
    Ok(())
}
