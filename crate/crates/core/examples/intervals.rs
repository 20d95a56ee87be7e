//! Intervals and one-sided bounds from every method for a few observations.
//!
//! ```bash
//! cargo run -p binomci --example intervals
//! ```

use binomci::methods::{ConfidenceLevel, MethodSpec, Observation, Side};
use binomci::special_fn::BetaParams;

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;
    let methods = [
        MethodSpec::clopper_pearson(),
        MethodSpec::wald(),
        MethodSpec::wilson(),
        MethodSpec::agresti_coull(),
        MethodSpec::jeffreys(),
        MethodSpec::beta_prior(BetaParams::new(2.0, 8.0)?),
    ];

    for (x, n) in [(0, 10), (3, 20), (50, 100)] {
        let obs = Observation::new(x, n)?;
        println!("x = {x}, n = {n}");
        for m in methods {
            let ci = m.interval(obs, level)?;
            println!(
                "  {:<28} [{:.5}, {:.5}]  width {:.5}",
                m.to_string(),
                ci.lower,
                ci.upper,
                ci.width()
            );
        }
    }

    // Wilson and Agresti-Coull have no one-sided form.
    let obs = Observation::new(3, 20)?;
    for m in [
        MethodSpec::clopper_pearson(),
        MethodSpec::jeffreys(),
        MethodSpec::wald(),
    ] {
        let bound = m.with_side(Side::Upper)?.interval(obs, level)?;
        println!("{:<16} upper bound {:.5}", m.family.name(), bound.upper);
    }
    if let Err(e) = MethodSpec::wilson().with_side(Side::Upper) {
        println!("{e}");
    }
    Ok(())
}
