//! Second- and third-order expansions of the Clopper-Pearson bounds next to
//! the exact beta quantiles.
//!
//! ```bash
//! cargo run -p binomci --example expansions
//! ```

use binomci::expansions::{cp_bound_expansion, cp_upper_terms, ExpansionOrder};
use binomci::methods::{clopper_pearson_interval, ConfidenceLevel, Observation, Side};

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;

    println!("{:>5} {:>4} {:>10} {:>10} {:>10}", "n", "x", "exact", "2nd", "3rd");
    for n in [25u64, 50, 200, 1000] {
        for x in [n / 5, n / 2] {
            let obs = Observation::new(x, n)?;
            let exact = clopper_pearson_interval(obs, level)?.upper;
            let second = cp_bound_expansion(obs, level, Side::TwoSided, ExpansionOrder::SecondOrder)?.upper;
            let third = cp_bound_expansion(obs, level, Side::TwoSided, ExpansionOrder::ThirdOrder)?.upper;
            println!("{n:>5} {x:>4} {exact:>10.6} {second:>10.6} {third:>10.6}");
        }
    }

    // The individual coefficients, before they are scaled by powers of n.
    let t = cp_upper_terms(Observation::new(30, 100)?, level.z_half(), ExpansionOrder::ThirdOrder)?;
    println!(
        "\nx = 30, n = 100: {} + {}/sqrt(n) + {}/n + {}/n^1.5 = {}",
        t.t_zero, t.t_half, t.t_one, t.t_threehalf, t.value
    );

    // x = 0 and x = n are outside the expansion's range.
    match cp_bound_expansion(
        Observation::new(0, 100)?,
        level,
        Side::TwoSided,
        ExpansionOrder::ThirdOrder,
    ) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{e}"),
    }
    Ok(())
}
