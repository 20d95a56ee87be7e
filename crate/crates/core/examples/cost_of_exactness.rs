//! Extra observations the exact interval needs to match the expected width
//! of an approximate one.
//!
//! ```bash
//! cargo run --release -p binomci --example cost_of_exactness
//! ```

use binomci::methods::{ApproxMethod, ConfidenceLevel, MethodSpec, Side};
use binomci::sample_size::{exact_n, n_plus_one_sided, n_plus_two_sided, Formula};

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;
    let d = 0.05;

    println!(
        "{:<14} {:>5} {:>9} {:>9} {:>7}",
        "vs", "p0", "derived", "printed", "exact"
    );
    for vs in ApproxMethod::ALL {
        for p0 in [0.1, 0.3, 0.5] {
            let derived = n_plus_two_sided(vs, d, p0, level, Formula::Derived)?;
            let printed = n_plus_two_sided(vs, d, p0, level, Formula::AsPrinted)?;
            let exact = exact_n(MethodSpec::clopper_pearson(), d, p0, level)?.n as i64
                - exact_n(vs.spec(), d, p0, level)?.n as i64;
            println!("{:<14} {p0:>5} {derived:>9.2} {printed:>9.2} {exact:>7}", vs.name());
        }
    }

    println!("\nupper bound against Jeffreys");
    let cp = MethodSpec::clopper_pearson().with_side(Side::Upper)?;
    let j = MethodSpec::jeffreys().with_side(Side::Upper)?;
    for p0 in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let derived = n_plus_one_sided(d, p0, level, Formula::Derived)?;
        let printed = n_plus_one_sided(d, p0, level, Formula::AsPrinted)
            .map_or_else(|_| "undefined".to_string(), |v| format!("{v:.2}"));
        let exact = exact_n(cp, d, p0, level)?.n as i64 - exact_n(j, d, p0, level)?.n as i64;
        println!("p0 = {p0}: derived {derived:.2}, printed {printed}, exact {exact}");
    }
    Ok(())
}
