//! Exact expected width by enumeration over x, against the asymptotic
//! expansion, and the excess width of the exact interval over Jeffreys.
//!
//! ```bash
//! cargo run -p binomci --example expected_length
//! ```

use binomci::exact_eval::expected_width_exact;
use binomci::expansions::{excess_length, expected_distance_expansion, expected_length_expansion, ExpansionOrder};
use binomci::methods::{ApproxMethod, ConfidenceLevel, MethodSpec, Side};

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;
    let cp = MethodSpec::clopper_pearson();

    println!("two-sided expected width");
    println!("{:>5} {:>5} {:>10} {:>10} {:>10}", "n", "p", "exact", "2nd", "3rd");
    for n in [20u64, 50, 100, 400] {
        for p in [0.1, 0.3, 0.5] {
            let exact = expected_width_exact(cp, n, p, level)?;
            let t = expected_length_expansion(n, p, level)?;
            println!(
                "{n:>5} {p:>5} {exact:>10.6} {:>10.6} {:>10.6}",
                t.at(ExpansionOrder::SecondOrder),
                t.at(ExpansionOrder::ThirdOrder)
            );
        }
    }

    println!("\nupper bound, expected distance to p");
    let upper = cp.with_side(Side::Upper)?;
    for n in [50u64, 200] {
        for p in [0.1, 0.5] {
            let exact = expected_width_exact(upper, n, p, level)?;
            let approx = expected_distance_expansion(n, p, level)?.value;
            println!("n = {n:>3}, p = {p}: exact {exact:.6}, expansion {approx:.6}");
        }
    }

    println!("\nexcess width over the approximate intervals at p = 0.5");
    for n in [50u64, 100, 200] {
        let exact_cp = expected_width_exact(cp, n, 0.5, level)?;
        for vs in ApproxMethod::ALL {
            let got = exact_cp - expected_width_exact(vs.spec(), n, 0.5, level)?;
            let predicted = excess_length(vs, n, 0.5, level, ExpansionOrder::ThirdOrder)?;
            println!("n = {n:>3} {:<14} exact {got:.6}, predicted {predicted:.6}", vs.name());
        }
    }
    Ok(())
}
