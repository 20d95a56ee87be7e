//! Sample size for a target expected width or distance: closed forms for
//! point guesses and Beta priors, and exact search.
//!
//! ```bash
//! cargo run --release -p binomci --example sample_size
//! ```

use binomci::methods::{ConfidenceLevel, MethodSpec, Side};
use binomci::sample_size::{
    cp_n_one_sided, cp_n_one_sided_prior, cp_n_two_sided, cp_n_two_sided_prior, exact_n, Formula, Guess,
    SampleSizeQuery,
};
use binomci::special_fn::BetaParams;

fn main() -> binomci::Result<()> {
    let level = ConfidenceLevel::new(0.05)?;

    let q = SampleSizeQuery::point(0.05, 0.05, level, Side::TwoSided)?;
    let closed = cp_n_two_sided(&q)?;
    let exact = exact_n(MethodSpec::clopper_pearson(), 0.05, 0.05, level)?;
    println!(
        "width 0.05 at p0 = 0.05: closed form {} ({:.2}), exact {} (width {:.5})",
        closed.n,
        closed.n_unrounded,
        exact.n,
        exact.achieved.unwrap_or(f64::NAN)
    );

    for prior in [BetaParams::JEFFREYS, BetaParams::UNIFORM, BetaParams::new(2.0, 2.0)?] {
        let q = SampleSizeQuery::new(0.05, Guess::Prior(prior), level, Side::TwoSided)?;
        println!("width 0.05 averaged over {prior}: n = {}", cp_n_two_sided_prior(&q)?.n);
    }

    let q = SampleSizeQuery::point(0.02, 0.5, level, Side::Upper)?;
    let upper = MethodSpec::clopper_pearson().with_side(Side::Upper)?;
    println!(
        "\nupper bound within 0.02 of p0 = 0.5: closed form {}, exact {}",
        cp_n_one_sided(&q, Formula::Derived)?.n,
        exact_n(upper, 0.02, 0.5, level)?.n
    );
    println!(
        "  as printed: {:.0}",
        cp_n_one_sided(&q, Formula::AsPrinted)?.n_unrounded
    );

    let q = SampleSizeQuery::new(0.02, Guess::Prior(BetaParams::JEFFREYS), level, Side::Upper)?;
    println!(
        "upper bound, Jeffreys prior: derived {:.2}, as printed {:.0}",
        cp_n_one_sided_prior(&q, Formula::Derived)?.n_unrounded,
        cp_n_one_sided_prior(&q, Formula::AsPrinted)?.n_unrounded
    );
    Ok(())
}
