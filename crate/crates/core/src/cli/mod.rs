//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and returns the
//! process exit code: 0 on success, 2 on a usage error, 1 when a
//! computation fails. Results go to standard output as `key=value` lines,
//! diagnostics to standard error, and tables to CSV files.

pub mod figures;

use std::ffi::OsString;
use std::fs::{File, OpenOptions};
use std::io::{self, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exact_eval::{
    calibrate_alpha, coverage_curve, expected_width_exact, mean_coverage, min_coverage, CalibrationCriterion, PGrid,
};
use crate::expansions::{expected_distance_expansion, expected_length_expansion, ExpansionOrder};
use crate::methods::{ApproxMethod, ConfidenceLevel, Family, MethodSpec, Observation, Side};
use crate::sample_size::{
    approx_method_n, cp_n_one_sided, cp_n_one_sided_prior, cp_n_two_sided, cp_n_two_sided_prior, exact_n_within,
    n_plus_adjusted, n_plus_one_sided, n_plus_two_sided, Formula, Guess, SampleSizeQuery, SampleSizeResult,
    DEFAULT_N_MAX,
};
use crate::special_fn::BetaParams;

use figures::{FigureId, FigureOptions};

/// Environment variable capping the worker count (0 or unset = automatic).
pub const THREADS_ENV: &str = "BINOMCI_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "binomci",
    version,
    about = "Binomial confidence intervals, exact coverage and sample sizes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interval or one-sided bound for x successes in n trials.
    Interval(IntervalArgs),
    /// Expected width (or distance to p for a bound) at a given p.
    ExpectedLength(ExpectedLengthArgs),
    /// Minimum or mean coverage over a grid of p.
    Coverage(CoverageArgs),
    /// Sample size for a target expected width or distance.
    SampleSize(SampleSizeArgs),
    /// Extra observations the exact interval needs over an approximate one.
    Cost(CostArgs),
    /// Nominal level at which a method meets a coverage target.
    Calibrate(CalibrateArgs),
    /// Write the data behind a figure as CSV.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    TwoSided,
    Upper,
    Lower,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::TwoSided => Side::TwoSided,
            SideArg::Upper => Side::Upper,
            SideArg::Lower => Side::Lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LengthMode {
    Exact,
    Expansion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Second,
    Third,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Min,
    Mean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SizeMode {
    Formula,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaArg {
    Derived,
    #[value(alias = "printed")]
    Paper,
}

impl From<FormulaArg> for Formula {
    fn from(f: FormulaArg) -> Formula {
        match f {
            FormulaArg::Derived => Formula::Derived,
            FormulaArg::Paper => Formula::AsPrinted,
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "cp" | "clopper-pearson" => Ok(Family::ClopperPearson),
        "wald" => Ok(Family::Wald),
        "wilson" => Ok(Family::Wilson),
        "ac" | "agresti-coull" => Ok(Family::AgrestiCoull),
        "jeffreys" => Ok(Family::BetaPrior(BetaParams::JEFFREYS)),
        _ => match lower.strip_prefix("beta:") {
            Some(ab) => parse_prior(ab).map(Family::BetaPrior),
            None => Err(format!(
                "unknown method '{s}' (cp, wald, wilson, ac, jeffreys, beta:a,b)"
            )),
        },
    }
}

fn parse_prior(s: &str) -> Result<BetaParams, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b but got '{s}'"))?;
    let a: f64 = a.trim().parse().map_err(|_| format!("bad prior parameter '{a}'"))?;
    let b: f64 = b.trim().parse().map_err(|_| format!("bad prior parameter '{b}'"))?;
    BetaParams::new(a, b).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum VsArg {
    Approx(ApproxMethod),
    OneSided,
    Adjusted(f64),
}

fn parse_vs(s: &str) -> Result<VsArg, String> {
    match s.to_ascii_lowercase().as_str() {
        "jeffreys" => Ok(VsArg::Approx(ApproxMethod::Jeffreys)),
        "wilson" => Ok(VsArg::Approx(ApproxMethod::Wilson)),
        "ac" | "agresti-coull" => Ok(VsArg::Approx(ApproxMethod::AgrestiCoull)),
        "one-sided" => Ok(VsArg::OneSided),
        other => match other.strip_prefix("adjusted:") {
            Some(g) => g.parse().map(VsArg::Adjusted).map_err(|_| format!("bad gamma '{g}'")),
            None => Err(format!(
                "unknown comparison '{s}' (jeffreys, wilson, ac, one-sided, adjusted:GAMMA)"
            )),
        },
    }
}

#[derive(Debug, Args)]
struct IntervalArgs {
    #[arg(long, value_parser = parse_family)]
    method: Family,
    #[arg(long)]
    x: u64,
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
    side: SideArg,
}

#[derive(Debug, Args)]
struct ExpectedLengthArgs {
    #[arg(long, value_parser = parse_family)]
    method: Family,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = LengthMode::Exact)]
    mode: LengthMode,
    /// Expansion order (expansion mode only).
    #[arg(long, value_enum, default_value_t = OrderArg::Third)]
    order: OrderArg,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value_t = 0.01)]
    lo: f64,
    #[arg(long, default_value_t = 0.99)]
    hi: f64,
    #[arg(long, default_value_t = 20_001)]
    points: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<PGrid, CliError> {
        PGrid::new(self.lo, self.hi, self.points).map_err(|e| CliError::Usage(format!("--lo/--hi/--points: {e}")))
    }
}

#[derive(Debug, Args)]
struct CoverageArgs {
    #[arg(long, value_parser = parse_family)]
    method: Family,
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
    side: SideArg,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = CriterionArg::Min)]
    criterion: CriterionArg,
    /// Write per-point coverage to this CSV file.
    #[arg(long)]
    dump: Option<std::path::PathBuf>,
    /// Overwrite an existing dump file.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
struct SampleSizeArgs {
    #[arg(long, value_parser = parse_family, default_value = "cp")]
    method: Family,
    #[arg(long)]
    d: f64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, conflicts_with = "prior", required_unless_present = "prior")]
    p0: Option<f64>,
    /// Beta prior for p as a,b.
    #[arg(long, value_parser = parse_prior)]
    prior: Option<BetaParams>,
    #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = SizeMode::Formula)]
    mode: SizeMode,
    #[arg(long, value_enum, default_value_t = FormulaArg::Derived)]
    formula: FormulaArg,
    /// Search limit for exact mode.
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: u64,
}

#[derive(Debug, Args)]
struct CostArgs {
    #[arg(long, value_parser = parse_vs)]
    vs: VsArg,
    #[arg(long)]
    d: f64,
    #[arg(long)]
    p0: f64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = FormulaArg::Derived)]
    formula: FormulaArg,
}

#[derive(Debug, Args)]
struct CalibrateArgs {
    #[arg(long, value_parser = parse_family)]
    method: Family,
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[arg(long, value_enum)]
    criterion: CriterionArg,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, value_parser = parse_figure_id)]
    id: FigureId,
    #[arg(long)]
    out: std::path::PathBuf,
    /// Overwrite an existing output file.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Sample sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    n: Vec<u64>,
    /// Number of p (or d) grid points.
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormulaArg::Derived)]
    formula: FormulaArg,
}

fn parse_figure_id(s: &str) -> Result<FigureId, String> {
    s.parse()
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Runs the command line `argv` (program name first) against the process
/// standard streams and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit output and diagnostic streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a non-negative integer, got '{raw}'"))?;
    if threads > 0 {
        // a pool built by an earlier call in the same process stays in place
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    Ok(())
}

fn level(alpha: f64) -> Result<ConfidenceLevel, CliError> {
    ConfidenceLevel::new(alpha).map_err(|e| CliError::Usage(format!("--alpha: {e}")))
}

fn method(family: Family, side: SideArg) -> Result<MethodSpec, CliError> {
    MethodSpec::new(family, side.into()).map_err(|e| CliError::Usage(format!("--method/--side: {e}")))
}

/// Ten significant digits, plain decimal where that stays readable.
pub fn format_value(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let mag = v.abs().log10().floor() as i32;
    if !(-5..10).contains(&mag) {
        return format!("{v:.9e}");
    }
    let decimals = (9 - mag).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn open_output(path: &Path, force: bool) -> Result<File, CliError> {
    let mut opts = OpenOptions::new();
    opts.write(true);
    if force {
        opts.create(true).truncate(true);
    } else {
        opts.create_new(true);
    }
    opts.open(path).map_err(|e| {
        if e.kind() == io::ErrorKind::AlreadyExists {
            CliError::Usage(format!("{} exists; pass --force to overwrite", path.display()))
        } else {
            CliError::Io(format!("{}: {e}", path.display()))
        }
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Interval(a) => interval(a, out),
        Command::ExpectedLength(a) => expected_length(a, out),
        Command::Coverage(a) => coverage(a, out),
        Command::SampleSize(a) => sample_size(a, out),
        Command::Cost(a) => cost(a, out),
        Command::Calibrate(a) => calibrate(a, out),
        Command::Figure(a) => figure(a, out, err),
    }
}

fn interval(a: IntervalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let m = method(a.method, a.side)?;
    let obs = Observation::new(a.x, a.n).map_err(|e| CliError::Usage(format!("--x/--n: {e}")))?;
    let est = m.interval(obs, level(a.alpha)?)?;
    writeln!(out, "lower={}", format_value(est.lower))?;
    writeln!(out, "upper={}", format_value(est.upper))?;
    Ok(())
}

fn expected_length(a: ExpectedLengthArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let m = method(a.method, a.side)?;
    let l = level(a.alpha)?;
    if !(0.0..=1.0).contains(&a.p) {
        return Err(CliError::Usage(format!("--p: {} outside [0, 1]", a.p)));
    }
    let value = match a.mode {
        LengthMode::Exact => expected_width_exact(m, a.n, a.p, l)?,
        LengthMode::Expansion => {
            if a.method != Family::ClopperPearson {
                return Err(CliError::Usage("--mode expansion needs --method cp".into()));
            }
            let order = match a.order {
                OrderArg::Second => ExpansionOrder::SecondOrder,
                OrderArg::Third => ExpansionOrder::ThirdOrder,
            };
            match m.side {
                Side::TwoSided => expected_length_expansion(a.n, a.p, l)?.at(order),
                Side::Upper => expected_distance_expansion(a.n, a.p, l)?.at(order),
                // E(p - L) at p is E(U - p) at 1 - p
                Side::Lower => expected_distance_expansion(a.n, 1.0 - a.p, l)?.at(order),
            }
        }
    };
    let key = if m.side == Side::TwoSided {
        "expected_length"
    } else {
        "expected_distance"
    };
    writeln!(out, "{key}={}", format_value(value))?;
    Ok(())
}

fn write_per_point(path: &Path, force: bool, rows: &[(f64, f64)]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(open_output(path, force)?);
    w.write_record(["p", "coverage"])?;
    for &(p, c) in rows {
        w.write_record([format_value(p), format_value(c)])?;
    }
    w.flush()?;
    Ok(())
}

fn coverage(a: CoverageArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let m = method(a.method, a.side)?;
    let l = level(a.alpha)?;
    let grid = a.grid.grid()?;
    if a.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if a.criterion == CriterionArg::Mean && a.dump.is_none() {
        writeln!(out, "mean_coverage={}", format_value(mean_coverage(m, a.n, l)?.value()))?;
        return Ok(());
    }
    let report = match &a.dump {
        Some(_) => coverage_curve(m, a.n, l, grid)?,
        None => min_coverage(m, a.n, l, grid)?,
    };
    if let (Some(path), Some(rows)) = (&a.dump, &report.per_point) {
        write_per_point(path, a.force, rows)?;
    }
    if a.criterion == CriterionArg::Min {
        writeln!(out, "min_coverage={}", format_value(report.min_coverage.value()))?;
        writeln!(out, "argmin_p={}", format_value(report.argmin_p.value()))?;
        writeln!(
            out,
            "grid_min_coverage={}",
            format_value(report.grid_min_coverage.value())
        )?;
        writeln!(out, "grid_argmin_p={}", format_value(report.grid_argmin_p.value()))?;
    }
    writeln!(out, "mean_coverage={}", format_value(report.mean_coverage.value()))?;
    Ok(())
}

fn print_size(out: &mut dyn Write, r: &SampleSizeResult) -> Result<(), CliError> {
    writeln!(out, "n={}", r.n)?;
    writeln!(out, "n_unrounded={}", format_value(r.n_unrounded))?;
    if let Some(w) = r.achieved {
        writeln!(out, "achieved={}", format_value(w))?;
    }
    Ok(())
}

fn sample_size(a: SampleSizeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let l = level(a.alpha)?;
    let side: Side = a.side.into();
    if side == Side::Lower {
        return Err(CliError::Usage(
            "--side: sample sizes are for two-sided or upper".into(),
        ));
    }
    let guess = match (a.p0, a.prior) {
        (Some(p), _) => {
            if !(p > 0.0 && p < 1.0) {
                return Err(CliError::Usage(format!("--p0: {p} outside (0, 1)")));
            }
            Guess::Point(crate::special_fn::Probability::new(p)?)
        }
        (None, Some(ab)) => Guess::Prior(ab),
        (None, None) => return Err(CliError::Usage("one of --p0 or --prior is required".into())),
    };
    let q = SampleSizeQuery::new(a.d, guess, l, side).map_err(|e| CliError::Usage(format!("--d: {e}")))?;
    let formula: Formula = a.formula.into();

    let result = match a.mode {
        SizeMode::Exact => {
            let Some(p0) = a.p0 else {
                return Err(CliError::Usage("--mode exact needs --p0".into()));
            };
            let m = method(a.method, a.side)?;
            exact_n_within(m, a.d, p0, l, a.n_max)?
        }
        SizeMode::Formula => match (a.method, side, guess) {
            (Family::ClopperPearson, Side::TwoSided, Guess::Point(_)) => cp_n_two_sided(&q)?,
            (Family::ClopperPearson, Side::TwoSided, Guess::Prior(_)) => cp_n_two_sided_prior(&q)?,
            (Family::ClopperPearson, Side::Upper, Guess::Point(_)) => cp_n_one_sided(&q, formula)?,
            (Family::ClopperPearson, Side::Upper, Guess::Prior(_)) => cp_n_one_sided_prior(&q, formula)?,
            (family, Side::TwoSided, Guess::Point(p)) => {
                let vs = match family {
                    Family::Wilson => ApproxMethod::Wilson,
                    Family::AgrestiCoull => ApproxMethod::AgrestiCoull,
                    Family::BetaPrior(ab) if ab == BetaParams::JEFFREYS => ApproxMethod::Jeffreys,
                    _ => {
                        return Err(CliError::Usage(format!(
                            "--mode formula has no closed form for --method {}",
                            family.name()
                        )))
                    }
                };
                approx_method_n(vs, a.d, p.value(), l)?
            }
            _ => {
                return Err(CliError::Usage(
                    "--mode formula supports cp (two-sided or upper) and jeffreys/wilson/ac two-sided with --p0".into(),
                ))
            }
        },
    };
    print_size(out, &result)
}

fn cost(a: CostArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let l = level(a.alpha)?;
    let formula: Formula = a.formula.into();
    let v = match a.vs {
        VsArg::Approx(vs) => n_plus_two_sided(vs, a.d, a.p0, l, formula)?,
        VsArg::OneSided => n_plus_one_sided(a.d, a.p0, l, formula)?,
        VsArg::Adjusted(g) => {
            let gamma = ConfidenceLevel::new(g).map_err(|e| CliError::Usage(format!("--vs adjusted: {e}")))?;
            n_plus_adjusted(a.d, a.p0, l, gamma)?
        }
    };
    writeln!(out, "n_plus={}", format_value(v))?;
    Ok(())
}

fn calibrate(a: CalibrateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let m = method(a.method, SideArg::TwoSided)?;
    let l = level(a.alpha)?;
    let criterion = match a.criterion {
        CriterionArg::Min => CalibrationCriterion::MinCoverage(a.grid.grid()?),
        CriterionArg::Mean => CalibrationCriterion::MeanCoverage,
    };
    let c = calibrate_alpha(m, a.n, l, criterion)?;
    writeln!(out, "gamma={}", format_value(c.gamma.alpha()))?;
    writeln!(out, "coverage={}", format_value(c.coverage))?;
    if let Some((g, cov)) = c.witness {
        writeln!(out, "witness_gamma={}", format_value(g))?;
        writeln!(out, "witness_coverage={}", format_value(cov))?;
    }
    Ok(())
}

fn figure(a: FigureArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let opts = FigureOptions {
        alpha: a.alpha,
        ns: (!a.n.is_empty()).then_some(a.n),
        points: a.points,
        formula: a.formula.into(),
    };
    level(opts.alpha)?;
    if opts.points.is_some_and(|p| p < 2) {
        return Err(CliError::Usage("--points must be at least 2".into()));
    }
    if opts.ns.as_ref().is_some_and(|ns| ns.contains(&0)) {
        return Err(CliError::Usage("--n values must be at least 1".into()));
    }
    if !a.force && a.out.exists() {
        return Err(CliError::Usage(format!(
            "{} exists; pass --force to overwrite",
            a.out.display()
        )));
    }
    let table = figures::build(a.id, &opts)?;
    table.write_csv(open_output(&a.out, a.force)?)?;
    writeln!(err, "wrote {} rows to {}", table.rows.len(), a.out.display())?;
    writeln!(out, "rows={}", table.rows.len())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(0.049798618457928), "0.04979861846");
        assert_eq!(format_value(331.0), "331");
        assert_eq!(format_value(-185.50123456789), "-185.5012346");
        assert_eq!(format_value(1.5e-12), "1.500000000e-12");
        assert_eq!(format_value(0.25), "0.25");
    }

    #[test]
    fn method_names() {
        assert_eq!(parse_family("CP").unwrap(), Family::ClopperPearson);
        assert_eq!(
            parse_family("beta:1,1").unwrap(),
            Family::BetaPrior(BetaParams::UNIFORM)
        );
        assert!(parse_family("beta:1").is_err());
        assert!(parse_family("mid-p").is_err());
        assert_eq!(parse_vs("adjusted:0.04").unwrap(), VsArg::Adjusted(0.04));
    }
}
