//! Tables behind the figures: expansion-versus-exact curves, required
//! sample sizes, cost-of-exactness curves and minimum coverage against n.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use super::format_value;
use crate::error::Result;
use crate::exact_eval::{expected_width_exact, min_coverage, PGrid};
use crate::expansions::{expected_distance_expansion, expected_length_expansion, ExpansionOrder};
use crate::methods::{ApproxMethod, ConfidenceLevel, MethodSpec, Side};
use crate::sample_size::{
    cp_n_one_sided, cp_n_one_sided_prior, cp_n_two_sided, n_plus_one_sided, n_plus_two_sided, Formula, Guess,
    SampleSizeQuery,
};
use crate::special_fn::BetaParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    /// Exact expected length of the two-sided interval against its expansion.
    Length,
    /// Required two-sided sample size over p0 and α.
    SampleSize,
    /// Two-sided cost of exactness against d.
    Cost,
    /// Exact expected distance of the upper bound against its expansion.
    Distance,
    /// Required upper-bound sample size, point guesses and priors.
    SampleSizeUpper,
    /// One-sided cost of exactness against d.
    CostUpper,
    /// Minimum coverage against n.
    Coverage,
}

impl FigureId {
    pub const ALL: [FigureId; 7] = [
        FigureId::Length,
        FigureId::SampleSize,
        FigureId::Cost,
        FigureId::Distance,
        FigureId::SampleSizeUpper,
        FigureId::CostUpper,
        FigureId::Coverage,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FigureId::Length => "1",
            FigureId::SampleSize => "2",
            FigureId::Cost => "3",
            FigureId::Distance => "4",
            FigureId::SampleSizeUpper => "5",
            FigureId::CostUpper => "6",
            FigureId::Coverage => "coverage",
        }
    }
}

impl FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| format!("unknown figure '{s}' (1, 2, 3, 4, 5, 6, coverage)"))
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Overrides for the default figure settings.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureOptions {
    pub alpha: f64,
    /// Sample sizes for figures 1, 4 and coverage.
    pub ns: Option<Vec<u64>>,
    /// Number of points on the p or d axis.
    pub points: Option<usize>,
    pub formula: Formula,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            alpha: 0.05,
            ns: None,
            points: None,
            formula: Formula::Derived,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_value(*v),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.header)?;
        for row in &self.rows {
            out.write_record(row.iter().map(Cell::render))?;
        }
        out.flush()?;
        Ok(())
    }

    /// Index of a named column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| *h == name)
    }
}

const P_LO: f64 = 0.002;
const P_HI: f64 = 0.998;
const P_POINTS: usize = 499;
const SMALL_NS: [u64; 3] = [20, 50, 100];
const COVERAGE_NS: [u64; 7] = [50, 100, 250, 500, 1000, 1500, 2000];
const COVERAGE_POINTS: usize = 20_001;
const ALPHAS: [f64; 3] = [0.01, 0.05, 0.1];
const P0S: [f64; 3] = [0.1, 0.3, 0.5];

fn axis(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| {
            if i + 1 == points {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            }
        })
        .collect()
}

pub fn build(id: FigureId, opts: &FigureOptions) -> Result<Table> {
    let level = ConfidenceLevel::new(opts.alpha)?;
    match id {
        FigureId::Length => expansion_curves(opts, level, Side::TwoSided),
        FigureId::Distance => expansion_curves(opts, level, Side::Upper),
        FigureId::SampleSize => sample_size_surface(opts),
        FigureId::Cost => cost_curves(opts),
        FigureId::SampleSizeUpper => sample_size_upper(opts),
        FigureId::CostUpper => cost_upper(opts, level),
        FigureId::Coverage => coverage_by_n(opts, level),
    }
}

fn expansion_curves(opts: &FigureOptions, level: ConfidenceLevel, side: Side) -> Result<Table> {
    let ns = opts.ns.clone().unwrap_or(SMALL_NS.to_vec());
    let ps = axis(P_LO, P_HI, opts.points.unwrap_or(P_POINTS));
    let m = MethodSpec::clopper_pearson().with_side(side)?;
    let jobs: Vec<(u64, f64)> = ns.iter().flat_map(|&n| ps.iter().map(move |&p| (n, p))).collect();
    let rows = jobs
        .into_par_iter()
        .map(|(n, p)| {
            let exact = expected_width_exact(m, n, p, level)?;
            let terms = match side {
                Side::TwoSided => expected_length_expansion(n, p, level)?,
                _ => expected_distance_expansion(n, p, level)?,
            };
            Ok(vec![
                Cell::Int(n as i64),
                Cell::Real(p),
                Cell::Real(exact),
                Cell::Real(terms.at(ExpansionOrder::SecondOrder)),
                Cell::Real(terms.at(ExpansionOrder::ThirdOrder)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        header: vec!["n", "p", "exact", "second_order", "third_order"],
        rows,
    })
}

fn sample_size_surface(opts: &FigureOptions) -> Result<Table> {
    let ps = axis(P_LO, P_HI, opts.points.unwrap_or(P_POINTS));
    let mut rows = Vec::new();
    for d in [0.02, 0.05, 0.1] {
        for alpha in ALPHAS {
            let level = ConfidenceLevel::new(alpha)?;
            for &p in &ps {
                let r = cp_n_two_sided(&SampleSizeQuery::point(d, p, level, Side::TwoSided)?)?;
                rows.push(vec![
                    Cell::Real(d),
                    Cell::Real(alpha),
                    Cell::Real(p),
                    Cell::Real(r.n_unrounded),
                    Cell::Int(r.n as i64),
                ]);
            }
        }
    }
    Ok(Table {
        header: vec!["d", "alpha", "p0", "n_unrounded", "n"],
        rows,
    })
}

fn cost_curves(opts: &FigureOptions) -> Result<Table> {
    let ds = axis(0.01, 0.2, opts.points.unwrap_or(96));
    let mut rows = Vec::new();
    for vs in ApproxMethod::ALL {
        for alpha in ALPHAS {
            let level = ConfidenceLevel::new(alpha)?;
            for p0 in P0S {
                for &d in &ds {
                    let v = n_plus_two_sided(vs, d, p0, level, opts.formula)?;
                    rows.push(vec![
                        Cell::Text(vs.name().into()),
                        Cell::Real(alpha),
                        Cell::Real(p0),
                        Cell::Real(d),
                        Cell::Real(v),
                    ]);
                }
            }
        }
    }
    Ok(Table {
        header: vec!["vs", "alpha", "p0", "d", "n_plus"],
        rows,
    })
}

fn sample_size_upper(opts: &FigureOptions) -> Result<Table> {
    let ds = axis(0.01, 0.1, opts.points.unwrap_or(91));
    let priors = [
        ("jeffreys", BetaParams::JEFFREYS),
        ("uniform", BetaParams::UNIFORM),
        ("beta(0.5,1)", BetaParams::new(0.5, 1.0)?),
    ];
    let mut rows = Vec::new();
    for alpha in ALPHAS {
        let level = ConfidenceLevel::new(alpha)?;
        for &d in &ds {
            for p0 in P0S {
                let r = cp_n_one_sided(&SampleSizeQuery::point(d, p0, level, Side::Upper)?, opts.formula)?;
                rows.push(vec![
                    Cell::Real(alpha),
                    Cell::Text(format!("p0={p0}")),
                    Cell::Real(d),
                    Cell::Real(r.n_unrounded),
                    Cell::Int(r.n as i64),
                ]);
            }
            for (name, ab) in priors {
                let q = SampleSizeQuery::new(d, Guess::Prior(ab), level, Side::Upper)?;
                let r = cp_n_one_sided_prior(&q, opts.formula)?;
                rows.push(vec![
                    Cell::Real(alpha),
                    Cell::Text(name.into()),
                    Cell::Real(d),
                    Cell::Real(r.n_unrounded),
                    Cell::Int(r.n as i64),
                ]);
            }
        }
    }
    Ok(Table {
        header: vec!["alpha", "guess", "d", "n_unrounded", "n"],
        rows,
    })
}

fn cost_upper(opts: &FigureOptions, level: ConfidenceLevel) -> Result<Table> {
    let ds = axis(0.01, 0.2, opts.points.unwrap_or(96));
    let mut rows = Vec::new();
    for p0 in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for &d in &ds {
            // the printed form has no real value for some (d, p0)
            let v = n_plus_one_sided(d, p0, level, opts.formula).map_or(Cell::Empty, Cell::Real);
            rows.push(vec![Cell::Real(p0), Cell::Real(d), v]);
        }
    }
    Ok(Table {
        header: vec!["p0", "d", "n_plus"],
        rows,
    })
}

fn coverage_by_n(opts: &FigureOptions, level: ConfidenceLevel) -> Result<Table> {
    let ns = opts.ns.clone().unwrap_or(COVERAGE_NS.to_vec());
    let points = opts.points.unwrap_or(COVERAGE_POINTS);
    let methods = [
        MethodSpec::jeffreys(),
        MethodSpec::wilson(),
        MethodSpec::agresti_coull(),
        MethodSpec::clopper_pearson(),
    ];
    let mut rows = Vec::new();
    for (lo, hi) in [(0.01, 0.99), (0.1, 0.9)] {
        let grid = PGrid::new(lo, hi, points)?;
        for &n in &ns {
            for m in methods {
                let r = min_coverage(m, n, level, grid)?;
                rows.push(vec![
                    Cell::Text(m.family.name().into()),
                    Cell::Real(lo),
                    Cell::Real(hi),
                    Cell::Int(n as i64),
                    Cell::Real(r.min_coverage.value()),
                    Cell::Real(r.argmin_p.value()),
                    Cell::Real(r.grid_min_coverage.value()),
                    Cell::Real(r.mean_coverage.value()),
                ]);
            }
        }
    }
    Ok(Table {
        header: vec![
            "method",
            "lo",
            "hi",
            "n",
            "min_coverage",
            "argmin_p",
            "grid_min_coverage",
            "mean_coverage",
        ],
        rows,
    })
}
