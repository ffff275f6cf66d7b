//! Curve grids for the standard plots: exceedance probability against eps
//! per interval, radius against delta, and Monte-Carlo against exact.

use std::fmt::{self, Write as _};

use clap::ValueEnum;
use localdkw::csv::fmt_sig;
use localdkw::{
    exceedance_probability, invert_radius, massart_radius, mc_report, McConfig, RadiusQuery,
    TailSide, UnitInterval,
};
use rayon::prelude::*;

use super::{CliError, CliResult};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Probability that the empirical CDF exceeds the true one by eps.
    Delta0,
    /// Probability that the empirical CDF falls below the true one by eps.
    Delta1,
    /// Radius against delta, with the Massart radius alongside.
    Epsilon0,
    /// Monte-Carlo frequencies next to the exact probabilities.
    Mcmc,
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::Delta0 => "delta0",
            Figure::Delta1 => "delta1",
            Figure::Epsilon0 => "epsilon0",
            Figure::Mcmc => "mcmc",
        })
    }
}

/// Interval families: anchored at 0 and widening, or anchored at 1.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Low,
    High,
}

impl Family {
    pub fn intervals(self) -> [(f64, f64); 6] {
        match self {
            Family::Low => [
                (0.0, 0.05),
                (0.0, 0.1),
                (0.0, 0.2),
                (0.0, 0.5),
                (0.0, 0.9),
                (0.0, 1.0),
            ],
            Family::High => [
                (0.1, 1.0),
                (0.5, 1.0),
                (0.8, 1.0),
                (0.9, 1.0),
                (0.95, 1.0),
                (0.0, 1.0),
            ],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Low => "low",
            Family::High => "high",
        })
    }
}

/// `0.001, 0.002, ..., 1`, each value the nearest double to its decimal.
pub fn default_eps_grid() -> Vec<f64> {
    (1..=1000).map(|k| k as f64 / 1000.0).collect()
}

/// Level grid for radius curves: 1000 midpoints `(k + 0.5) / 1000`, which
/// stay strictly inside (0, 1).
fn delta_grid() -> Vec<f64> {
    (0..1000).map(|k| (2 * k + 1) as f64 / 2000.0).collect()
}

pub(crate) struct FigureRequest {
    pub figure: Figure,
    pub n: usize,
    pub family: Family,
    pub tail: Option<TailSide>,
    pub seed: u64,
    pub reps: usize,
}

impl FigureRequest {
    pub fn tail(&self) -> CliResult<TailSide> {
        let fixed = match self.figure {
            Figure::Delta0 => Some(TailSide::EmpiricalAbove),
            Figure::Delta1 => Some(TailSide::EmpiricalBelow),
            Figure::Epsilon0 | Figure::Mcmc => None,
        };
        match (fixed, self.tail) {
            (Some(f), Some(t)) if f != t => Err(CliError::Usage(format!(
                "figure {} always uses tail={f}",
                self.figure
            ))),
            (Some(f), _) => Ok(f),
            (None, t) => Ok(t.unwrap_or(TailSide::EmpiricalAbove)),
        }
    }

    fn intervals(&self) -> CliResult<Vec<UnitInterval>> {
        self.family
            .intervals()
            .iter()
            .map(|&(lo, hi)| UnitInterval::new(lo, hi).map_err(CliError::from))
            .collect()
    }
}

fn label(prefix: &str, iv: UnitInterval) -> String {
    format!("{prefix}_{}_{}", fmt_sig(iv.lo()), fmt_sig(iv.hi()))
}

fn header_row(first: &str, columns: impl IntoIterator<Item = String>) -> String {
    let mut row = first.to_string();
    for c in columns {
        row.push(',');
        row.push_str(&c);
    }
    row.push('\n');
    row
}

fn push_row(out: &mut String, key: f64, values: &[f64]) {
    out.push_str(&fmt_sig(key));
    for &v in values {
        let _ = write!(out, ",{}", fmt_sig(v));
    }
    out.push('\n');
}

/// CSV body (without the invocation header) for one figure.
pub(crate) fn emit(req: &FigureRequest) -> CliResult<String> {
    let tail = req.tail()?;
    let intervals = req.intervals()?;
    let n = req.n;
    match req.figure {
        Figure::Delta0 | Figure::Delta1 => {
            let grid = default_eps_grid();
            let rows = grid
                .par_iter()
                .map(|&eps| {
                    intervals
                        .iter()
                        .map(|&iv| exceedance_probability(n, eps, iv, tail))
                        .collect::<localdkw::Result<Vec<f64>>>()
                })
                .collect::<localdkw::Result<Vec<_>>>()?;
            let mut out = header_row("eps", intervals.iter().map(|&iv| label("p", iv)));
            for (eps, row) in grid.iter().zip(&rows) {
                push_row(&mut out, *eps, row);
            }
            Ok(out)
        }
        Figure::Epsilon0 => {
            let grid = delta_grid();
            let rows = grid
                .par_iter()
                .map(|&delta| {
                    let mut row = intervals
                        .iter()
                        .map(|&iv| {
                            invert_radius(&RadiusQuery::new(n, delta, iv, tail)).map(|r| r.epsilon)
                        })
                        .collect::<localdkw::Result<Vec<f64>>>()?;
                    row.push(massart_radius(n, delta)?);
                    Ok(row)
                })
                .collect::<localdkw::Result<Vec<_>>>()?;
            let columns = intervals
                .iter()
                .map(|&iv| label("eps", iv))
                .chain(std::iter::once("dkw".to_string()));
            let mut out = header_row("delta", columns);
            for (delta, row) in grid.iter().zip(&rows) {
                push_row(&mut out, *delta, row);
            }
            Ok(out)
        }
        Figure::Mcmc => {
            let grid = default_eps_grid();
            let reports = intervals
                .iter()
                .map(|&interval| {
                    mc_report(&McConfig {
                        reps: req.reps,
                        seed: req.seed,
                        n,
                        interval,
                        tail,
                        eps_grid: grid.clone(),
                    })
                })
                .collect::<localdkw::Result<Vec<_>>>()?;
            let columns = intervals
                .iter()
                .flat_map(|&iv| [label("mc", iv), label("stderr", iv), label("exact", iv)]);
            let mut out = header_row("eps", columns);
            for (i, eps) in grid.iter().enumerate() {
                let row: Vec<f64> = reports
                    .iter()
                    .flat_map(|r| {
                        let row = &r[i];
                        [row.estimate.frequency, row.estimate.stderr, row.exact]
                    })
                    .collect();
                push_row(&mut out, *eps, &row);
            }
            Ok(out)
        }
    }
}
