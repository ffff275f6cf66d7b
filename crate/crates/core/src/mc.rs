//! Exact supremum deviations of sampled data and a seeded Monte-Carlo
//! estimator of the exceedance probabilities.
//!
//! Replication `r` draws its uniforms from `ChaCha8Rng` (rand_chacha 0.9)
//! seeded with `seed_from_u64(seed)` and switched to stream `r`, so results
//! do not depend on thread count or scheduling.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::csv::fmt_sig;
use crate::error::{invalid, Error, Result};
use crate::exact::exceedance_probability;
use crate::interval::{TailSide, UnitInterval};
use crate::numeric::{ln_pow, CompensatedSum};

fn check_sorted_unit(sorted: &[f64]) -> Result<()> {
    if sorted.windows(2).any(|w| !(w[0] <= w[1])) {
        return Err(Error::UnsortedInput);
    }
    if let (Some(&first), Some(&last)) = (sorted.first(), sorted.last()) {
        if !(first >= 0.0 && last <= 1.0) {
            return invalid("uniform samples must lie in [0, 1]");
        }
    }
    Ok(())
}

/// `sup_{u in [lo,hi]} U_n(u) - u` for sorted samples.
///
/// The supremum is attained at `lo` or at a sample inside the interval.
pub fn sup_dev_left(sorted: &[f64], interval: UnitInterval) -> Result<f64> {
    check_sorted_unit(sorted)?;
    if sorted.is_empty() {
        return Err(Error::EmptySample);
    }
    let n = sorted.len() as f64;
    let (lo, hi) = (interval.lo(), interval.hi());
    let at_lo = sorted.partition_point(|&u| u <= lo);
    let mut best = at_lo as f64 / n - lo;
    let end = sorted.partition_point(|&u| u <= hi);
    for (k, &u) in sorted.iter().enumerate().take(end).skip(at_lo) {
        best = best.max((k + 1) as f64 / n - u);
    }
    Ok(best)
}

/// `sup_{u in [lo,hi]} u - U_n(u)` for sorted samples.
///
/// The supremum is approached from the left at `hi` or at a sample in
/// `(lo, hi]`; left limits use strict counts `#{u_i < v}`.
pub fn sup_dev_right(sorted: &[f64], interval: UnitInterval) -> Result<f64> {
    check_sorted_unit(sorted)?;
    if sorted.is_empty() {
        return Err(Error::EmptySample);
    }
    let n = sorted.len() as f64;
    let (lo, hi) = (interval.lo(), interval.hi());
    let below_hi = sorted.partition_point(|&u| u < hi);
    let mut best = hi - below_hi as f64 / n;
    let start = sorted.partition_point(|&u| u <= lo);
    for (k, &u) in sorted.iter().enumerate().take(below_hi).skip(start) {
        best = best.max(u - k as f64 / n);
    }
    Ok(best)
}

pub fn sup_dev(sorted: &[f64], interval: UnitInterval, tail: TailSide) -> Result<f64> {
    match tail {
        TailSide::EmpiricalAbove => sup_dev_left(sorted, interval),
        TailSide::EmpiricalBelow => sup_dev_right(sorted, interval),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub reps: usize,
    pub seed: u64,
    pub n: usize,
    pub interval: UnitInterval,
    pub tail: TailSide,
    pub eps_grid: Vec<f64>,
}

impl McConfig {
    pub const DEFAULT_REPS: usize = 10_000;

    fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            return invalid("reps must be at least 1");
        }
        if self.n == 0 {
            return invalid("sample count n must be at least 1");
        }
        if self.eps_grid.is_empty() {
            return invalid("eps grid must be non-empty");
        }
        if !self.eps_grid.iter().all(|&e| e > 0.0 && e.is_finite()) {
            return invalid("eps grid values must be positive and finite");
        }
        if self.eps_grid.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("eps grid must be strictly increasing");
        }
        Ok(())
    }

    pub fn header(&self) -> String {
        format!(
            "# seed={} reps={} n={} interval={} tail={}",
            self.seed, self.reps, self.n, self.interval, self.tail
        )
    }
}

/// Sorted uniforms for replication `rep` of the stream family `seed`.
pub fn replication_sample(seed: u64, rep: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(rep);
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

/// A supremum counts as exceeding `eps` only when it is larger by more than
/// this. Suprema have atoms at rationals such as `k/n - lo`, which floating
/// point evaluates with an error of a few ulps.
pub const ATOM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub eps: f64,
    pub frequency: f64,
    /// Binomial standard error `sqrt(p (1 - p) / M)`.
    pub stderr: f64,
    pub count: usize,
}

/// Monte-Carlo exceedance frequencies; one sample set serves the whole grid.
pub fn mc_exceedance(cfg: &McConfig) -> Result<Vec<McEstimate>> {
    cfg.validate()?;
    let mut sups = (0..cfg.reps as u64)
        .into_par_iter()
        .map(|rep| {
            sup_dev(
                &replication_sample(cfg.seed, rep, cfg.n),
                cfg.interval,
                cfg.tail,
            )
        })
        .collect::<Result<Vec<f64>>>()?;
    sups.sort_by(f64::total_cmp);
    let m = cfg.reps as f64;
    Ok(cfg
        .eps_grid
        .iter()
        .map(|&eps| {
            let count = sups.len() - sups.partition_point(|&s| s <= eps + ATOM_TOL);
            let p = count as f64 / m;
            McEstimate {
                eps,
                frequency: p,
                stderr: (p * (1.0 - p) / m).sqrt(),
                count,
            }
        })
        .collect())
}

/// One line of the Monte-Carlo versus exact comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McRow {
    pub estimate: McEstimate,
    pub exact: f64,
    pub abs_diff: f64,
}

impl McRow {
    /// `|exact - frequency| <= k stderr + slack`.
    pub fn agrees(&self, k: f64, slack: f64) -> bool {
        self.abs_diff <= k * self.estimate.stderr + slack
    }
}

pub fn mc_report(cfg: &McConfig) -> Result<Vec<McRow>> {
    let estimates = mc_exceedance(cfg)?;
    estimates
        .into_iter()
        .map(|estimate| {
            let exact = exceedance_probability(cfg.n, estimate.eps, cfg.interval, cfg.tail)?;
            Ok(McRow {
                estimate,
                exact,
                abs_diff: (exact - estimate.frequency).abs(),
            })
        })
        .collect()
}

/// CSV report with the configuration echoed in a comment line.
pub fn mc_report_csv(cfg: &McConfig, rows: &[McRow]) -> String {
    let mut out = cfg.header();
    out.push_str("\neps,frequency,stderr,exact,abs_diff\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_sig(r.estimate.eps),
            fmt_sig(r.estimate.frequency),
            fmt_sig(r.estimate.stderr),
            fmt_sig(r.exact),
            fmt_sig(r.abs_diff)
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinomialMode {
    GreaterThan,
    LessThan,
}

/// `P(Bin(n,p) > threshold)` or `P(Bin(n,p) < threshold)` by direct summation.
pub fn binomial_tail(n: usize, p: f64, mode: BinomialMode, threshold: f64) -> Result<f64> {
    if n == 0 {
        return invalid("binomial size must be at least 1");
    }
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("success probability p = {p} must lie in [0, 1]"));
    }
    if threshold.is_nan() {
        return invalid("threshold must not be NaN");
    }
    let mut ln_fact = Vec::with_capacity(n + 1);
    let mut running = 0.0;
    ln_fact.push(0.0);
    for i in 1..=n {
        running += (i as f64).ln();
        ln_fact.push(running);
    }
    let mut acc = CompensatedSum::new();
    for k in 0..=n {
        let kf = k as f64;
        let keep = match mode {
            BinomialMode::GreaterThan => kf > threshold,
            BinomialMode::LessThan => kf < threshold,
        };
        if keep {
            let ln_pmf = ln_fact[n] - ln_fact[k] - ln_fact[n - k]
                + ln_pow(p, kf)
                + ln_pow(1.0 - p, (n - k) as f64);
            acc.add(ln_pmf.exp());
        }
    }
    Ok(acc.value().clamp(0.0, 1.0))
}
