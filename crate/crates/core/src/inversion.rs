//! Confidence radii obtained by inverting the exact exceedance probability,
//! radius tables, and CDF confidence bands.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::csv::fmt_sig;
use crate::ecdf::EmpiricalCdf;
use crate::error::{invalid, Result};
use crate::exact::exceedance_probability;
use crate::interval::{TailSide, UnitInterval};

/// Default bisection precision.
pub const DEFAULT_TOL: f64 = 1e-7;
/// Smallest radius ever returned; keeps downstream logarithms finite.
pub const EPS_MIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    pub n: usize,
    pub delta: f64,
    pub interval: UnitInterval,
    pub tail: TailSide,
    pub tol: f64,
}

impl RadiusQuery {
    pub fn new(n: usize, delta: f64, interval: UnitInterval, tail: TailSide) -> Self {
        Self {
            n,
            delta,
            interval,
            tail,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return invalid("sample count n must be at least 1");
        }
        check_delta(self.delta)?;
        if !(self.tol > 0.0 && self.tol <= 1e-3) {
            return invalid(format!("tol = {} must lie in (0, 1e-3]", self.tol));
        }
        Ok(())
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return invalid(format!("delta = {delta} must lie in (0, 1)"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Radius {
    pub epsilon: f64,
    /// The target was already met at `EPS_MIN`.
    pub saturated: bool,
    pub iterations: u32,
}

/// Smallest `eps` (to within `tol`) with exceedance probability at most `delta`.
///
/// The returned value always satisfies the target, and `epsilon - 2 tol`
/// does not (unless saturated).
pub fn invert_radius(q: &RadiusQuery) -> Result<Radius> {
    q.validate()?;
    let f = |eps: f64| exceedance_probability(q.n, eps, q.interval, q.tail);
    let saturated = Radius {
        epsilon: EPS_MIN,
        saturated: true,
        iterations: 0,
    };
    // Beyond this bound the deviation can never exceed eps.
    let bracket_hi = match q.tail {
        TailSide::EmpiricalAbove => 1.0 - q.interval.lo(),
        TailSide::EmpiricalBelow => q.interval.hi(),
    };
    if bracket_hi <= EPS_MIN || f(EPS_MIN)? <= q.delta {
        return Ok(saturated);
    }
    let cap = (1.0 / q.tol).log2().ceil() as u32 + 4;
    let (mut lo, mut hi) = (EPS_MIN, bracket_hi);
    let mut iterations = 0;
    while hi - lo > q.tol && iterations < cap {
        let mid = 0.5 * (lo + hi);
        if f(mid)? <= q.delta {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    Ok(Radius {
        epsilon: hi,
        saturated: false,
        iterations,
    })
}

/// `min(sqrt(ln(1/delta) / 2n), 1)`.
pub fn massart_radius(n: usize, delta: f64) -> Result<f64> {
    if n == 0 {
        return invalid("sample count n must be at least 1");
    }
    check_delta(delta)?;
    Ok(((1.0 / delta).ln() / (2.0 * n as f64)).sqrt().min(1.0))
}

/// Grid of radii, `radii[i][j]` for `n_values[i]` and `delta_values[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusTable {
    pub interval: UnitInterval,
    pub tail: TailSide,
    pub n_values: Vec<usize>,
    pub delta_values: Vec<f64>,
    pub radii: Vec<Vec<f64>>,
    pub tol: f64,
}

impl RadiusTable {
    pub fn header(&self) -> String {
        format!(
            "# interval={} tail={} tol={}\n",
            self.interval,
            self.tail,
            fmt_sig(self.tol)
        )
    }

    /// CSV body including the comment header and column names.
    pub fn to_csv(&self) -> String {
        let mut out = self.header();
        out.push_str("n,delta,epsilon\n");
        for (i, &n) in self.n_values.iter().enumerate() {
            for (j, &d) in self.delta_values.iter().enumerate() {
                let _ = writeln!(out, "{},{},{}", n, fmt_sig(d), fmt_sig(self.radii[i][j]));
            }
        }
        out
    }
}

fn strictly_increasing<T: PartialOrd>(xs: &[T]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

pub fn tabulate(
    n_values: &[usize],
    delta_values: &[f64],
    interval: UnitInterval,
    tail: TailSide,
    tol: f64,
) -> Result<RadiusTable> {
    if n_values.is_empty() || delta_values.is_empty() {
        return invalid("tabulation grids must be non-empty");
    }
    if !strictly_increasing(n_values) || !strictly_increasing(delta_values) {
        return invalid("tabulation grids must be strictly increasing");
    }
    let cells: Vec<(usize, f64)> = n_values
        .iter()
        .flat_map(|&n| delta_values.iter().map(move |&d| (n, d)))
        .collect();
    let flat = cells
        .par_iter()
        .map(|&(n, d)| {
            invert_radius(&RadiusQuery::new(n, d, interval, tail).with_tol(tol)).map(|r| r.epsilon)
        })
        .collect::<Result<Vec<f64>>>()?;
    let radii = flat
        .chunks(delta_values.len())
        .map(<[f64]>::to_vec)
        .collect();
    Ok(RadiusTable {
        interval,
        tail,
        n_values: n_values.to_vec(),
        delta_values: delta_values.to_vec(),
        radii,
        tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandKnot {
    pub x: f64,
    pub ecdf: f64,
    pub lower: f64,
    pub upper: f64,
}

/// Simultaneous band for `F` over the points whose CDF value lies in the
/// interval: `F_n - radius_lower <= F <= F_n + radius_upper`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceBand {
    pub knots: Vec<BandKnot>,
    pub delta: f64,
    pub interval: UnitInterval,
    pub radius_lower: f64,
    pub radius_upper: f64,
}

impl ConfidenceBand {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,ecdf,lower,upper\n");
        for k in &self.knots {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                fmt_sig(k.x),
                fmt_sig(k.ecdf),
                fmt_sig(k.lower),
                fmt_sig(k.upper)
            );
        }
        out
    }
}

/// Band with the failure probability split evenly between the two tails.
pub fn confidence_band(
    ecdf: &EmpiricalCdf,
    delta: f64,
    interval: UnitInterval,
) -> Result<ConfidenceBand> {
    confidence_band_with_split(ecdf, delta, interval, 0.5)
}

/// `split` is the share of `delta` spent on the upper envelope.
pub fn confidence_band_with_split(
    ecdf: &EmpiricalCdf,
    delta: f64,
    interval: UnitInterval,
    split: f64,
) -> Result<ConfidenceBand> {
    check_delta(delta)?;
    if !(split > 0.0 && split < 1.0) {
        return invalid(format!("split = {split} must lie in (0, 1)"));
    }
    let n = ecdf.len();
    let radius_upper = invert_radius(&RadiusQuery::new(
        n,
        delta * split,
        interval,
        TailSide::EmpiricalBelow,
    ))?
    .epsilon;
    let radius_lower = invert_radius(&RadiusQuery::new(
        n,
        delta * (1.0 - split),
        interval,
        TailSide::EmpiricalAbove,
    ))?
    .epsilon;

    let (a, b) = ecdf.support();
    let mut xs: Vec<f64> = Vec::with_capacity(n + 2);
    if a.is_finite() {
        xs.push(a);
    }
    xs.extend(ecdf.steps().into_iter().map(|(x, _)| x));
    if b.is_finite() {
        xs.push(b);
    }
    xs.dedup();
    let knots = xs
        .into_iter()
        .map(|x| {
            let f = ecdf.eval(x);
            BandKnot {
                x,
                ecdf: f,
                lower: (f - radius_lower).max(0.0),
                upper: (f + radius_upper).min(1.0),
            }
        })
        .collect();
    Ok(ConfidenceBand {
        knots,
        delta,
        interval,
        radius_lower,
        radius_upper,
    })
}
