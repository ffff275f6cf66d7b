//! Time-uniform (anytime-valid) radii by geometric peeling, per-step tuning
//! schedules, and a catalog of summable weight functions `g`.

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::csv::fmt_sig;
use crate::error::{invalid, Error, Result};
use crate::exact::exceedance_probability;
use crate::interval::{TailSide, UnitInterval};
use crate::inversion::{invert_radius, RadiusQuery, DEFAULT_TOL};
use crate::numeric::{snap_integer, CompensatedSum};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeUniformConfig {
    /// Almost-sure bound on the stopping time.
    pub horizon: usize,
    pub delta: f64,
    /// Geometric block ratio, `> 1`.
    pub eta: f64,
    /// Reflection constant, `> 1`.
    pub c: f64,
    pub interval: UnitInterval,
    pub tail: TailSide,
    pub tol: f64,
}

impl TimeUniformConfig {
    pub const DEFAULT_ETA: f64 = 1.1;
    pub const DEFAULT_C: f64 = 2.0;

    pub fn new(horizon: usize, delta: f64, interval: UnitInterval, tail: TailSide) -> Self {
        Self {
            horizon,
            delta,
            eta: Self::DEFAULT_ETA,
            c: Self::DEFAULT_C,
            interval,
            tail,
            tol: DEFAULT_TOL,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.horizon == 0 {
            return invalid("horizon must be at least 1");
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return invalid(format!("delta = {} must lie in (0, 1)", self.delta));
        }
        if !(self.eta > 1.0 && self.eta.is_finite()) {
            return invalid(format!("eta = {} must exceed 1", self.eta));
        }
        if !(self.c > 1.0 && self.c.is_finite()) {
            return invalid(format!("C = {} must exceed 1", self.c));
        }
        Ok(())
    }

    /// Number of peeling blocks `max(ceil(ln horizon / ln eta), 1)`.
    pub fn blocks(&self) -> usize {
        peeling_blocks(self.horizon, self.eta)
    }

    pub fn q(&self) -> f64 {
        q_sup(self.interval)
    }
}

fn peeling_blocks(horizon: usize, eta: f64) -> usize {
    let k = snap_integer((horizon as f64).ln() / eta.ln()).ceil();
    (k as usize).max(1)
}

/// `sup_{x in [lo,hi]} x (1 - x)`.
pub fn q_sup(interval: UnitInterval) -> f64 {
    if interval.contains(0.5) {
        0.25
    } else {
        let v = |x: f64| x * (1.0 - x);
        v(interval.lo()).max(v(interval.hi()))
    }
}

/// Right-hand side of the block maximal inequality,
/// `C P(sup U_{n2} - U > sqrt(n1/(n2 eta)) (eps - tau))` with
/// `tau = sqrt(C q (eta-1) / ((C-1) n1))`.
pub fn peeling_rhs(n1: usize, n2: usize, eps: f64, cfg: &TimeUniformConfig) -> Result<f64> {
    cfg.validate()?;
    if n1 == 0 || n2 == 0 {
        return invalid("block sizes must be positive");
    }
    if n2 as f64 > cfg.eta * n1 as f64 {
        return invalid(format!(
            "n2 = {n2} exceeds eta * n1 = {}",
            cfg.eta * n1 as f64
        ));
    }
    let threshold = (cfg.c * cfg.q() * (cfg.eta - 1.0) / ((cfg.c - 1.0) * n1 as f64)).sqrt();
    if !(eps > threshold) {
        return Err(Error::EpsTooSmall { eps, threshold });
    }
    let shrunk = (n1 as f64 / (n2 as f64 * cfg.eta)).sqrt() * (eps - threshold);
    Ok(cfg.c * exceedance_probability(n2, shrunk, cfg.interval, cfg.tail)?)
}

fn check_time(n: usize, cfg: &TimeUniformConfig) -> Result<()> {
    if n == 0 || n > cfg.horizon {
        return invalid(format!("time N = {n} must lie in [1, {}]", cfg.horizon));
    }
    if n as f64 <= cfg.eta - 1.0 {
        return Err(Error::TooEarly { n, eta: cfg.eta });
    }
    Ok(())
}

/// Time-uniform radius with a caller-supplied fixed-sample radius
/// `radius(N, level)`.
pub fn tu_radius_with<R>(n: usize, cfg: &TimeUniformConfig, radius: R) -> Result<f64>
where
    R: Fn(usize, f64) -> Result<f64>,
{
    cfg.validate()?;
    check_time(n, cfg)?;
    let level = cfg.delta / (cfg.c * cfg.blocks() as f64);
    let eps = radius(n, level)?;
    let nf = n as f64;
    let eta = cfg.eta;
    let slack = (cfg.c / (cfg.c - 1.0) * cfg.q() * eta * (eta - 1.0)).sqrt();
    Ok((eta * nf.sqrt() * eps + slack) / (nf - (eta - 1.0)).sqrt())
}

/// Radius valid simultaneously for every `N <= horizon` at total level
/// `delta`, built on the exact local radius.
pub fn tu_radius(n: usize, cfg: &TimeUniformConfig) -> Result<f64> {
    tu_radius_with(n, cfg, |n, level| {
        Ok(
            invert_radius(&RadiusQuery::new(n, level, cfg.interval, cfg.tail).with_tol(cfg.tol))?
                .epsilon,
        )
    })
}

/// Closed-form global radius on `[0, 1]` with `C = 2`.
pub fn tu_radius_global(n: usize, horizon: usize, delta: f64, eta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.5) {
        return invalid(format!("delta = {delta} must lie in (0, 0.5)"));
    }
    if !(eta > 1.0 && eta.is_finite()) {
        return invalid(format!("eta = {eta} must exceed 1"));
    }
    if horizon == 0 || n == 0 || n > horizon {
        return invalid(format!("time N = {n} must lie in [1, {horizon}]"));
    }
    if n as f64 <= eta - 1.0 {
        return Err(Error::TooEarly { n, eta });
    }
    let k = peeling_blocks(horizon, eta) as f64;
    let num = eta * (2.0 * k / delta).ln().sqrt() + (eta * (eta - 1.0)).sqrt();
    Ok(num / (2.0 * (n as f64 - (eta - 1.0))).sqrt())
}

/// Time-uniform radii over a set of times, with the fixed-sample radii they
/// were built from.
#[derive(Debug, Clone, PartialEq)]
pub struct TuBand {
    pub times: Vec<usize>,
    pub radii: Vec<f64>,
    pub fixed_radii: Vec<f64>,
    /// Times where the fixed-sample radius increased over the previous time.
    /// The peeling argument assumes it is non-increasing.
    pub nonmonotone: Vec<usize>,
}

impl TuBand {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,radius\n");
        for (t, r) in self.times.iter().zip(&self.radii) {
            let _ = writeln!(out, "{},{}", t, fmt_sig(*r));
        }
        out
    }
}

/// Evaluate the time-uniform radius at increasing `times`.
pub fn tu_band(cfg: &TimeUniformConfig, times: &[usize]) -> Result<TuBand> {
    cfg.validate()?;
    if times.is_empty() || times.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("times must be non-empty and strictly increasing");
    }
    let level = cfg.delta / (cfg.c * cfg.blocks() as f64);
    let pairs = times
        .par_iter()
        .map(|&t| {
            check_time(t, cfg)?;
            let eps = invert_radius(
                &RadiusQuery::new(t, level, cfg.interval, cfg.tail).with_tol(cfg.tol),
            )?
            .epsilon;
            let radius = tu_radius_with(t, cfg, |_, _| Ok(eps))?;
            Ok((eps, radius))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let (fixed_radii, radii): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
    let nonmonotone = fixed_radii
        .windows(2)
        .zip(times.iter().skip(1))
        .filter(|(w, _)| w[1] > w[0])
        .map(|(_, &t)| t)
        .collect();
    Ok(TuBand {
        times: times.to_vec(),
        radii,
        fixed_radii,
        nonmonotone,
    })
}

/// Truncated logarithm `max(ln x, 1)`.
fn ln_bar(x: f64) -> f64 {
    x.ln().max(1.0)
}

fn ln_bar_iter(t: f64, m: u32) -> f64 {
    (0..m).fold(t, |x, _| ln_bar(x))
}

/// Weight functions with `sum_t 1/g(t)` finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GFunction {
    /// `3 t^{3/2}`.
    ThreeT32,
    /// `t (t + 1)`; the reciprocals telescope to exactly 1.
    TT1,
    /// `(t + 1) ln^2(t + 1) / ln 2`.
    LogSq,
    /// `(t + 2) ln(t + 2) (ln ln(t + 2))^2 / ln ln 3`.
    LogLogSq,
    /// `C_m (lnbar^m t)^2 prod_{i<m} lnbar^i t` with iterated truncated
    /// logarithms, `1 <= m <= 3`.
    Generalized(u32),
}

impl GFunction {
    pub const MAX_GENERALIZED: u32 = 3;

    pub fn catalog() -> Vec<GFunction> {
        let mut v = vec![
            GFunction::ThreeT32,
            GFunction::TT1,
            GFunction::LogSq,
            GFunction::LogLogSq,
        ];
        v.extend((1..=Self::MAX_GENERALIZED).map(GFunction::Generalized));
        v
    }

    fn generalized_constant(m: u32) -> f64 {
        let e = std::f64::consts::E;
        match m {
            1 => 2.0 + std::f64::consts::LN_2 + 1.0 / e,
            2 => 2.03 + (e.exp() - 1.0).ln(),
            _ => 2.0 + (0..m - 1).fold(1.0f64, |x, _| x.exp()),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GFunction::Generalized(m) if m == 0 || m > Self::MAX_GENERALIZED => invalid(format!(
                "generalized order m = {m} must lie in [1, {}]",
                Self::MAX_GENERALIZED
            )),
            _ => Ok(()),
        }
    }

    /// Upper bound on `sum_{t > T} 1/g(t)` from the integral of `1/g` over
    /// `[T, inf)`, valid because `1/g` is decreasing.
    pub fn tail_bound(&self, t: usize) -> f64 {
        let tf = t as f64;
        match *self {
            GFunction::ThreeT32 => 2.0 / (3.0 * tf.sqrt()),
            GFunction::TT1 => 1.0 / (tf + 1.0),
            GFunction::LogSq => std::f64::consts::LN_2 / (tf + 1.0).ln(),
            GFunction::LogLogSq => 3f64.ln().ln() / (tf + 2.0).ln().ln(),
            GFunction::Generalized(m) => {
                // Count how many iterated logs of T are still >= 1.
                let mut x = tf;
                let mut k0 = 0u32;
                while k0 < m && x.ln() >= 1.0 {
                    x = x.ln();
                    k0 += 1;
                }
                let tail = if k0 >= m {
                    1.0 / x
                } else {
                    (1.0 - x.ln().max(0.0)) + (m - 1 - k0) as f64 + 1.0
                };
                tail / Self::generalized_constant(m)
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            GFunction::ThreeT32 => "3t^1.5".into(),
            GFunction::TT1 => "t(t+1)".into(),
            GFunction::LogSq => "log-squared".into(),
            GFunction::LogLogSq => "loglog-squared".into(),
            GFunction::Generalized(m) => format!("generalized-{m}"),
        }
    }
}

impl fmt::Display for GFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl std::str::FromStr for GFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let g = match s {
            "3t^1.5" | "three-t32" => GFunction::ThreeT32,
            "t(t+1)" | "tt1" => GFunction::TT1,
            "log-squared" | "logsq" => GFunction::LogSq,
            "loglog-squared" | "loglogsq" => GFunction::LogLogSq,
            _ => match s.strip_prefix("generalized-") {
                Some(m) => GFunction::Generalized(
                    m.parse()
                        .map_err(|_| Error::InvalidQuery(format!("bad generalized order `{m}`")))?,
                ),
                None => return invalid(format!("unknown g function `{s}`")),
            },
        };
        g.validate()?;
        Ok(g)
    }
}

pub fn g_value(id: GFunction, t: usize) -> Result<f64> {
    id.validate()?;
    if t == 0 {
        return invalid("g is defined for t >= 1");
    }
    let tf = t as f64;
    Ok(match id {
        GFunction::ThreeT32 => 3.0 * tf.powf(1.5),
        GFunction::TT1 => tf * (tf + 1.0),
        GFunction::LogSq => (tf + 1.0) * (tf + 1.0).ln().powi(2) / std::f64::consts::LN_2,
        GFunction::LogLogSq => {
            let l = (tf + 2.0).ln();
            (tf + 2.0) * l * l.ln().powi(2) / 3f64.ln().ln()
        }
        GFunction::Generalized(m) => {
            let prod: f64 = (0..m).map(|i| ln_bar_iter(tf, i)).product();
            GFunction::generalized_constant(m) * ln_bar_iter(tf, m).powi(2) * prod
        }
    })
}

/// `sum_{t=1}^{T} 1/g(t)`.
pub fn g_partial_sum(id: GFunction, t_max: usize) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    for t in 1..=t_max {
        acc.add(1.0 / g_value(id, t)?);
    }
    Ok(acc.value())
}

/// Certified upper bound on `sum_{t>=1} 1/g(t)`: partial sum plus tail bound.
pub fn g_sum_upper_bound(id: GFunction, t_max: usize) -> Result<f64> {
    Ok(g_partial_sum(id, t_max)? + id.tail_bound(t_max))
}

/// Per-step tuning rules for cumulative time-uniform error control.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scheme {
    /// `eta_t = 1 + ln(t + e)^{-a}`, `delta_t = 1 / (t ln^2(t + e))`, `0 < a < 1`.
    PolyLogA { a: f64 },
    /// `f(t) = lnbar t + xi lnbar(lnbar t)`, `eta_t = (f + 1) / f`,
    /// `delta_t = exp(-f)`, `xi > 2`.
    KlUcbB { xi: f64 },
    /// `eta_t` as in `KlUcbB`; `delta_t = 1 / (K_t 2 g(t))`.
    SummableC { g: GFunction, xi: f64 },
    /// Plain union bound over times, `delta_t = 1 / (t g(t))`, no peeling.
    UnionBound { g: GFunction },
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::PolyLogA { .. } => "polylog",
            Scheme::KlUcbB { .. } => "klucb",
            Scheme::SummableC { .. } => "summable",
            Scheme::UnionBound { .. } => "union",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScheduleEntry {
    pub t: usize,
    /// `None` for schemes without peeling.
    pub eta_t: Option<f64>,
    pub delta_t: f64,
    /// Number of peeling blocks `max(ceil(ln t / ln eta_t), 1)`, or the
    /// union-bound multiplicity `t`.
    pub k_t: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub scheme: Scheme,
    pub entries: Vec<ScheduleEntry>,
}

impl Schedule {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,eta_t,delta_t,K_t\n");
        for e in &self.entries {
            let eta = e.eta_t.map(fmt_sig).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{}", e.t, eta, fmt_sig(e.delta_t), e.k_t);
        }
        out
    }

    /// `sum_t K_t delta_t` over the materialized steps.
    pub fn cumulative_budget(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.k_t as f64 * e.delta_t)
            .collect::<CompensatedSum>()
            .value()
    }
}

fn klucb_f(t: f64, xi: f64) -> f64 {
    ln_bar(t) + xi * ln_bar(ln_bar(t))
}

/// Horizon used to certify that `sum 1/g <= 1` before accepting a `g`.
const SUMMABILITY_CHECK_T: usize = 100_000;

pub fn build_schedule(scheme: Scheme, t_max: usize) -> Result<Schedule> {
    if t_max == 0 {
        return Err(Error::InvalidParams("horizon T must be at least 1".into()));
    }
    fn bad<T>(msg: String) -> Result<T> {
        Err(Error::InvalidParams(msg))
    }
    let check_xi = |xi: f64| {
        if xi > 2.0 && xi.is_finite() {
            Ok(())
        } else {
            bad(format!("xi = {xi} must exceed 2"))
        }
    };
    let check_g = |g: GFunction| -> Result<()> {
        g.validate()
            .map_err(|e| Error::InvalidParams(e.to_string()))?;
        let bound = g_sum_upper_bound(g, SUMMABILITY_CHECK_T)?;
        if bound > 1.0 + 1e-6 {
            return bad(format!(
                "sum of 1/g for {g} is not certified to be at most 1 (bound {bound:.4})"
            ));
        }
        Ok(())
    };
    match scheme {
        Scheme::PolyLogA { a } if !(a > 0.0 && a < 1.0) => {
            return bad(format!("exponent a = {a} must lie in (0, 1)"));
        }
        Scheme::KlUcbB { xi } => check_xi(xi)?,
        Scheme::SummableC { g, xi } => {
            check_xi(xi)?;
            check_g(g)?;
        }
        Scheme::UnionBound { g } => check_g(g)?,
        _ => {}
    }
    let blocks = |t: f64, eta: f64| (snap_integer(t.ln() / eta.ln()).ceil() as usize).max(1);
    let mut entries = Vec::with_capacity(t_max);
    for t in 1..=t_max {
        let tf = t as f64;
        let entry = match scheme {
            Scheme::PolyLogA { a } => {
                let l = (tf + std::f64::consts::E).ln();
                let eta = 1.0 + l.powf(-a);
                ScheduleEntry {
                    t,
                    eta_t: Some(eta),
                    delta_t: 1.0 / (tf * l * l),
                    k_t: blocks(tf, eta),
                }
            }
            Scheme::KlUcbB { xi } => {
                let f = klucb_f(tf, xi);
                let eta = (f + 1.0) / f;
                ScheduleEntry {
                    t,
                    eta_t: Some(eta),
                    delta_t: (-f).exp(),
                    k_t: blocks(tf, eta),
                }
            }
            Scheme::SummableC { g, xi } => {
                let f = klucb_f(tf, xi);
                let eta = (f + 1.0) / f;
                let k = blocks(tf, eta);
                let delta = 1.0 / (k as f64 * 2.0 * g_value(g, t)?);
                if delta > 1.0 {
                    return Err(Error::DeltaOverflow { t, delta });
                }
                ScheduleEntry {
                    t,
                    eta_t: Some(eta),
                    delta_t: delta,
                    k_t: k,
                }
            }
            Scheme::UnionBound { g } => ScheduleEntry {
                t,
                eta_t: None,
                delta_t: 1.0 / (tf * g_value(g, t)?),
                k_t: t,
            },
        };
        entries.push(entry);
    }
    Ok(Schedule { scheme, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> UnitInterval {
        UnitInterval::new(lo, hi).unwrap()
    }

    fn cfg(horizon: usize) -> TimeUniformConfig {
        TimeUniformConfig::new(horizon, 0.1, UnitInterval::FULL, TailSide::EmpiricalAbove)
    }

    #[test]
    fn q_sup_examples() {
        assert_eq!(q_sup(UnitInterval::FULL), 0.25);
        assert!((q_sup(iv(0.0, 0.3)) - 0.21).abs() < 1e-15);
        assert!((q_sup(iv(0.6, 0.9)) - 0.24).abs() < 1e-15);
    }

    #[test]
    fn peeling_rhs_threshold_and_range() {
        let c = cfg(1000);
        assert!(matches!(
            peeling_rhs(100, 105, 0.01, &c),
            Err(Error::EpsTooSmall { .. })
        ));
        assert!(peeling_rhs(100, 200, 0.3, &c).is_err());
        for eps in [0.05, 0.1, 0.2, 0.4] {
            let v = peeling_rhs(100, 105, eps, &c).unwrap();
            assert!((0.0..=c.c).contains(&v));
        }
    }

    #[test]
    fn peeling_rhs_decreases_as_eta_approaches_one() {
        // With n1 = n2 the shrunken threshold increases toward eps as eta -> 1.
        let mut prev = f64::INFINITY;
        for eta in [1.5, 1.2, 1.1, 1.05, 1.01, 1.001] {
            let c = TimeUniformConfig { eta, ..cfg(1000) };
            let v = peeling_rhs(200, 200, 0.15, &c).unwrap();
            assert!(v <= prev + 1e-15, "eta {eta}: {v} > {prev}");
            prev = v;
        }
    }

    #[test]
    fn too_early_and_ordering() {
        let c = TimeUniformConfig {
            eta: 3.0,
            ..cfg(100)
        };
        assert!(matches!(tu_radius(2, &c), Err(Error::TooEarly { .. })));
        assert!(matches!(
            tu_radius_global(2, 100, 0.1, 3.0),
            Err(Error::TooEarly { .. })
        ));
        let c = cfg(1000);
        let r = tu_radius(1000, &c).unwrap();
        let fixed = invert_radius(&RadiusQuery::new(
            1000,
            0.1,
            UnitInterval::FULL,
            TailSide::EmpiricalAbove,
        ))
        .unwrap()
        .epsilon;
        assert!(r.is_finite() && r > fixed);
    }

    #[test]
    fn global_radius_example() {
        let r = tu_radius_global(1000, 1000, 0.1, 1.1).unwrap();
        assert!((r - 0.0738).abs() < 5e-5, "{r}");
        assert_eq!(peeling_blocks(1000, 1.1), 73);
        let mut prev = f64::INFINITY;
        for n in [10usize, 20, 40, 80, 160, 320, 640] {
            let r = tu_radius_global(n, n, 0.1, 1.1).unwrap();
            assert!(r < prev);
            prev = r;
        }
    }

    #[test]
    fn single_step_horizon_uses_one_block() {
        assert_eq!(peeling_blocks(1, 1.1), 1);
        assert!(tu_radius(1, &cfg(1)).unwrap().is_finite());
    }

    #[test]
    fn band_and_flags() {
        let c = cfg(60);
        let times: Vec<usize> = (1..=60).collect();
        let band = tu_band(&c, &times).unwrap();
        assert_eq!(band.radii.len(), 60);
        for (i, &t) in times.iter().enumerate() {
            assert_eq!(band.radii[i], tu_radius(t, &c).unwrap());
        }
        assert!(band.to_csv().starts_with("t,radius\n1,"));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_value(GFunction::TT1, 3).unwrap(), 12.0);
        assert!((g_value(GFunction::ThreeT32, 4).unwrap() - 24.0).abs() < 1e-12);
        assert!(g_value(GFunction::TT1, 0).is_err());
        assert!(g_value(GFunction::Generalized(0), 5).is_err());
        let s = g_sum_upper_bound(GFunction::ThreeT32, 1_000_000).unwrap();
        // zeta(3/2) / 3
        assert!((s - 0.870_791).abs() < 2e-3, "{s}");
    }

    #[test]
    fn generalized_is_continuous_across_truncation_points() {
        for m in 1..=3 {
            let g = GFunction::Generalized(m);
            // tail bound at T equals the integral, so it is continuous in T too
            for t in [2usize, 3, 15, 16, 100, 3_814_279] {
                assert!(g.tail_bound(t) > g.tail_bound(t + 1));
            }
        }
    }

    #[test]
    fn schedule_b_shape() {
        let s = build_schedule(Scheme::KlUcbB { xi: 3.0 }, 100).unwrap();
        assert!(s.entries.iter().all(|e| e.eta_t.unwrap() > 1.0));
        assert!(s.entries.windows(2).all(|w| w[1].delta_t <= w[0].delta_t));
        assert!(build_schedule(Scheme::KlUcbB { xi: 2.0 }, 10).is_err());
    }

    #[test]
    fn schedule_c_and_union() {
        let s = build_schedule(
            Scheme::SummableC {
                g: GFunction::TT1,
                xi: 3.0,
            },
            50,
        )
        .unwrap();
        assert!(s
            .entries
            .iter()
            .all(|e| e.delta_t > 0.0 && e.delta_t <= 1.0));
        assert!(matches!(
            build_schedule(
                Scheme::SummableC {
                    g: GFunction::LogLogSq,
                    xi: 3.0
                },
                50
            ),
            Err(Error::InvalidParams(_))
        ));
        let u = build_schedule(
            Scheme::UnionBound {
                g: GFunction::ThreeT32,
            },
            20,
        )
        .unwrap();
        assert!(u.entries.iter().all(|e| e.eta_t.is_none()));
        assert!(u.to_csv().lines().nth(1).unwrap().starts_with("1,,"));
        let a = build_schedule(Scheme::PolyLogA { a: 0.5 }, 20).unwrap();
        assert!(a.entries.iter().all(|e| e.eta_t.unwrap() > 1.0));
        assert!(build_schedule(Scheme::PolyLogA { a: 1.0 }, 20).is_err());
    }
}
