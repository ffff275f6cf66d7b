//! Value at risk, CVaR point estimates and confidence bounds, and bounds on
//! integrated functionals `int phi(F(x)) dx` of a continuous CDF.
//!
//! Reward-side CVaR at level `alpha` averages the lowest `alpha` fraction of
//! outcomes; loss-side CVaR at level `kappa` averages the highest `1 - kappa`
//! fraction. Both are computed in two ways that agree exactly on empirical
//! measures with atoms:
//!
//! * optimization form, around the quantile `x*`;
//! * integrated form, `int_a^b` of a clipped transform of `F` plus atom terms.

use std::fmt;
use std::sync::Arc;

use crate::ecdf::EmpiricalCdf;
use crate::error::{invalid, Error, Result};
use crate::interval::{TailSide, UnitInterval};
use crate::inversion::{invert_radius, RadiusQuery};
use crate::numeric::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiskSide {
    /// Lower tail of a reward distribution, level `alpha`.
    Reward,
    /// Upper tail of a loss distribution, level `kappa`.
    Loss,
}

impl RiskSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            RiskSide::Reward => "reward",
            RiskSide::Loss => "loss",
        }
    }
}

impl fmt::Display for RiskSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for RiskSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reward" => Ok(RiskSide::Reward),
            "loss" => Ok(RiskSide::Loss),
            _ => invalid(format!("unknown side `{s}` (expected reward or loss)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    /// `inf { x : F(x) > level }`.
    UpperVaR,
    /// `inf { x : F(x) >= level }`.
    LowerVaR,
}

fn check_level(level: f64) -> Result<()> {
    if !(level > 0.0 && level < 1.0) {
        return invalid(format!("risk level {level} must lie in (0, 1)"));
    }
    Ok(())
}

/// Generalized inverse of the empirical CDF.
pub fn value_at_risk(ecdf: &EmpiricalCdf, level: f64, which: VarKind) -> Result<f64> {
    check_level(level)?;
    let n = ecdf.len() as f64;
    let xs = ecdf.samples();
    let idx = match which {
        VarKind::UpperVaR => xs
            .iter()
            .enumerate()
            .position(|(i, _)| (i + 1) as f64 / n > level),
        VarKind::LowerVaR => xs
            .iter()
            .enumerate()
            .position(|(i, _)| (i + 1) as f64 / n >= level),
    };
    // F_n reaches 1 at the last sample, so the index always exists.
    Ok(xs[idx.unwrap_or(xs.len() - 1)])
}

/// Optimization-form reward CVaR:
/// `(1/alpha) (E[X 1{X < x*}] + x* (alpha - F(x*-)))` with `x*` the lower VaR.
pub fn cvar_reward_point(ecdf: &EmpiricalCdf, alpha: f64) -> Result<f64> {
    let x_star = value_at_risk(ecdf, alpha, VarKind::LowerVaR)?;
    let n = ecdf.len() as f64;
    let mut acc: CompensatedSum = ecdf
        .samples()
        .iter()
        .take_while(|&&s| s < x_star)
        .map(|&s| s / n)
        .collect();
    acc.add(x_star * (alpha - ecdf.eval_left(x_star)));
    Ok(acc.value() / alpha)
}

/// Optimization-form loss CVaR with `alpha = 1 - kappa`:
/// `(1/alpha) (E[X 1{X > x*}] + x* (F(x*) - kappa))`.
pub fn cvar_loss_point(ecdf: &EmpiricalCdf, kappa: f64) -> Result<f64> {
    let x_star = value_at_risk(ecdf, kappa, VarKind::LowerVaR)?;
    let n = ecdf.len() as f64;
    let alpha = 1.0 - kappa;
    let mut acc: CompensatedSum = ecdf
        .samples()
        .iter()
        .rev()
        .take_while(|&&s| s > x_star)
        .map(|&s| s / n)
        .collect();
    acc.add(x_star * (ecdf.eval(x_star) - kappa));
    Ok(acc.value() / alpha)
}

fn bounded_nonnegative_support(ecdf: &EmpiricalCdf) -> Result<(f64, f64)> {
    let (a, b) = ecdf.finite_support()?;
    if a < 0.0 {
        return Err(Error::NegativeSupport(a));
    }
    Ok((a, b))
}

/// Integrated-form CVaR; requires a finite support with `a >= 0`.
///
/// Reward, `x*` the lower VaR at `alpha`:
/// `(1/alpha) [ int_a^b (F(x*-) - F(x))_+ dx + a F(x*-) + x* (alpha - F(x*-)) ]`.
///
/// Loss, `alpha = 1 - kappa`, `x*` the lower VaR at `kappa`:
/// `(1/alpha) [ int_a^b (alpha - max(F(x), F(x*)) + kappa) dx + a (1 - F(x*)) + x* (F(x*) - kappa) ]`.
pub fn cvar_integrated_point(ecdf: &EmpiricalCdf, level: f64, side: RiskSide) -> Result<f64> {
    let (a, _) = bounded_nonnegative_support(ecdf)?;
    let x_star = value_at_risk(ecdf, level, VarKind::LowerVaR)?;
    match side {
        RiskSide::Reward => {
            let alpha = level;
            let f_left = ecdf.eval_left(x_star);
            let integral = ecdf.integrate(|f| (f_left - f).max(0.0))?;
            let total: CompensatedSum = [integral, a * f_left, x_star * (alpha - f_left)]
                .into_iter()
                .collect();
            Ok(total.value() / alpha)
        }
        RiskSide::Loss => {
            let kappa = level;
            let alpha = 1.0 - kappa;
            let f_star = ecdf.eval(x_star);
            let integral = ecdf.integrate(|f| alpha - (f.max(f_star) - kappa))?;
            let total: CompensatedSum = [integral, a * (1.0 - f_star), x_star * (f_star - kappa)]
                .into_iter()
                .collect();
            Ok(total.value() / alpha)
        }
    }
}

/// Confidence bounds on a CVaR together with the point estimate and the CDF
/// radii used (`radius_upper` inflates `F_n`, `radius_lower` deflates it).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvarBounds {
    pub lower: f64,
    pub point: f64,
    pub upper: f64,
    pub radius_upper: f64,
    pub radius_lower: f64,
    pub delta: f64,
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return invalid(format!("delta = {delta} must lie in (0, 1)"));
    }
    Ok(())
}

fn cdf_radii(n: usize, delta: f64, interval: UnitInterval) -> Result<(f64, f64)> {
    let up = invert_radius(&RadiusQuery::new(
        n,
        delta,
        interval,
        TailSide::EmpiricalBelow,
    ))?;
    let down = invert_radius(&RadiusQuery::new(
        n,
        delta,
        interval,
        TailSide::EmpiricalAbove,
    ))?;
    Ok((up.epsilon, down.epsilon))
}

/// Reward CVaR `= a + (1/alpha) int_a^b (alpha - F)_+`, bounded by shifting
/// `F_n` with local radii on `[0, alpha]`, each at level `delta / 2`.
pub fn cvar_reward_bounds(ecdf: &EmpiricalCdf, alpha: f64, delta: f64) -> Result<CvarBounds> {
    check_level(alpha)?;
    check_delta(delta)?;
    let (a, _) = bounded_nonnegative_support(ecdf)?;
    let interval = UnitInterval::new(0.0, alpha)?;
    let (radius_upper, radius_lower) = cdf_radii(ecdf.len(), delta / 2.0, interval)?;
    let integrated = |shift: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(a + ecdf.integrate(|f| (alpha - shift(f)).max(0.0))? / alpha)
    };
    let lower = integrated(&|f| (f + radius_upper).min(1.0))?;
    let upper = integrated(&|f| (f - radius_lower).max(0.0))?;
    let point = cvar_reward_point(ecdf, alpha)?;
    Ok(CvarBounds {
        lower,
        point,
        upper,
        radius_upper,
        radius_lower,
        delta,
    })
}

/// Loss CVaR `= b - (1/(1-kappa)) int_a^b (F - kappa)_+`, bounded with local
/// radii on `[kappa, 1]`, each at level `delta / 2`.
pub fn cvar_loss_bounds(ecdf: &EmpiricalCdf, kappa: f64, delta: f64) -> Result<CvarBounds> {
    check_level(kappa)?;
    check_delta(delta)?;
    let (_, b) = bounded_nonnegative_support(ecdf)?;
    let alpha = 1.0 - kappa;
    let interval = UnitInterval::new(kappa, 1.0)?;
    let (radius_upper, radius_lower) = cdf_radii(ecdf.len(), delta / 2.0, interval)?;
    let integrated = |shift: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(b - ecdf.integrate(|f| (shift(f) - kappa).max(0.0))? / alpha)
    };
    let lower = integrated(&|f| (f + radius_upper).min(1.0))?;
    let upper = integrated(&|f| (f - radius_lower).max(0.0))?;
    let point = cvar_loss_point(ecdf, kappa)?;
    Ok(CvarBounds {
        lower,
        point,
        upper,
        radius_upper,
        radius_lower,
        delta,
    })
}

/// Piecewise one-sided Lipschitz constants of a kernel: on segment
/// `[breakpoints[j], breakpoints[j+1]]` the kernel moves by at most
/// `constants[j] * h` when its argument moves by `h` in the ledger's direction.
#[derive(Debug, Clone, PartialEq)]
pub struct LipschitzLedger {
    pub breakpoints: Vec<f64>,
    pub constants: Vec<f64>,
}

impl LipschitzLedger {
    pub fn new(breakpoints: Vec<f64>, constants: Vec<f64>) -> Result<Self> {
        let ledger = Self {
            breakpoints,
            constants,
        };
        ledger.validate()?;
        Ok(ledger)
    }

    /// A single segment covering `[0, 1]`.
    pub fn uniform(constant: f64) -> Result<Self> {
        Self::new(vec![0.0, 1.0], vec![constant])
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidLedger(msg.to_string()));
        let bp = &self.breakpoints;
        if bp.len() < 2 || bp.first() != Some(&0.0) || bp.last() != Some(&1.0) {
            return bad("breakpoints must run from 0 to 1");
        }
        if bp.windows(2).any(|w| !(w[0] < w[1])) {
            return bad("breakpoints must be strictly increasing");
        }
        if self.constants.len() != bp.len() - 1 {
            return bad("one constant per segment is required");
        }
        if self.constants.iter().any(|&c| !(c >= 0.0 && c.is_finite())) {
            return bad("constants must be finite and nonnegative");
        }
        Ok(())
    }

    fn segment_constant(&self, lo: f64, hi: f64) -> f64 {
        let j = self
            .breakpoints
            .windows(2)
            .position(|w| w[0] <= lo && hi <= w[1])
            .expect("partition refines the ledger");
        self.constants[j]
    }
}

pub type Kernel = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A non-increasing kernel `phi: [0,1] -> R` and its Lipschitz ledgers.
///
/// `lower_right` controls `phi(y + h) >= phi(y) - l h` and yields the lower
/// bound; `upper_left` controls `phi(y - h) <= phi(y) + l h` and yields the
/// upper bound.
#[derive(Clone)]
pub struct PhiSpec {
    pub evaluator: Kernel,
    pub lower_right: Option<LipschitzLedger>,
    pub upper_left: Option<LipschitzLedger>,
}

impl fmt::Debug for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PhiSpec")
            .field("lower_right", &self.lower_right)
            .field("upper_left", &self.upper_left)
            .finish_non_exhaustive()
    }
}

impl PhiSpec {
    pub fn new(evaluator: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            evaluator: Arc::new(evaluator),
            lower_right: None,
            upper_left: None,
        }
    }

    pub fn with_lower_right(mut self, ledger: LipschitzLedger) -> Self {
        self.lower_right = Some(ledger);
        self
    }

    pub fn with_upper_left(mut self, ledger: LipschitzLedger) -> Self {
        self.upper_left = Some(ledger);
        self
    }

    pub fn eval(&self, y: f64) -> f64 {
        (self.evaluator)(y)
    }
}

/// Partition `0 = alpha_0 < ... < alpha_K = 1` of the CDF range with a
/// failure probability per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub points: Vec<f64>,
    pub deltas: Vec<f64>,
}

impl Partition {
    pub fn new(points: Vec<f64>, deltas: Vec<f64>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::PartitionIncompatible(msg.to_string()));
        if points.len() < 2 || points.first() != Some(&0.0) || points.last() != Some(&1.0) {
            return bad("partition points must run from 0 to 1");
        }
        if points.windows(2).any(|w| !(w[0] < w[1])) {
            return bad("partition points must be strictly increasing");
        }
        if deltas.len() != points.len() - 1 {
            return bad("one delta per cell is required");
        }
        if deltas.iter().any(|&d| !(d > 0.0 && d < 1.0)) {
            return bad("cell deltas must lie in (0, 1)");
        }
        Ok(Self { points, deltas })
    }

    /// `K` equal cells sharing `delta` evenly.
    pub fn uniform(cells: usize, delta: f64) -> Result<Self> {
        if cells == 0 {
            return Err(Error::PartitionIncompatible("at least one cell".into()));
        }
        let points = (0..=cells).map(|k| k as f64 / cells as f64).collect();
        Self::new(points, vec![delta / cells as f64; cells])
    }

    pub fn total_delta(&self) -> f64 {
        self.deltas.iter().sum()
    }

    fn refines(&self, ledger: &LipschitzLedger) -> bool {
        ledger
            .breakpoints
            .iter()
            .all(|b| self.points.iter().any(|p| p == b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalBounds {
    pub lower: Option<f64>,
    pub point: f64,
    pub upper: Option<f64>,
    /// Failure probability of each one-sided bound.
    pub total_delta: f64,
}

fn correction(
    n: usize,
    ledger: &LipschitzLedger,
    partition: &Partition,
    tail: TailSide,
    cell_length: &dyn Fn(usize) -> f64,
) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    for (k, w) in partition.points.windows(2).enumerate() {
        let l = ledger.segment_constant(w[0], w[1]);
        if l == 0.0 {
            continue;
        }
        let cell = UnitInterval::new(w[0], w[1])?;
        let eps = invert_radius(&RadiusQuery::new(n, partition.deltas[k], cell, tail))?.epsilon;
        acc.add(l * cell_length(k) * eps);
    }
    Ok(acc.value())
}

fn functional_bounds_impl(
    ecdf: &EmpiricalCdf,
    phi: &PhiSpec,
    partition: &Partition,
    cell_length: &dyn Fn(usize) -> f64,
) -> Result<FunctionalBounds> {
    ecdf.finite_support()?;
    for ledger in [&phi.lower_right, &phi.upper_left].into_iter().flatten() {
        ledger.validate()?;
        if !partition.refines(ledger) {
            return Err(Error::PartitionIncompatible(
                "partition must contain every ledger breakpoint".into(),
            ));
        }
    }
    let point = ecdf.integrate(|f| phi.eval(f))?;
    let n = ecdf.len();
    let lower = phi
        .lower_right
        .as_ref()
        .map(|l| correction(n, l, partition, TailSide::EmpiricalBelow, cell_length))
        .transpose()?
        .map(|c| point - c);
    let upper = phi
        .upper_left
        .as_ref()
        .map(|l| correction(n, l, partition, TailSide::EmpiricalAbove, cell_length))
        .transpose()?
        .map(|c| point + c);
    Ok(FunctionalBounds {
        lower,
        point,
        upper,
        total_delta: partition.total_delta(),
    })
}

/// Bounds on `int_a^b phi(F(x)) dx` for a continuous `F` whose quantile
/// function is `gamma`-Lipschitz.
///
/// `gamma` is an assumption supplied by the caller; it is never estimated.
/// A cell `[alpha_k, alpha_{k+1}]` then spans at most
/// `gamma (alpha_{k+1} - alpha_k)` on the x axis.
pub fn functional_bounds(
    ecdf: &EmpiricalCdf,
    phi: &PhiSpec,
    partition: &Partition,
    gamma: f64,
) -> Result<FunctionalBounds> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return invalid(format!(
            "quantile Lipschitz constant gamma = {gamma} must be positive"
        ));
    }
    let p = &partition.points;
    functional_bounds_impl(ecdf, phi, partition, &|k| gamma * (p[k + 1] - p[k]))
}

/// Variant using the true quantile function for cell lengths. Only usable
/// with synthetic data whose law is known; intended for validation.
pub fn functional_bounds_true_quantiles(
    ecdf: &EmpiricalCdf,
    phi: &PhiSpec,
    partition: &Partition,
    quantile: &dyn Fn(f64) -> f64,
) -> Result<FunctionalBounds> {
    let (a, b) = ecdf.finite_support()?;
    let q = |u: f64| quantile(u.clamp(0.0, 1.0)).clamp(a, b);
    let p = &partition.points;
    functional_bounds_impl(ecdf, phi, partition, &|k| q(p[k + 1]) - q(p[k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecdf::make_ecdf;

    fn quarters() -> EmpiricalCdf {
        make_ecdf(&[0.2, 0.4, 0.6, 0.8], (0.0, 1.0)).unwrap()
    }

    #[test]
    fn var_examples() {
        let e = quarters();
        assert_eq!(value_at_risk(&e, 0.5, VarKind::UpperVaR).unwrap(), 0.6);
        assert_eq!(value_at_risk(&e, 0.5, VarKind::LowerVaR).unwrap(), 0.4);
        assert_eq!(value_at_risk(&e, 0.1, VarKind::LowerVaR).unwrap(), 0.2);
        assert!(value_at_risk(&e, 1.0, VarKind::LowerVaR).is_err());
    }

    #[test]
    fn cvar_point_examples() {
        let e = quarters();
        assert!((cvar_reward_point(&e, 0.5).unwrap() - 0.3).abs() < 1e-15);
        assert!((cvar_loss_point(&e, 0.5).unwrap() - 0.7).abs() < 1e-15);
        let c = make_ecdf(&[0.37; 6], (0.0, 1.0)).unwrap();
        for level in [0.05, 0.5, 0.95] {
            assert!((cvar_reward_point(&c, level).unwrap() - 0.37).abs() < 1e-15);
            assert!((cvar_loss_point(&c, level).unwrap() - 0.37).abs() < 1e-15);
        }
    }

    #[test]
    fn integrated_examples() {
        let e = quarters();
        let r = cvar_integrated_point(&e, 0.5, RiskSide::Reward).unwrap();
        assert!((r - 0.3).abs() < 1e-15);
        let l = cvar_integrated_point(&e, 0.5, RiskSide::Loss).unwrap();
        assert!((l - 0.7).abs() < 1e-15);
        let s = make_ecdf(&[0.5], (0.0, 1.0)).unwrap();
        let r = cvar_integrated_point(&s, 0.9, RiskSide::Reward).unwrap();
        assert!((r - 0.5).abs() < 1e-15);
    }

    #[test]
    fn integrated_form_needs_bounded_nonnegative_support() {
        let e = make_ecdf(&[0.5], (0.0, f64::INFINITY)).unwrap();
        assert_eq!(
            cvar_integrated_point(&e, 0.5, RiskSide::Reward),
            Err(Error::UnboundedSupport)
        );
        let e = make_ecdf(&[0.5], (-1.0, 1.0)).unwrap();
        assert_eq!(
            cvar_integrated_point(&e, 0.5, RiskSide::Loss),
            Err(Error::NegativeSupport(-1.0))
        );
    }

    #[test]
    fn forms_agree_with_shifted_support_and_atoms() {
        let e = make_ecdf(&[2.0, 2.5, 2.5, 2.5, 3.0, 4.0, 4.0], (1.5, 5.0)).unwrap();
        for level in [0.1, 1.0 / 7.0, 0.3, 3.0 / 7.0, 0.5, 0.8, 6.0 / 7.0, 0.95] {
            let r0 = cvar_reward_point(&e, level).unwrap();
            let r1 = cvar_integrated_point(&e, level, RiskSide::Reward).unwrap();
            assert!((r0 - r1).abs() < 1e-12, "reward {level}: {r0} vs {r1}");
            let l0 = cvar_loss_point(&e, level).unwrap();
            let l1 = cvar_integrated_point(&e, level, RiskSide::Loss).unwrap();
            assert!((l0 - l1).abs() < 1e-12, "loss {level}: {l0} vs {l1}");
        }
    }

    #[test]
    fn bounds_bracket_point() {
        let e = quarters();
        let r = cvar_reward_bounds(&e, 0.5, 0.1).unwrap();
        assert!(r.lower <= r.point && r.point <= r.upper);
        let l = cvar_loss_bounds(&e, 0.5, 0.1).unwrap();
        assert!(l.lower <= l.point && l.point <= l.upper);
    }

    #[test]
    fn saturated_radii_collapse_bounds() {
        // With many samples and a nearly trivial target the radii are tiny.
        let xs: Vec<f64> = (0..50).map(|i| (i as f64 + 0.5) / 50.0).collect();
        let e = make_ecdf(&xs, (0.0, 1.0)).unwrap();
        let r = cvar_reward_bounds(&e, 0.3, 0.1).unwrap();
        let r_tight = cvar_reward_bounds(&e, 0.3, 0.9).unwrap();
        assert!(r_tight.upper - r_tight.lower <= r.upper - r.lower);
    }

    #[test]
    fn ledger_and_partition_validation() {
        assert!(matches!(
            LipschitzLedger::new(vec![0.0, 0.5], vec![1.0]),
            Err(Error::InvalidLedger(_))
        ));
        assert!(matches!(
            LipschitzLedger::new(vec![0.0, 1.0], vec![-1.0]),
            Err(Error::InvalidLedger(_))
        ));
        assert!(matches!(
            Partition::new(vec![0.0, 0.6, 0.4, 1.0], vec![0.01; 3]),
            Err(Error::PartitionIncompatible(_))
        ));
        let phi = PhiSpec::new(|y| (0.3 - y).max(0.0) / 0.3).with_lower_right(
            LipschitzLedger::new(vec![0.0, 0.3, 1.0], vec![1.0 / 0.3, 0.0]).unwrap(),
        );
        let part = Partition::uniform(4, 0.05).unwrap();
        assert!(matches!(
            functional_bounds(&quarters(), &phi, &part, 1.0),
            Err(Error::PartitionIncompatible(_))
        ));
    }

    #[test]
    fn zero_constants_give_the_plug_in_value() {
        let phi = PhiSpec::new(|y| 1.0 - y)
            .with_lower_right(LipschitzLedger::uniform(0.0).unwrap())
            .with_upper_left(LipschitzLedger::uniform(0.0).unwrap());
        let part = Partition::uniform(5, 0.05).unwrap();
        let b = functional_bounds(&quarters(), &phi, &part, 1.0).unwrap();
        assert!((b.point - 0.5).abs() < 1e-15);
        assert_eq!(b.lower, Some(b.point));
        assert_eq!(b.upper, Some(b.point));
        assert!((b.total_delta - 0.05).abs() < 1e-15);
    }

    #[test]
    fn cvar_kernel_is_consistent_with_cvar_bounds() {
        let alpha = 0.2;
        let xs: Vec<f64> = (0..100)
            .map(|i| ((i * 37) % 100) as f64 / 100.0 + 0.003)
            .collect();
        let e = make_ecdf(&xs, (0.0, 1.0)).unwrap();
        let phi = PhiSpec::new(move |y| (alpha - y).max(0.0) / alpha).with_lower_right(
            LipschitzLedger::new(vec![0.0, alpha, 1.0], vec![1.0 / alpha, 0.0]).unwrap(),
        );
        let part = Partition::new(vec![0.0, 0.1, alpha, 1.0], vec![0.025, 0.025, 0.025]).unwrap();
        let fb = functional_bounds(&e, &phi, &part, 1.0).unwrap();
        let cb = cvar_reward_bounds(&e, alpha, 0.1).unwrap();
        let lower = fb.lower.unwrap();
        assert!(lower <= fb.point);
        assert!((fb.point - cb.point).abs() < 1e-12);
        assert!(cb.lower <= cb.point && lower <= cb.point);
    }

    #[test]
    fn true_quantile_hook_uses_cell_lengths() {
        let phi =
            PhiSpec::new(|y| 1.0 - y).with_lower_right(LipschitzLedger::uniform(1.0).unwrap());
        let part = Partition::uniform(4, 0.04).unwrap();
        let a = functional_bounds(&quarters(), &phi, &part, 1.0).unwrap();
        let b = functional_bounds_true_quantiles(&quarters(), &phi, &part, &|u| u).unwrap();
        assert!((a.lower.unwrap() - b.lower.unwrap()).abs() < 1e-15);
    }
}
