//! Log-domain helpers shared by the closed-form evaluators.

use statrs::function::factorial::ln_factorial;

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// `ln(x^k)` with the conventions `0^0 = 1` and `0^k = 0` for `k > 0`.
///
/// Negative exponents require `x > 0`.
#[inline]
pub fn ln_pow(x: f64, k: f64) -> f64 {
    if k == 0.0 {
        0.0
    } else if x <= 0.0 {
        f64::NEG_INFINITY
    } else {
        k * x.ln()
    }
}

/// Table of `ln(k!)` for `k = 0..=n`.
#[derive(Debug, Clone)]
pub struct LnFactorials(Vec<f64>);

impl LnFactorials {
    pub fn new(n: usize) -> Self {
        Self((0..=n as u64).map(ln_factorial).collect())
    }

    #[inline]
    pub fn ln_choose(&self, n: usize, k: usize) -> f64 {
        debug_assert!(k <= n);
        self.0[n] - self.0[k] - self.0[n - k]
    }
}

/// Rounds `x` to the nearest integer when it sits within a few ulps of it.
///
/// Quantities such as `n * (1 - lo - eps)` are integers at the kinks of the
/// exceedance function; floating noise must not push them across.
#[inline]
pub fn snap_integer(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= 64.0 * f64::EPSILON * x.abs().max(1.0) {
        r
    } else {
        x
    }
}
