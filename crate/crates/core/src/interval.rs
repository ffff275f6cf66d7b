use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A closed sub-interval `[lo, hi]` of `[0, 1]` over which deviations are
/// maximised. Degenerate intervals (`lo == hi`) are allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    pub const FULL: UnitInterval = UnitInterval { lo: 0.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return invalid(format!(
                "interval [{lo}, {hi}] is not a sub-interval of [0, 1]"
            ));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Image under `u -> 1 - u`.
    pub fn mirror(&self) -> Self {
        Self {
            lo: 1.0 - self.hi,
            hi: 1.0 - self.lo,
        }
    }

    pub fn contains(&self, u: f64) -> bool {
        self.lo <= u && u <= self.hi
    }

    pub fn is_subset_of(&self, other: &UnitInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.lo, self.hi)
    }
}

/// Direction of the deviation whose supremum is controlled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailSide {
    /// `sup U_n(u) - u`: the empirical CDF lies above the truth.
    EmpiricalAbove,
    /// `sup u - U_n(u)`: the empirical CDF lies below the truth.
    EmpiricalBelow,
}

impl TailSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            TailSide::EmpiricalAbove => "above",
            TailSide::EmpiricalBelow => "below",
        }
    }

    pub fn opposite(&self) -> Self {
        match self {
            TailSide::EmpiricalAbove => TailSide::EmpiricalBelow,
            TailSide::EmpiricalBelow => TailSide::EmpiricalAbove,
        }
    }
}

impl fmt::Display for TailSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TailSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "above" | "left" => Ok(TailSide::EmpiricalAbove),
            "below" | "right" => Ok(TailSide::EmpiricalBelow),
            other => invalid(format!("unknown tail '{other}', expected above|below")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_intervals() {
        assert!(UnitInterval::new(0.5, 0.4).is_err());
        assert!(UnitInterval::new(-0.1, 0.4).is_err());
        assert!(UnitInterval::new(0.0, 1.2).is_err());
        assert!(UnitInterval::new(f64::NAN, 0.5).is_err());
        assert!(UnitInterval::new(0.3, 0.3).is_ok());
    }

    #[test]
    fn mirror_is_an_involution() {
        let i = UnitInterval::new(0.1, 0.4).unwrap();
        let m = i.mirror();
        assert!((m.lo() - 0.6).abs() < 1e-15 && (m.hi() - 0.9).abs() < 1e-15);
        let back = m.mirror();
        assert!((back.lo() - 0.1).abs() < 1e-15 && (back.hi() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn tail_parses() {
        assert_eq!(
            "above".parse::<TailSide>().unwrap(),
            TailSide::EmpiricalAbove
        );
        assert_eq!(
            "below".parse::<TailSide>().unwrap(),
            TailSide::EmpiricalBelow
        );
        assert!("up".parse::<TailSide>().is_err());
    }
}
