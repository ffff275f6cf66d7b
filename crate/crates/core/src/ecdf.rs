//! Empirical CDFs with declared support and exact step integration.

use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::numeric::CompensatedSum;

/// Sorted observations together with the support `[a, b]` they live in.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    samples: Vec<f64>,
    support_lo: f64,
    support_hi: f64,
}

/// Build an ECDF from raw samples, preserving duplicates.
pub fn make_ecdf(samples: &[f64], support: (f64, f64)) -> Result<EmpiricalCdf> {
    let (lo, hi) = support;
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return invalid(format!("support ({lo}, {hi}) is not an ordered pair"));
    }
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted = samples.to_vec();
    for &x in &sorted {
        if !x.is_finite() {
            return invalid(format!("sample value {x} is not finite"));
        }
        if x < lo || x > hi {
            return Err(Error::SupportViolation { value: x, lo, hi });
        }
    }
    sorted.sort_by(f64::total_cmp);
    Ok(EmpiricalCdf {
        samples: sorted,
        support_lo: lo,
        support_hi: hi,
    })
}

impl EmpiricalCdf {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn support(&self) -> (f64, f64) {
        (self.support_lo, self.support_hi)
    }

    /// `F_n(x) = #{X_i <= x} / n`.
    pub fn eval(&self, x: f64) -> f64 {
        self.count_le(x) as f64 / self.len() as f64
    }

    /// Left limit `F_n(x-) = #{X_i < x} / n`.
    pub fn eval_left(&self, x: f64) -> f64 {
        self.count_lt(x) as f64 / self.len() as f64
    }

    pub fn count_le(&self, x: f64) -> usize {
        self.samples.partition_point(|&s| s <= x)
    }

    pub fn count_lt(&self, x: f64) -> usize {
        self.samples.partition_point(|&s| s < x)
    }

    /// Distinct sample values with the ECDF value reached at each.
    pub fn steps(&self) -> Vec<(f64, f64)> {
        let n = self.len() as f64;
        let mut out: Vec<(f64, f64)> = Vec::new();
        for (i, &x) in self.samples.iter().enumerate() {
            let f = (i + 1) as f64 / n;
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 = f,
                _ => out.push((x, f)),
            }
        }
        out
    }

    /// Requires a finite support for integrated quantities.
    pub fn finite_support(&self) -> Result<(f64, f64)> {
        if self.support_lo.is_finite() && self.support_hi.is_finite() {
            Ok((self.support_lo, self.support_hi))
        } else {
            Err(Error::UnboundedSupport)
        }
    }

    /// `int_a^b g(F_n(x)) dx`, exact because `F_n` is constant between knots.
    pub fn integrate<G: Fn(f64) -> f64>(&self, g: G) -> Result<f64> {
        let (a, b) = self.finite_support()?;
        let mut acc = CompensatedSum::new();
        let mut left = a;
        let mut level = 0.0;
        for (x, f) in self.steps() {
            if x > left {
                acc.add((x - left) * g(level));
            }
            left = x;
            level = f;
        }
        if b > left {
            acc.add((b - left) * g(level));
        }
        Ok(acc.value())
    }
}

/// Contents of a sample file: one value per line, optionally preceded by a
/// `# support=a,b` directive.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleFile {
    pub samples: Vec<f64>,
    pub support: Option<(f64, f64)>,
}

fn parse_support(spec: &str) -> Result<(f64, f64)> {
    let (a, b) = spec
        .split_once(',')
        .ok_or_else(|| Error::InvalidQuery(format!("support `{spec}` must look like a,b")))?;
    let parse = |s: &str| {
        let s = s.trim();
        match s {
            "inf" | "+inf" => Ok(f64::INFINITY),
            "-inf" => Ok(f64::NEG_INFINITY),
            _ => f64::from_str(s)
                .map_err(|_| Error::InvalidQuery(format!("bad support bound `{s}`"))),
        }
    };
    Ok((parse(a)?, parse(b)?))
}

impl FromStr for SampleFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_samples(text)
    }
}

/// Parse the plain-text sample format. Blank lines and other `#` comments
/// are ignored.
pub fn parse_samples(text: &str) -> Result<SampleFile> {
    let mut samples = Vec::new();
    let mut support = None;
    let mut seen_content = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(spec) = comment.strip_prefix("support=") {
                if seen_content {
                    return invalid(format!(
                        "line {}: support directive must precede the samples",
                        lineno + 1
                    ));
                }
                support = Some(parse_support(spec)?);
            }
            continue;
        }
        seen_content = true;
        let value = f64::from_str(line).map_err(|_| {
            Error::InvalidQuery(format!("line {}: `{line}` is not a number", lineno + 1))
        })?;
        samples.push(value);
    }
    Ok(SampleFile { samples, support })
}

/// Parse a `a,b` support argument.
pub fn parse_support_arg(spec: &str) -> Result<(f64, f64)> {
    parse_support(spec)
}
