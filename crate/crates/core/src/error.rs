use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("input samples are not sorted ascending")]
    UnsortedInput,

    #[error("empty sample")]
    EmptySample,

    #[error("sample value {value} lies outside the declared support [{lo}, {hi}]")]
    SupportViolation { value: f64, lo: f64, hi: f64 },

    #[error("a finite upper support bound is required")]
    UnboundedSupport,

    #[error("support lower bound {0} is negative")]
    NegativeSupport(f64),

    #[error("partition is incompatible with the Lipschitz breakpoints: {0}")]
    PartitionIncompatible(String),

    #[error("invalid Lipschitz ledger: {0}")]
    InvalidLedger(String),

    #[error("eps = {eps} does not exceed the peeling threshold {threshold}")]
    EpsTooSmall { eps: f64, threshold: f64 },

    #[error("sample size {n} must exceed eta - 1 = {}", eta - 1.0)]
    TooEarly { n: usize, eta: f64 },

    #[error("invalid schedule parameters: {0}")]
    InvalidParams(String),

    #[error("schedule confidence level delta_t = {delta} exceeds 1 at t = {t}")]
    DeltaOverflow { t: usize, delta: f64 },
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidQuery(msg.into()))
}
