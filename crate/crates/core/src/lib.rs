//! Exact local Dvoretzky–Kiefer–Wolfowitz concentration for empirical CDFs.
//!
//! The crate evaluates the exact probability that the empirical CDF of `n`
//! uniform samples deviates from the true CDF by more than `eps` somewhere
//! inside a sub-interval `[lo, hi]` of `[0, 1]`, for either deviation
//! direction. On top of these closed forms it provides
//!
//! * inversion into confidence radii, tabulation and CDF confidence bands
//!   ([`inversion`]),
//! * exact supremum evaluation on samples and a seeded Monte-Carlo oracle
//!   ([`mc`]),
//! * empirical CDFs, CVaR point estimates and confidence bounds, and generic
//!   functional-of-CDF bounds ([`ecdf`], [`risk`]),
//! * time-uniform (anytime-valid) radii obtained by geometric peeling
//!   ([`time_uniform`]).
//!
//! All computations are pure functions of their inputs and can be called
//! from any number of threads.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod csv;
pub mod ecdf;
pub mod error;
pub mod exact;
pub mod interval;
pub mod inversion;
pub mod mc;
pub mod numeric;
pub mod risk;
pub mod time_uniform;

pub use ecdf::{make_ecdf, parse_samples, parse_support_arg, EmpiricalCdf, SampleFile};
pub use error::{Error, Result};
pub use exact::{
    exceedance, exceedance_probability, left_exceedance, massart_bound, right_exceedance,
    smirnov_full, Branch, BranchParams, ExceedanceQuery, ExceedanceResult,
};
pub use interval::{TailSide, UnitInterval};
pub use inversion::{
    confidence_band, confidence_band_with_split, invert_radius, massart_radius, tabulate, BandKnot,
    ConfidenceBand, Radius, RadiusQuery, RadiusTable, DEFAULT_TOL, EPS_MIN,
};
pub use mc::{
    binomial_tail, mc_exceedance, mc_report, mc_report_csv, replication_sample, sup_dev,
    sup_dev_left, sup_dev_right, BinomialMode, McConfig, McEstimate, McRow,
};
pub use risk::{
    cvar_integrated_point, cvar_loss_bounds, cvar_loss_point, cvar_reward_bounds,
    cvar_reward_point, functional_bounds, functional_bounds_true_quantiles, value_at_risk,
    CvarBounds, FunctionalBounds, LipschitzLedger, Partition, PhiSpec, RiskSide, VarKind,
};
pub use time_uniform::{
    build_schedule, g_partial_sum, g_sum_upper_bound, g_value, peeling_rhs, q_sup, tu_band,
    tu_radius, tu_radius_global, tu_radius_with, GFunction, Schedule, ScheduleEntry, Scheme,
    TimeUniformConfig, TuBand,
};
