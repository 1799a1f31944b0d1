//! Error types shared across the crate.

use thiserror::Error;

/// A single violated market assumption, named so callers can report every
/// failed check at once.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MarketViolation {
    #[error("InvalidPrior: {0}")]
    InvalidPrior(String),
    #[error("CostOrder: {0}")]
    CostOrder(String),
    #[error("SupportViolation: {0}")]
    SupportViolation(String),
    #[error("SinglePeakViolation: {0}")]
    SinglePeakViolation(String),
    #[error("TrivialSeparation: {0}")]
    TrivialSeparation(String),
    #[error("MonotonicityViolation: {0}")]
    MonotonicityViolation(String),
}

#[derive(Debug, Error)]
pub enum Error {
    /// Market validation failed; lists every violated assumption.
    #[error("invalid market: {}", format_violations(.0))]
    InvalidMarket(Vec<MarketViolation>),

    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    /// Operation requires a strictly increasing quality premium.
    #[error("ConstantPremium: operation undefined when the quality premium is constant (nu1 = 0)")]
    ConstantPremium,

    #[error("NoConvergence: best-response iteration did not settle after {iterations} rounds (last prices {p_g:.6}, {p_b:.6})")]
    NoConvergence {
        iterations: usize,
        p_g: f64,
        p_b: f64,
    },

    #[error("PoolingInfeasible: {0}")]
    PoolingInfeasible(String),

    #[error("NoRoot: {0}")]
    NoRoot(String),

    #[error("OutOfSupport: price {price:.6} outside [{lo:.6}, {hi:.6})")]
    OutOfSupport { price: f64, lo: f64, hi: f64 },

    #[error("GridTooCoarse: {0}")]
    GridTooCoarse(String),

    /// Private-mode statistics for the positive regime need a verified profile.
    #[error("ProfileRequired: no canonical equilibrium exists for this regime; supply a profile")]
    ProfileRequired,

    #[error("MultipleIntervals: expected at most two sign changes, found them at {0:?}")]
    MultipleIntervals(Vec<f64>),

    /// The two published benchmark case lists assign this input to different cases.
    #[error("CaseOverlap: {0}")]
    CaseOverlap(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn format_violations(violations: &[MarketViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
