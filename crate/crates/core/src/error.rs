//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("operation requires c_1 = 0, got c_1 = {got}")]
    NonzeroConstantTerm { got: String },

    #[error("operation requires c_1 = 1, got c_1 = {got}")]
    NonUnitConstantTerm { got: String },

    #[error("exact computation of n^a requires an integer a, got {got}")]
    NonIntegerExponent { got: String },

    #[error("variable {0} has no assigned value")]
    UnassignedVariable(String),

    #[error("scalar {0} has no inverse in this ring")]
    NotInvertible(String),

    #[error("coefficients are not completely multiplicative: c_{{{m}*{n}}} != c_{m}*c_{n}")]
    NotCompletelyMultiplicative { m: u64, n: u64 },

    #[error("power series must have constant term 1, got {got}")]
    NonUnitLeadingCoeff { got: String },

    #[error("series must be supported on powers of two; nonzero coefficient at index {0}")]
    SupportViolation(usize),

    #[error("tolerance {tol:e} unreachable: best certified bound is {best:e} at cutoff {cutoff}")]
    ToleranceUnreachable { tol: f64, best: f64, cutoff: usize },

    #[error("no bracketing interval found: objective does not increase within the search range")]
    BracketFailure,

    #[error(
        "cannot classify the minimum: probed derivative limit {value:e} (certified band {band:e}) \
         overlaps -1/w = {target:e}"
    )]
    InconclusiveClassification { value: f64, band: f64, target: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
