//! Error type shared by the whole crate.

use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A computation would exceed the configured degree guard.
    #[error("degree {degree} exceeds the configured guard ({limit}); raise the guard explicitly to proceed")]
    DegreeGuardExceeded { degree: u32, limit: u32 },

    /// An operation was called with partitions of unequal degree.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    /// `to_dense` was asked for an unfaithful image.
    #[error("{num_vars} variables cannot faithfully represent degree {degree}")]
    TooFewVariables { num_vars: usize, degree: u32 },

    /// Border-strip size outside `1..=|mu|`.
    #[error("border strip size {size} is invalid for a diagram of {degree} cells")]
    InvalidHookSize { size: u32, degree: u32 },

    /// The two character routes disagree; always a defect, never a tolerance.
    #[error("character backends disagree at chi^[{mu}]_[{lambda}]: schur gives {schur}, murnaghan-nakayama gives {mn}")]
    BackendDisagreement {
        mu: String,
        lambda: String,
        schur: BigInt,
        mn: BigInt,
    },

    /// A signed row sum that is proved to vanish came out nonzero.
    #[error("vanishing violated at lambda = {lambda}, mu = {mu}: signed row sum is {value}, expected 0")]
    VanishingViolation {
        lambda: String,
        mu: String,
        value: BigInt,
    },

    #[error("cache: {0}")]
    Cache(String),
}
