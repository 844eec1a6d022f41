use thiserror::Error;

use crate::cone::MembershipReport;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("party count {n} outside supported range 1..={max}")]
    PartyCount { n: usize, max: usize },
    #[error("subset mask {bits:#b} is not a nonempty subset of {n} parties")]
    InvalidMask { bits: u32, n: usize },
    #[error("party {party} outside 1..={n}")]
    InvalidParty { party: usize, n: usize },
    #[error("seed family is empty")]
    EmptySeed,
    #[error("family is not upward closed")]
    NotAnUpSet,
    #[error("up-set enumeration is limited to n <= {max} (got {n})")]
    EnumerationLimit { n: usize, max: usize },
    #[error("entry for {subset} is {value}; entries must be nonnegative and not NaN")]
    InvalidEntry { subset: String, value: f64 },
    #[error("vector has {got} entries, expected {expected}")]
    VectorLength { got: usize, expected: usize },
    #[error("vector is outside the monotonicity cone ({} violation(s))", .0.violations.len())]
    NotMember(Box<MembershipReport>),
    #[error("entry for {0} is infinite; decomposition needs a finite vector")]
    InfiniteEntry(String),
    #[error("invalid scheme parameter: {0}")]
    Parameter(String),
    #[error("party count mismatch: {left} vs {right}")]
    PartyMismatch { left: usize, right: usize },
    #[error("register layout mismatch between distributions")]
    AlphabetMismatch,
    #[error("malformed distribution: {0}")]
    Distribution(String),
    #[error("mixing weight must lie strictly between 0 and 1")]
    MixWeight,
    #[error("ray weight {0} must be positive and finite")]
    RayWeight(f64),
    #[error("realization missed its target by {error:e} bits (tolerance {tol:e})")]
    Tolerance { error: f64, tol: f64 },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
