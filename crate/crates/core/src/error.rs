//! Error types shared across the crate.

use thiserror::Error;

/// Outcome of an exact-division attempt that did not produce a quotient.
///
/// `NoExactQuotient` is a normal outcome (the quotient does not exist, or is
/// not unique in a ring with zero divisors); `DivisionByZero` is a caller
/// error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no unique exact quotient")]
    NoExactQuotient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: String, detail: String },
    #[error("{op} is not supported over {ring}")]
    UnsupportedRing { op: String, ring: String },
    #[error("unsupported base-change map: {0}")]
    UnsupportedMap(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rank cap exceeded for {what}: rank {requested} > cap {cap} (use a cap override to force)")]
    CapExceeded {
        what: String,
        requested: usize,
        cap: usize,
    },
    #[error("algebra axiom violated: {0}")]
    AxiomViolation(String),
    #[error("monogenic algebra requires a monic polynomial")]
    NonMonic,
    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },
    #[error("homomorphism is not universally norm-preserving")]
    NotNormPreserving,
    #[error("fast norm path unavailable: {0}")]
    FastPathUnavailable(String),
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
