use thiserror::Error;

/// Errors surfaced by the computation engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("input must be positive: {0}")]
    NonPositiveInput(String),
    #[error("floating input too coarse to certify the requested bound: {0}")]
    PrecisionExhausted(String),
    #[error("operation requires exact (rational or quadratic) input")]
    InexactInput,
    #[error("ideal is not primary to the maximal ideal: {0}")]
    NotPrimary(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("truncation level {c} is below the stabilization level {lambda}")]
    TruncationTooLow { c: String, lambda: String },
    #[error("no stabilization level found below the scan cap {0}")]
    NoStabilization(u64),
    #[error("invariant reached the cap {0}; raise the cap to decide")]
    CapReached(u64),
    #[error("filtrations are not nested at level {0}")]
    NotNested(u64),
    #[error("linear system too ill conditioned to solve: offending node {0}")]
    IllConditioned(String),
    #[error("equality verdict reached but no rational rescaling certified within q <= {0}")]
    RationalityUndecided(u64),
    #[error("polytope has zero volume")]
    ZeroVolume,
    #[error("degenerate evaluation system: {0}")]
    DegenerateSystem(String),
    #[error("divisor coefficients lie outside every cone of the envelope")]
    OutsideEnvelope,
    #[error("classifier requires an equality verdict")]
    NotEquality,
    #[error("operation requires exact coordinates")]
    InexactCoordinates,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
