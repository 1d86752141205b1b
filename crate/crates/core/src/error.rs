//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of grid construction, field operations and operator checks.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("grid length {0} is not a power of two (FFT precondition)")]
    NonPowerOfTwo(usize),

    #[error("grid length {0} is below the minimum of 8 points")]
    GridTooSmall(usize),

    #[error("grid half-width {0} must be positive and finite")]
    NonPositiveLength(f64),

    #[error("field has {actual} samples, grid expects {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("non-finite sample encountered (index {0})")]
    NonFinite(usize),

    #[error("boundary magnitude {edge:.3e} exceeds {limit:.3e}; periodic wrap untrustworthy")]
    EdgeLeakage { edge: f64, limit: f64 },

    #[error("support does not fit the grid hull: {0}")]
    SupportOverflow(String),

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("operands carry different deformation parameters ({0} vs {1})")]
    KappaMismatch(f64, f64),

    #[error("matrix deviates from Hermitian by {deviation:.3e} (limit {limit:.3e})")]
    NotHermitian { deviation: f64, limit: f64 },

    #[error("profile function undefined on the required range: {0}")]
    DomainError(String),

    #[error("operation requires the {expected} picture, element is in the {actual} picture")]
    WrongPicture {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("state norm {0} is not 1 within 1e-10")]
    NotNormalized(f64),

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
