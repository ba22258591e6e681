//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the set of kept subsystems must be nonempty")]
    EmptyKeepSet,

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },

    #[error("matrix is not Hermitian: max deviation {deviation:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    EigNonConvergence { sweeps: usize },

    #[error("eigenvalue {value:.6e} below the negativity tolerance -1e-10")]
    NegativeEigenvalue { value: f64 },

    #[error("not a valid density matrix: {0}")]
    InvalidDensity(String),

    #[error("state vector norm {norm} violates normalization within {tol:.1e}")]
    NormalizationViolation { norm: f64, tol: f64 },

    #[error("excitation number {k} out of range for {n} qubits")]
    ExcitationOutOfRange { k: usize, n: usize },

    #[error("{context}: focus must be a single qubit")]
    NotSingleQubitFocus { context: &'static str },

    #[error("{name} = {value} outside the domain {domain}")]
    DomainViolation {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("entropic index q = {q} must be positive")]
    NonPositiveQ { q: f64 },

    #[error("entropic index q = {q} outside the closed-form validity window [{min:.6}, {max:.6}]")]
    QOutsideWindow { q: f64, min: f64, max: f64 },

    #[error("unsupported measure for this operation: {0}")]
    UnsupportedMeasure(String),

    #[error("exponent {alpha} below the validity threshold {min} for this bound")]
    ExponentBelowValidity { alpha: f64, min: f64 },

    #[error(
        "ordering conditions not satisfied (profile m = {m}, need m = {required}); \
         use the mixed-order bound instead"
    )]
    OrderingConditionsUnmet { m: usize, required: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("state file: {0}")]
    StateFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
