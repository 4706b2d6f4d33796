use thiserror::Error;

/// Errors raised by matrix algebra, state validation and the protocol builders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("invalid factor selection: {0}")]
    InvalidSelection(String),

    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {violation:e}")]
    NotHermitian { violation: f64 },

    #[error("matrix is not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is not one: |tr - 1| = {deviation:e}")]
    TraceNotOne { deviation: f64 },

    #[error("state is not normalized: |norm^2 - 1| = {deviation:e}")]
    NotNormalized { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("resource index {0} out of range 1..=4")]
    InvalidResourceIndex(usize),

    #[error("basis index {0} out of range 0..=7")]
    InvalidBasisIndex(usize),

    #[error("no admissible measurement branch (all outcome probabilities below threshold)")]
    NoAdmissibleOutcome,

    #[error("correction search failed for resource {resource}, outcome {outcome}")]
    CorrectionSearchFailed { resource: usize, outcome: usize },

    #[error("malformed JSON document: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
