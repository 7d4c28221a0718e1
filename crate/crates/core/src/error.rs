use thiserror::Error;

/// Errors produced by graph construction, linear algebra, and the spectrum
/// engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {deviation:e} exceeds 1e-12")]
    NotSymmetric { i: usize, j: usize, deviation: f64 },

    #[error("eigensolver failed to converge within {0} sweeps")]
    NoConvergence(usize),

    /// The shift `nu` sits too close to an eigenvalue of the matrix for the
    /// linear solve to be trusted. `nearest_eigenvalue_gap` is an upper bound
    /// on the distance from `nu` to the offending eigenvalue.
    #[error("nu = {nu} is a pole: estimated condition {condition:.3e} exceeds {limit:.0e} (eigenvalue within ~{nearest_eigenvalue_gap:.3e})")]
    PoleAtNu {
        nu: f64,
        condition: f64,
        limit: f64,
        nearest_eigenvalue_gap: f64,
    },

    #[error("numeric inconsistency: {0}")]
    NumericInconsistency(String),

    #[error("lemma precondition not met: {0}")]
    LemmaPrecondition(String),

    #[error("unsupported class: {0}")]
    UnsupportedClass(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("exact mode: {0}")]
    Exact(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
