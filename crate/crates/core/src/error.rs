//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Requested bandlimit cannot be represented on the given grid.
    #[error("bandlimit {l_max} exceeds grid resolution (n_theta={n_theta}, n_phi={n_phi})")]
    Resolution {
        l_max: usize,
        n_theta: usize,
        n_phi: usize,
    },

    /// Rotation matrix fails the orthogonality check.
    #[error("matrix is not a rotation: |R^T R - I| = {defect:.3e}, det = {det:.6}")]
    NotARotation { defect: f64, det: f64 },

    /// Field values too large for pointwise exponentials.
    #[error("field sup-norm {sup:.3e} exceeds the overflow guard {limit}")]
    Magnitude { sup: f64, limit: f64 },

    /// Stereographic projection evaluated at the projection pole.
    #[error("stereographic projection undefined at the north pole")]
    ProjectionPole,

    /// Operands live on different sphere contexts.
    #[error("fields belong to different grids ({0} vs {1})")]
    GridMismatch(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("field file format: {0}")]
    FieldFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
