use thiserror::Error;

/// Errors raised by state construction and spectral operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Fock cutoff must be at least 1")]
    InvalidCutoff,

    #[error("coupling xi must be positive, got {0}")]
    InvalidXi(f64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Coherent-state tail would spill past the truncation boundary.
    /// `required` is the smallest cutoff satisfying |z|^2 + 6|z| <= N.
    #[error(
        "coherent amplitude |z| = {z_abs:.4} exceeds truncation guard: \
         needs cutoff >= {required}, got {cutoff}"
    )]
    TruncationGuard {
        z_abs: f64,
        required: usize,
        cutoff: usize,
    },

    /// The invariant subspace n_r would touch the truncation boundary.
    /// Complete blocks exist only for n_r + 1 <= cutoff.
    #[error("subspace index n_r = {n_r} has no complete block at cutoff {cutoff}")]
    SubspaceOutOfRange { n_r: usize, cutoff: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
