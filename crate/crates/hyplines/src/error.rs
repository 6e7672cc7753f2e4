//! Error types shared by every module.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the geometric kernels.
///
/// `Domain` covers violated type invariants and degenerate inputs,
/// `Feature` the dimension-gated operations (`g₀` and the cross product
/// need `n = 2`, the octonionic structure needs `n = 6`), `Range` the
/// overflow guards on hyperbolic-function arguments, and `Numeric`
/// non-convergence of an iterative solve.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operation requires n = {required}, space has n = {actual}")]
    Feature { required: usize, actual: usize },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}
