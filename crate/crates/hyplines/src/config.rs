//! Space configuration: the single parameter `n`.

use crate::error::{Error, Result};

/// Dimension bookkeeping for one instance of the construction.
///
/// The space of oriented geodesics of `H^{n+1}` has dimension `2n`; the
/// ambient Minkowski space is `ℝ^{n+2}`, the ideal boundary is `Sⁿ ⊂ ℝ^{n+1}`.
/// The metric `g₀` and the tangent-space cross product exist only for
/// `n = 2` (`H³`); the octonionic structure only for `n = 6` (`H⁷`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceConfig {
    n: usize,
}

impl SpaceConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("n must be at least 1"));
        }
        Ok(SpaceConfig { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the ambient Minkowski space `ℝ^{n+2}`.
    pub fn ambient_dim(&self) -> usize {
        self.n + 2
    }

    /// Dimension of the space the boundary sphere lives in, `ℝ^{n+1}`.
    pub fn boundary_dim(&self) -> usize {
        self.n + 1
    }

    pub fn require_g0(&self) -> Result<()> {
        if self.n == 2 {
            Ok(())
        } else {
            Err(Error::Feature { required: 2, actual: self.n })
        }
    }

    pub fn require_octonion(&self) -> Result<()> {
        if self.n == 6 {
            Ok(())
        } else {
            Err(Error::Feature { required: 6, actual: self.n })
        }
    }

    /// Configuration inferred from an ambient vector length.
    pub fn from_ambient_dim(dim: usize) -> Result<Self> {
        if dim < 3 {
            return Err(Error::domain(format!("ambient dimension {dim} too small")));
        }
        SpaceConfig::new(dim - 2)
    }
}
