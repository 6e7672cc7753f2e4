//! Centralized numeric tolerances.
//!
//! Unless a constant is documented as absolute, tolerances are applied
//! relative to the largest magnitude among the inputs of the check.

/// Membership of a matrix in `so(1,n+1)`: `‖Xᵀη + ηX‖ ≤ SO_MEMBERSHIP · scale`.
pub const SO_MEMBERSHIP: f64 = 1e-12;

/// Membership of a matrix in `O(1,n+1)`: `‖gᵀηg − η‖ ≤ GROUP_MEMBERSHIP · scale`.
pub const GROUP_MEMBERSHIP: f64 = 1e-9;

/// Hyperboloid and tangency invariants (`⟨p,p⟩ = −1`, `⟨p,v⟩ = 0`, unit norms).
pub const POINT_INVARIANT: f64 = 1e-10;

/// Unit ideal points on the boundary sphere.
pub const IDEAL_UNIT: f64 = 1e-12;

/// `B`-orthogonality of the `𝔤₀ ⊕ 𝔥` splitting.
pub const SPLIT_ORTHO: f64 = 1e-10;

/// Distinctness of an ideal boundary pair at construction time.
pub const PAIR_DISTINCT: f64 = 1e-10;

/// Conditioning guard for boundary-metric operations: reject `|p−q|` below this.
pub const PAIR_METRIC_GUARD: f64 = 1e-8;

/// Overflow guard: `cosh`/`sinh` arguments (and `‖X‖·|t|` in the matrix
/// exponential) are limited to this value.
pub const HYPERBOLIC_RANGE: f64 = 50.0;

/// Gram–Schmidt pivot rejection threshold in frame completion.
pub const FRAME_PIVOT: f64 = 1e-8;

/// Default relative band of the null/space/timelike trichotomy.
pub const NULL_BAND: f64 = 1e-7;

/// Band around `|λ| = 1` treated as the (non-periodic) frontier.
pub const PERIODIC_FRONTIER_BAND: f64 = 1e-9;

/// Degenerate-plane guard for sectional curvature (relative Gram determinant).
pub const CURVATURE_PLANE_GUARD: f64 = 1e-8;

/// Chart and representation round-trips.
pub const ROUND_TRIP: f64 = 1e-8;

/// Residual orthogonality of a standard presentation at interior samples.
pub const PRESENTATION_RESIDUAL: f64 = 1e-7;
