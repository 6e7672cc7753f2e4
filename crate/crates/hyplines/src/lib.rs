//! Geometry of the space `𝒢` of oriented geodesics of hyperbolic space.
//!
//! `H^{n+1}` is realized as the upper sheet of the hyperboloid
//! `⟨x,x⟩ = −1` in Minkowski space `ℝ^{1,n+1}`, and `𝒢` as the homogeneous
//! space `G/G_o` of the identity component `G = O_o(1,n+1)` of its isometry
//! group. The crate provides:
//!
//! * Lorentz linear algebra and the Lie algebra `so(1,n+1)` with its
//!   Killing-form splitting `𝔤 = 𝔤₀ ⊕ 𝔥` ([`minkowski`]);
//! * the hyperboloid model: geodesics, parallel transport, closed-form
//!   Jacobi fields, ideal endpoints ([`hyperbolic`]);
//! * the invariant pseudo-Riemannian metrics `g₁` (all `n`) and `g₀`
//!   (`n = 2`) on `𝒢`, geodesics of `𝒢` and their periodicity, sectional
//!   curvature at the base point, and the minitwistor chart ([`linespace`]);
//! * curves in `𝒢`, standard presentations by ODE integration, and causal
//!   classification ([`curves`]);
//! * the ideal-boundary pair model `(Sⁿ×Sⁿ)∖Δ` with its explicit
//!   pseudo-metric and the conformal Möbius action ([`boundary`]);
//! * the Kähler structure on `𝒢₃` and the octonionic almost complex
//!   structure on `𝒢₇` with a numerical non-integrability certificate
//!   ([`almoststruct`]);
//! * seeded verification suites rendering each structural statement as an
//!   executable numeric check ([`verify`]).
//!
//! All operations are pure functions on immutable values and are safe for
//! concurrent use.

pub mod almoststruct;
pub mod boundary;
pub mod config;
pub mod curves;
pub mod error;
pub mod hyperbolic;
pub mod linespace;
pub mod minkowski;
pub mod sampling;
pub mod tol;
pub mod verify;

pub use config::SpaceConfig;
pub use error::{Error, Result};

pub use boundary::{BoundaryPair, BoundaryTangent};
pub use hyperbolic::{HPoint, HTangent, IdealPoint, UnitTangent};
pub use linespace::{CausalType, GTangent, MetricChoice, OrientedGeodesic};
pub use minkowski::{AlgebraElement, HSplit, LorentzVector};
