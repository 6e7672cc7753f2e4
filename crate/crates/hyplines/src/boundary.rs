//! The ideal-boundary pair model `(Sⁿ×Sⁿ)∖Δ` of the space of oriented
//! geodesics.
//!
//! The endpoint map `ψ([γ]) = (γ(−∞), γ(+∞))` is a diffeomorphism onto the
//! complement of the diagonal, and an isometry once the target carries the
//! pseudo-metric with norm `‖(x,y)‖_{(p,q)} = 4⟨T_{p,q}x, y⟩/|q−p|²`, where
//! `T_{p,q}` reflects `ℝ^{n+1}` across the hyperplane orthogonal to `p − q`.
//! The group `G` acts by directly conformal transformations of `Sⁿ`
//! ([`mobius_action`]), pairs of which preserve that metric.
//!
//! At the reference geodesic the differential of `ψ` sends Jacobi data
//! `(J(0), J′(0)) = (x, y)` to `(x − y, x + y)`; [`jacobi_to_boundary`]
//! extends this by equivariance to arbitrary base points.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hyperbolic::IdealPoint;
use crate::linespace::{GTangent, OrientedGeodesic};
use crate::minkowski::{is_in_group, lorentz_frame, lorentz_inverse, LorentzVector};
use crate::tol;

/// Ordered pair of distinct ideal points: a point of `(Sⁿ×Sⁿ)∖Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPair {
    p: IdealPoint,
    q: IdealPoint,
}

impl BoundaryPair {
    pub fn new(p: IdealPoint, q: IdealPoint) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(Error::Dimension { expected: p.dim(), got: q.dim() });
        }
        if p.chordal_distance(&q) <= tol::PAIR_DISTINCT {
            return Err(Error::domain("boundary pair must avoid the diagonal"));
        }
        Ok(BoundaryPair { p, q })
    }

    pub fn p(&self) -> &IdealPoint {
        &self.p
    }

    pub fn q(&self) -> &IdealPoint {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.p.dim()
    }

    pub fn chordal_gap(&self) -> f64 {
        self.p.chordal_distance(&self.q)
    }

    pub fn distance(&self, other: &BoundaryPair) -> f64 {
        self.p.chordal_distance(&other.p) + self.q.chordal_distance(&other.q)
    }
}

impl From<&OrientedGeodesic> for BoundaryPair {
    fn from(geo: &OrientedGeodesic) -> Self {
        BoundaryPair { p: geo.minus().clone(), q: geo.plus().clone() }
    }
}

impl BoundaryPair {
    pub fn to_geodesic(&self) -> Result<OrientedGeodesic> {
        OrientedGeodesic::new(self.p.clone(), self.q.clone())
    }
}

/// Tangent vector to `(Sⁿ×Sⁿ)∖Δ`: a pair `(ξ₋, ξ₊)` with `ξ₋ ⟂ p`, `ξ₊ ⟂ q`.
#[derive(Debug, Clone)]
pub struct BoundaryTangent {
    at: BoundaryPair,
    xi_minus: DVector<f64>,
    xi_plus: DVector<f64>,
}

impl BoundaryTangent {
    pub fn new(at: BoundaryPair, xi_minus: DVector<f64>, xi_plus: DVector<f64>) -> Result<Self> {
        if xi_minus.len() != at.dim() || xi_plus.len() != at.dim() {
            return Err(Error::Dimension { expected: at.dim(), got: xi_minus.len() });
        }
        let dm = xi_minus.dot(at.p.dir());
        let dp = xi_plus.dot(at.q.dir());
        let scale = xi_minus.norm().max(xi_plus.norm()).max(1.0);
        if dm.abs() > tol::POINT_INVARIANT * scale || dp.abs() > tol::POINT_INVARIANT * scale {
            return Err(Error::domain("components must be tangent to the sphere factors"));
        }
        Ok(BoundaryTangent {
            xi_minus: &xi_minus - at.p.dir() * dm,
            xi_plus: &xi_plus - at.q.dir() * dp,
            at,
        })
    }

    pub fn at(&self) -> &BoundaryPair {
        &self.at
    }

    pub fn xi_minus(&self) -> &DVector<f64> {
        &self.xi_minus
    }

    pub fn xi_plus(&self) -> &DVector<f64> {
        &self.xi_plus
    }

    /// Euclidean size of the component pair.
    pub fn component_norm(&self) -> f64 {
        (self.xi_minus.norm_squared() + self.xi_plus.norm_squared()).sqrt()
    }

    pub fn component_distance(&self, other: &BoundaryTangent) -> f64 {
        ((&self.xi_minus - &other.xi_minus).norm_squared()
            + (&self.xi_plus - &other.xi_plus).norm_squared())
        .sqrt()
    }
}

/// Reflection of `ℝ^{n+1}` across the hyperplane orthogonal to `p − q`;
/// involutive, orthogonal, swaps `p` and `q`.
pub fn reflection_t(p: &IdealPoint, q: &IdealPoint, x: &DVector<f64>) -> Result<DVector<f64>> {
    let normal = p.dir() - q.dir();
    let len = normal.norm();
    if len <= tol::PAIR_METRIC_GUARD {
        return Err(Error::domain("reflection needs distinct points"));
    }
    let n_hat = normal / len;
    Ok(x - &n_hat * (2.0 * x.dot(&n_hat)))
}

/// Norm of the boundary pseudo-metric: `4⟨T_{p,q}ξ₋, ξ₊⟩ / |q−p|²`.
pub fn norm_mss(bt: &BoundaryTangent) -> Result<f64> {
    let gap = bt.at.chordal_gap();
    if gap <= tol::PAIR_METRIC_GUARD {
        return Err(Error::domain("pair too close to the diagonal for the metric"));
    }
    let reflected = reflection_t(&bt.at.p, &bt.at.q, &bt.xi_minus)?;
    Ok(4.0 * reflected.dot(&bt.xi_plus) / (gap * gap))
}

/// Bilinear form of the boundary pseudo-metric, by polarization.
pub fn mss_inner(a: &BoundaryTangent, b: &BoundaryTangent) -> Result<f64> {
    if a.at.distance(&b.at) > 1e-9 {
        return Err(Error::domain("tangents must share the base pair"));
    }
    let sum = BoundaryTangent::new(
        a.at.clone(),
        &a.xi_minus + &b.xi_minus,
        &a.xi_plus + &b.xi_plus,
    )?;
    let diff = BoundaryTangent::new(
        a.at.clone(),
        &a.xi_minus - &b.xi_minus,
        &a.xi_plus - &b.xi_plus,
    )?;
    Ok(0.25 * (norm_mss(&sum)? - norm_mss(&diff)?))
}

/// The directly conformal transformation of `Sⁿ` induced by `g ∈ G`:
/// the spatial part of `g(e₀ + z)` renormalized to the null cone section.
pub fn mobius_action(g: &DMatrix<f64>, z: &IdealPoint) -> Result<IdealPoint> {
    if !is_in_group(g, tol::GROUP_MEMBERSHIP) {
        return Err(Error::domain("matrix is not in the identity component of O(1,n+1)"));
    }
    if g.nrows() != z.dim() + 1 {
        return Err(Error::Dimension { expected: z.dim() + 1, got: g.nrows() });
    }
    let w = g * z.null_vector();
    if w[0] <= 0.0 {
        return Err(Error::domain("image ray left the future null cone"));
    }
    let dir = DVector::from_fn(z.dim(), |i, _| w[1 + i] / w[0]);
    let n = dir.norm();
    IdealPoint::new(dir / n)
}

/// Analytic differential of [`mobius_action`] at `z` applied to a tangent
/// vector `ξ ⟂ z`: the quotient-rule derivative of `w ↦ w⃗/w₀`, re-projected
/// tangentially at the image point.
pub fn d_mobius(g: &DMatrix<f64>, z: &IdealPoint, xi: &DVector<f64>) -> Result<DVector<f64>> {
    if xi.len() != z.dim() {
        return Err(Error::Dimension { expected: z.dim(), got: xi.len() });
    }
    if xi.dot(z.dir()).abs() > 1e-9 * xi.norm().max(1.0) {
        return Err(Error::domain("ξ must be tangent at z"));
    }
    let image = mobius_action(g, z)?;
    let w = g * z.null_vector();
    let mut xi_ambient = LorentzVector::zeros(z.dim() + 1);
    for i in 0..z.dim() {
        xi_ambient[1 + i] = xi[i];
    }
    let dw = g * xi_ambient;
    let mut out =
        DVector::from_fn(z.dim(), |i, _| dw[1 + i] / w[0] - w[1 + i] * dw[0] / (w[0] * w[0]));
    let along = out.dot(image.dir());
    out -= image.dir() * along;
    Ok(out)
}

/// Componentwise Möbius action on a boundary pair.
pub fn pair_action(g: &DMatrix<f64>, bp: &BoundaryPair) -> Result<BoundaryPair> {
    BoundaryPair::new(mobius_action(g, &bp.p)?, mobius_action(g, &bp.q)?)
}

/// Componentwise differential of the pair action; preserves [`norm_mss`].
pub fn d_pair_action(g: &DMatrix<f64>, bt: &BoundaryTangent) -> Result<BoundaryTangent> {
    let at = pair_action(g, &bt.at)?;
    let xm = d_mobius(g, &bt.at.p, &bt.xi_minus)?;
    let xp = d_mobius(g, &bt.at.q, &bt.xi_plus)?;
    BoundaryTangent::new(at, xm, xp)
}

/// The differential of the endpoint map on Jacobi data.
///
/// The marked point is moved to the reference tangent by a Lorentz frame,
/// where `dψ(J(0), J′(0)) = (J(0) − J′(0), J(0) + J′(0))` read in
/// `span(e₂,…) ⊂ ℝ^{n+1}`, and the result is carried back with the
/// differential of the pair action. Well defined because the frame
/// ambiguity is a spatial rotation commuting with the whole construction.
pub fn jacobi_to_boundary(gt: &GTangent) -> Result<BoundaryTangent> {
    let g = lorentz_frame(gt.base().base().coords(), gt.base().vec())?;
    let at_ref = crate::linespace::push_forward(&lorentz_inverse(&g), gt)?;

    let n1 = gt.base().dim() - 1;
    let spatial = |w: &LorentzVector| DVector::from_fn(n1, |i, _| w[1 + i]);
    let j0 = spatial(at_ref.j0().vec());
    let j1 = spatial(at_ref.j1().vec());

    let reference = BoundaryPair::from(&OrientedGeodesic::reference(n1 - 1));
    let at_ref_bt = BoundaryTangent::new(reference, &j0 - &j1, &j0 + &j1)?;
    d_pair_action(&g, &at_ref_bt)
}
