//! The hyperboloid model of `H^{n+1}`.
//!
//! Points are ambient vectors with `⟨p,p⟩ = −1`, `p₀ > 0`; geodesics,
//! distance, parallel transport and Jacobi fields all have closed forms.
//! After each evaluation the point is projected back to the hyperboloid and
//! tangents are re-orthogonalized against their base, which keeps the type
//! invariants testable at tight tolerance.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::minkowski::{inner_unchecked, LorentzVector};
use crate::tol;

/// Point of `H^{n+1}`: `⟨p,p⟩ = −1`, `p₀ > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    coords: LorentzVector,
}

/// Tangent vector at a point of the hyperboloid: `⟨base, vec⟩ = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HTangent {
    base: HPoint,
    vec: LorentzVector,
}

/// Unit tangent vector: additionally `⟨vec, vec⟩ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitTangent {
    inner: HTangent,
}

/// Point of the ideal boundary sphere `Sⁿ`, stored as a unit vector of
/// `ℝ^{n+1} ≅ e₀^⊥`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPoint {
    dir: DVector<f64>,
}

impl HPoint {
    pub fn new(coords: LorentzVector) -> Result<Self> {
        let norm = inner_unchecked(&coords, &coords);
        // The inner product carries roundoff of order ε·amax², so the
        // membership tolerance scales quadratically with the point size.
        let scale = coords.amax().powi(2).max(1.0);
        if (norm + 1.0).abs() > tol::POINT_INVARIANT * scale || coords[0] <= 0.0 {
            return Err(Error::domain(format!(
                "not a hyperboloid point: ⟨p,p⟩ = {norm:.3e}, p₀ = {:.3e}",
                coords[0]
            )));
        }
        Ok(HPoint { coords: renormalize_point(coords) })
    }

    /// Base point `e₀` of `H^{n+1}` inside `ℝ^{dim}`.
    pub fn origin(dim: usize) -> Self {
        let mut v = DVector::zeros(dim);
        v[0] = 1.0;
        HPoint { coords: v }
    }

    pub fn coords(&self) -> &LorentzVector {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn approx_eq(&self, other: &HPoint, tolerance: f64) -> bool {
        (&self.coords - &other.coords).amax() <= tolerance
    }
}

impl HTangent {
    pub fn new(base: HPoint, vec: LorentzVector) -> Result<Self> {
        if vec.len() != base.dim() {
            return Err(Error::Dimension { expected: base.dim(), got: vec.len() });
        }
        let pairing = inner_unchecked(base.coords(), &vec);
        let scale = (base.coords().amax() * vec.amax()).max(1.0);
        if pairing.abs() > tol::POINT_INVARIANT * scale {
            return Err(Error::domain(format!("vector is not tangent: ⟨p,v⟩ = {pairing:.3e}")));
        }
        let vec = project_tangent(&base, &vec);
        Ok(HTangent { base, vec })
    }

    pub fn zero(base: HPoint) -> Self {
        let dim = base.dim();
        HTangent { base, vec: DVector::zeros(dim) }
    }

    pub fn base(&self) -> &HPoint {
        &self.base
    }

    pub fn vec(&self) -> &LorentzVector {
        &self.vec
    }

    /// Riemannian norm; tangent vectors to the hyperboloid are spacelike.
    pub fn norm(&self) -> f64 {
        inner_unchecked(&self.vec, &self.vec).max(0.0).sqrt()
    }
}

impl UnitTangent {
    pub fn new(base: HPoint, vec: LorentzVector) -> Result<Self> {
        let t = HTangent::new(base, vec)?;
        let n2 = inner_unchecked(t.vec(), t.vec());
        let scale = t.vec.amax().powi(2).max(1.0);
        if (n2 - 1.0).abs() > tol::POINT_INVARIANT * scale {
            return Err(Error::domain(format!("tangent is not unit: ⟨v,v⟩ = {n2:.6e}")));
        }
        let vec = if (n2 - 1.0).abs() < 0.5 { &t.vec / n2.sqrt() } else { t.vec };
        Ok(UnitTangent { inner: HTangent { vec, base: t.base } })
    }

    /// The canonical base tangent `(e₀, e₁)` of the reference geodesic.
    pub fn reference(dim: usize) -> Self {
        let base = HPoint::origin(dim);
        let mut v = DVector::zeros(dim);
        v[1] = 1.0;
        UnitTangent { inner: HTangent { base, vec: v } }
    }

    pub fn base(&self) -> &HPoint {
        &self.inner.base
    }

    pub fn vec(&self) -> &LorentzVector {
        &self.inner.vec
    }

    pub fn dim(&self) -> usize {
        self.inner.base.dim()
    }

    pub fn as_tangent(&self) -> &HTangent {
        &self.inner
    }

    /// Same geodesic, opposite direction.
    pub fn reversed(&self) -> Self {
        UnitTangent {
            inner: HTangent { base: self.inner.base.clone(), vec: -self.inner.vec.clone() },
        }
    }
}

impl IdealPoint {
    pub fn new(dir: DVector<f64>) -> Result<Self> {
        let n = dir.norm();
        if (n - 1.0).abs() > tol::IDEAL_UNIT * 10.0 {
            return Err(Error::domain(format!("ideal point must be unit: |z| = {n:.12}")));
        }
        Ok(IdealPoint { dir: dir / n })
    }

    pub fn dir(&self) -> &DVector<f64> {
        &self.dir
    }

    pub fn dim(&self) -> usize {
        self.dir.len()
    }

    /// Chordal distance `|z − w|` in `ℝ^{n+1}`.
    pub fn chordal_distance(&self, other: &IdealPoint) -> f64 {
        (&self.dir - &other.dir).norm()
    }

    /// The ambient null vector `e₀ + z`.
    pub fn null_vector(&self) -> LorentzVector {
        let mut v = DVector::zeros(self.dir.len() + 1);
        v[0] = 1.0;
        for i in 0..self.dir.len() {
            v[1 + i] = self.dir[i];
        }
        v
    }
}

fn renormalize_point(coords: LorentzVector) -> LorentzVector {
    // At large coordinates the measured ⟨p,p⟩ is dominated by cancellation
    // noise of order ε·amax²; correcting by it would wreck the point, so the
    // projection is applied only when the measurement is trustworthy.
    let norm = -inner_unchecked(&coords, &coords);
    if (norm - 1.0).abs() < 0.5 {
        &coords / norm.sqrt()
    } else {
        coords
    }
}

/// Tangential projection at `p`: `w ↦ w + ⟨w,p⟩p`.
pub fn project_tangent(p: &HPoint, w: &LorentzVector) -> LorentzVector {
    w + p.coords() * inner_unchecked(w, p.coords())
}

fn guard_range(t: f64) -> Result<()> {
    if t.abs() > tol::HYPERBOLIC_RANGE {
        Err(Error::range(format!("|t| = {:.3} exceeds {}", t.abs(), tol::HYPERBOLIC_RANGE)))
    } else {
        Ok(())
    }
}

/// Point and velocity of the unit-speed geodesic through `t0` at parameter `t`:
/// `(γ(t), γ̇(t)) = (cosh t·p + sinh t·v, sinh t·p + cosh t·v)`.
pub fn geodesic_point(t0: &UnitTangent, t: f64) -> Result<UnitTangent> {
    guard_range(t)?;
    let (c, s) = (t.cosh(), t.sinh());
    let p = t0.base().coords() * c + t0.vec() * s;
    let v = t0.base().coords() * s + t0.vec() * c;
    let base = HPoint { coords: renormalize_point(p) };
    let v = project_tangent(&base, &v);
    let n2 = inner_unchecked(&v, &v);
    let v = if (n2 - 1.0).abs() < 0.5 { v / n2.sqrt() } else { v };
    Ok(UnitTangent { inner: HTangent { base, vec: v } })
}

/// Hyperbolic distance `arccosh(−⟨p,q⟩)`; the argument is clamped to `≥ 1`.
pub fn distance(p: &HPoint, q: &HPoint) -> f64 {
    (-inner_unchecked(p.coords(), q.coords())).max(1.0).acosh()
}

/// Parallel transport of `w ∈ T_{t0.base}H` along the geodesic of `t0` to
/// parameter `t`.
///
/// The component of `w` along the geodesic plane rotates with the frame
/// `(γ, γ̇)`; the orthogonal component is constant in ambient coordinates.
pub fn parallel_transport(t0: &UnitTangent, t: f64, w: &HTangent) -> Result<HTangent> {
    if !w.base().approx_eq(t0.base(), 1e-8) {
        return Err(Error::domain("transported vector must be tangent at the geodesic base"));
    }
    let along = inner_unchecked(w.vec(), t0.vec());
    let perp = w.vec() - t0.vec() * along;
    let end = geodesic_point(t0, t)?;
    let vec = end.vec() * along + perp;
    Ok(HTangent { vec: project_tangent(end.base(), &vec), base: end.base().clone() })
}

/// Covariant derivative of a sampled field `W` along a sampled curve `β` at
/// interior index `i`: the central difference of `W` plus the normal
/// correction `+⟨W′, p⟩p`, accurate to `O(h²)`.
pub fn covariant_derivative(
    beta: &[HPoint],
    field: &[HTangent],
    h: f64,
    i: usize,
) -> Result<HTangent> {
    if beta.len() != field.len() {
        return Err(Error::Dimension { expected: beta.len(), got: field.len() });
    }
    if i == 0 || i + 1 >= field.len() {
        return Err(Error::domain(format!("index {i} is not interior")));
    }
    if h <= 0.0 {
        return Err(Error::domain("sample spacing must be positive"));
    }
    let diff = (field[i + 1].vec() - field[i - 1].vec()) / (2.0 * h);
    let p = &beta[i];
    let corrected = &diff + p.coords() * inner_unchecked(&diff, p.coords());
    Ok(HTangent { vec: project_tangent(p, &corrected), base: p.clone() })
}

/// Evaluates the orthogonal Jacobi field with data `(J(0), J′(0)) = (j0, j1)`
/// along the geodesic of `t0`:
/// `(J, J′)(t) = (cosh t·A + sinh t·B, sinh t·A + cosh t·B)` with `A, B` the
/// parallel transports of the data. Solves `J″ = J` in the parallel frame,
/// the Jacobi equation at curvature `−1`.
pub fn jacobi_eval(
    t0: &UnitTangent,
    j0: &HTangent,
    j1: &HTangent,
    t: f64,
) -> Result<(HTangent, HTangent)> {
    guard_range(t)?;
    for j in [j0, j1] {
        if !j.base().approx_eq(t0.base(), 1e-8) {
            return Err(Error::domain("Jacobi data must be tangent at the geodesic base"));
        }
        let along = inner_unchecked(j.vec(), t0.vec());
        if along.abs() > 1e-8 * (1.0 + j.norm()) {
            return Err(Error::domain("Jacobi data must be orthogonal to the direction"));
        }
    }
    let a = parallel_transport(t0, t, j0)?;
    let b = parallel_transport(t0, t, j1)?;
    let (c, s) = (t.cosh(), t.sinh());
    let base = a.base().clone();
    let j = a.vec() * c + b.vec() * s;
    let jp = a.vec() * s + b.vec() * c;
    Ok((
        HTangent { vec: project_tangent(&base, &j), base: base.clone() },
        HTangent { vec: project_tangent(&base, &jp), base },
    ))
}

/// Asymptotic endpoints `(γ(−∞), γ(+∞))` of the geodesic of `t0`, read off
/// from the null directions `p ∓ v`: the spatial part of
/// `(p ∓ v)/(p₀ ∓ v₀) − e₀`.
pub fn ideal_endpoints(t0: &UnitTangent) -> (IdealPoint, IdealPoint) {
    let p = t0.base().coords();
    let v = t0.vec();
    // p₀ > |v₀| for every unit tangent, so both denominators are positive.
    let dm = p[0] - v[0];
    let dp = p[0] + v[0];
    assert!(dm > 0.0 && dp > 0.0, "degenerate null direction");
    let n1 = p.len() - 1;
    let minus = DVector::from_fn(n1, |i, _| (p[1 + i] - v[1 + i]) / dm);
    let plus = DVector::from_fn(n1, |i, _| (p[1 + i] + v[1 + i]) / dp);
    (
        IdealPoint { dir: minus.clone() / minus.norm() },
        IdealPoint { dir: plus.clone() / plus.norm() },
    )
}

/// Riemannian exponential: the point at distance `|w|` along the geodesic
/// leaving `p` with direction `w`.
pub fn exp_map(p: &HPoint, w: &HTangent) -> Result<HPoint> {
    let r = w.norm();
    if r == 0.0 {
        return Ok(p.clone());
    }
    guard_range(r)?;
    let dir = UnitTangent::new(p.clone(), w.vec() / r)?;
    Ok(geodesic_point(&dir, r)?.base().clone())
}

/// Inverse of the exponential at `p`: the tangent vector `w` with
/// `exp_map(p, w) = q`. Returns the zero vector when `p = q`.
pub fn log_map(p: &HPoint, q: &HPoint) -> HTangent {
    let d = distance(p, q);
    if d < 1e-15 {
        return HTangent::zero(p.clone());
    }
    let tangential = project_tangent(p, q.coords());
    let n = inner_unchecked(&tangential, &tangential).sqrt();
    HTangent { vec: tangential * (d / n), base: p.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{embed_spatial, mat_exp, AlgebraElement};

    fn e(dim: usize, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(dim);
        v[i] = 1.0;
        v
    }

    fn reference(dim: usize) -> UnitTangent {
        UnitTangent::reference(dim)
    }

    #[test]
    fn geodesic_examples() {
        let t0 = reference(4);
        let g0 = geodesic_point(&t0, 0.0).unwrap();
        assert!(g0.base().approx_eq(t0.base(), 1e-15));
        assert!((g0.vec() - t0.vec()).amax() < 1e-15);

        let g1 = geodesic_point(&t0, 1.0).unwrap();
        let expect_p = e(4, 0) * 1f64.cosh() + e(4, 1) * 1f64.sinh();
        let expect_v = e(4, 0) * 1f64.sinh() + e(4, 1) * 1f64.cosh();
        assert!((g1.base().coords() - expect_p).amax() < 1e-14);
        assert!((g1.vec() - expect_v).amax() < 1e-14);
        assert!((distance(t0.base(), g1.base()) - 1.0).abs() < 1e-12);

        assert!(geodesic_point(&t0, 99.0).is_err());
    }

    #[test]
    fn geodesic_invariants_along_range() {
        let t0 = reference(5);
        for k in -20..=20 {
            let g = geodesic_point(&t0, k as f64).unwrap();
            let scale = g.base().coords().amax().powi(2).max(1.0);
            let pp = inner_unchecked(g.base().coords(), g.base().coords());
            assert!((pp + 1.0).abs() < 1e-9 * scale, "drift at t = {k}");
            let vv = inner_unchecked(g.vec(), g.vec());
            assert!((vv - 1.0).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn distance_examples() {
        let p = HPoint::origin(4);
        assert_eq!(distance(&p, &p), 0.0);
        let q = HPoint::new(e(4, 0) * 1f64.cosh() + e(4, 1) * 1f64.sinh()).unwrap();
        assert!((distance(&p, &q) - 1.0).abs() < 1e-14);
    }

    // Oracle: integrate the transport equation dW/dt = ⟨W, γ̇(t)⟩ γ(t)
    // with RK4, independent of the closed-form implementation.
    fn transport_ode(t0: &UnitTangent, t_end: f64, w0: &LorentzVector, steps: usize) -> LorentzVector {
        let h = t_end / steps as f64;
        let gamma = |t: f64| {
            let (c, s) = (t.cosh(), t.sinh());
            (
                t0.base().coords() * c + t0.vec() * s,
                t0.base().coords() * s + t0.vec() * c,
            )
        };
        let f = |t: f64, w: &LorentzVector| {
            let (g, gd) = gamma(t);
            &g * inner_unchecked(w, &gd)
        };
        let mut w = w0.clone();
        let mut t = 0.0;
        for _ in 0..steps {
            let k1 = f(t, &w);
            let k2 = f(t + h / 2.0, &(&w + &k1 * (h / 2.0)));
            let k3 = f(t + h / 2.0, &(&w + &k2 * (h / 2.0)));
            let k4 = f(t + h, &(&w + &k3 * h));
            w += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
            t += h;
        }
        w
    }

    #[test]
    fn transport_matches_ode_oracle() {
        let t0 = reference(5);
        // The direction itself transports onto the velocity.
        let w = HTangent::new(t0.base().clone(), e(5, 1)).unwrap();
        let got = parallel_transport(&t0, 1.3, &w).unwrap();
        let oracle = transport_ode(&t0, 1.3, w.vec(), 2000);
        assert!((got.vec() - &oracle).amax() < 1e-10);
        let expect = e(5, 0) * 1.3f64.sinh() + e(5, 1) * 1.3f64.cosh();
        assert!((got.vec() - expect).amax() < 1e-10);

        // A vector orthogonal to the geodesic plane is unchanged.
        let w = HTangent::new(t0.base().clone(), e(5, 3)).unwrap();
        let got = parallel_transport(&t0, 2.0, &w).unwrap();
        assert!((got.vec() - e(5, 3)).amax() < 1e-12);
        let oracle = transport_ode(&t0, 2.0, w.vec(), 2000);
        assert!((got.vec() - oracle).amax() < 1e-9);

        // Mixed vector, generic time.
        let mixed = HTangent::new(
            t0.base().clone(),
            e(5, 1) * 0.6 + e(5, 2) * (-0.3) + e(5, 4) * 1.1,
        )
        .unwrap();
        let got = parallel_transport(&t0, -0.9, &mixed).unwrap();
        let oracle = transport_ode(&t0, -0.9, mixed.vec(), 2000);
        assert!((got.vec() - oracle).amax() < 1e-10);
    }

    #[test]
    fn transport_is_isometric_and_identity_at_zero() {
        let t0 = reference(4);
        let w1 = HTangent::new(t0.base().clone(), e(4, 1) * 0.2 + e(4, 2) * 0.5).unwrap();
        let w2 = HTangent::new(t0.base().clone(), e(4, 3) * 1.5 - e(4, 1) * 0.7).unwrap();
        let before = inner_unchecked(w1.vec(), w2.vec());
        let a = parallel_transport(&t0, 1.7, &w1).unwrap();
        let b = parallel_transport(&t0, 1.7, &w2).unwrap();
        let after = inner_unchecked(a.vec(), b.vec());
        assert!((before - after).abs() < 1e-10);

        let id = parallel_transport(&t0, 0.0, &w1).unwrap();
        assert!((id.vec() - w1.vec()).amax() < 1e-14);
    }

    fn sample_geodesic(t0: &UnitTangent, h: f64, len: usize) -> (Vec<HPoint>, Vec<UnitTangent>) {
        let mut pts = Vec::new();
        let mut tans = Vec::new();
        for i in 0..len {
            let t = (i as f64 - (len as f64 - 1.0) / 2.0) * h;
            let g = geodesic_point(t0, t).unwrap();
            pts.push(g.base().clone());
            tans.push(g);
        }
        (pts, tans)
    }

    #[test]
    fn covariant_derivative_of_parallel_and_velocity_fields_vanishes() {
        let t0 = reference(4);
        let h = 1e-3;
        let (pts, tans) = sample_geodesic(&t0, h, 7);

        // Velocity field of a geodesic.
        let field: Vec<HTangent> = tans.iter().map(|u| u.as_tangent().clone()).collect();
        let d = covariant_derivative(&pts, &field, h, 3).unwrap();
        assert!(d.norm() < 1e-6);

        // Parallel field.
        let w = HTangent::new(t0.base().clone(), e(4, 2) * 0.8 + e(4, 1) * 0.1).unwrap();
        let field: Vec<HTangent> = (0..7)
            .map(|i| {
                let t = (i as f64 - 3.0) * h;
                parallel_transport(&t0, t, &w).unwrap()
            })
            .collect();
        let d = covariant_derivative(&pts, &field, h, 3).unwrap();
        assert!(d.norm() < 1e-6);
    }

    #[test]
    fn covariant_derivative_of_rotating_frame() {
        let t0 = reference(4);
        let h = 1e-3;
        let (pts, _) = sample_geodesic(&t0, h, 7);
        let e1 = HTangent::new(t0.base().clone(), e(4, 2)).unwrap();
        let e2 = HTangent::new(t0.base().clone(), e(4, 3)).unwrap();
        let field: Vec<HTangent> = (0..7)
            .map(|i| {
                let t = (i as f64 - 3.0) * h;
                let a = parallel_transport(&t0, t, &e1).unwrap();
                let b = parallel_transport(&t0, t, &e2).unwrap();
                HTangent::new(a.base().clone(), a.vec() * t.cos() + b.vec() * t.sin()).unwrap()
            })
            .collect();
        let d = covariant_derivative(&pts, &field, h, 3).unwrap();
        // At t = 0 the derivative is −sin(0)·E₁ + cos(0)·E₂ = E₂.
        assert!((d.vec() - e(4, 3)).amax() < 1e-6);
        assert!(covariant_derivative(&pts, &field, h, 0).is_err());
    }

    #[test]
    fn jacobi_closed_form() {
        let t0 = reference(4);
        let j0 = HTangent::new(t0.base().clone(), e(4, 2)).unwrap();
        let j1 = HTangent::zero(t0.base().clone());

        let (j, jp) = jacobi_eval(&t0, &j0, &j1, 0.0).unwrap();
        assert!((j.vec() - j0.vec()).amax() < 1e-15);
        assert!(jp.norm() < 1e-15);

        let t = 1.4;
        let (j, _) = jacobi_eval(&t0, &j0, &j1, t).unwrap();
        assert!((j.vec() - e(4, 2) * t.cosh()).amax() < 1e-12);
    }

    // Finite differences of the explicit geodesic variation
    // γ_ε(s) = exp(ε x_h) exp(ε y_v) γ_o(s), whose Jacobi data is (x̃, −ỹ).
    #[test]
    fn jacobi_matches_variation_oracle() {
        let n = 2;
        let dim = n + 2;
        let t0 = reference(dim);
        let x = DVector::from_vec(vec![0.7, -0.2]);
        let y = DVector::from_vec(vec![0.4, 1.1]);
        let xh = AlgebraElement::horizontal(&x);
        let yv = AlgebraElement::vertical(&y);

        let eps = 1e-4;
        let variation = |epsv: f64, s: f64| {
            let g = mat_exp(&xh, epsv).unwrap() * mat_exp(&yv, epsv).unwrap();
            let gamma = geodesic_point(&t0, s).unwrap();
            &g * gamma.base().coords()
        };

        let j0 = HTangent::new(t0.base().clone(), embed_spatial(&x)).unwrap();
        let j1 = HTangent::new(t0.base().clone(), -embed_spatial(&y)).unwrap();

        for &s in &[0.0, 0.6, 1.9, -1.2] {
            let fd = (variation(eps, s) - variation(-eps, s)) / (2.0 * eps);
            let (j, _) = jacobi_eval(&t0, &j0, &j1, s).unwrap();
            assert!(
                (j.vec() - &fd).amax() < 1e-5,
                "variation mismatch at s = {s}: {:?} vs {:?}",
                j.vec(),
                fd
            );
        }
    }

    #[test]
    fn jacobi_energy_is_constant() {
        let t0 = reference(5);
        let j0 = HTangent::new(t0.base().clone(), e(5, 2) * 0.8 - e(5, 4) * 0.4).unwrap();
        let j1 = HTangent::new(t0.base().clone(), e(5, 3) * 1.2 + e(5, 2) * 0.3).unwrap();
        let q0 = j0.norm().powi(2) - j1.norm().powi(2);
        for &t in &[0.5, 1.0, 2.5, -3.0] {
            let (j, jp) = jacobi_eval(&t0, &j0, &j1, t).unwrap();
            let q = j.norm().powi(2) - jp.norm().powi(2);
            assert!((q - q0).abs() < 1e-10);
        }
    }

    #[test]
    fn endpoints_examples_and_limit_oracle() {
        let t0 = reference(4);
        let (m, p) = ideal_endpoints(&t0);
        assert!((m.dir() + e(3, 0)).amax() < 1e-15);
        assert!((p.dir() - e(3, 0)).amax() < 1e-15);

        let up = UnitTangent::new(HPoint::origin(4), e(4, 2)).unwrap();
        let (m, p) = ideal_endpoints(&up);
        assert!((m.dir() + e(3, 1)).amax() < 1e-15);
        assert!((p.dir() - e(3, 1)).amax() < 1e-15);

        // Direct limit: γ(T)/γ(T)₀ − e₀ at T = 20.
        let tilt = UnitTangent::new(
            HPoint::new(e(4, 0) * 0.5f64.cosh() + e(4, 3) * 0.5f64.sinh()).unwrap(),
            e(4, 1),
        )
        .unwrap();
        let (m, p) = ideal_endpoints(&tilt);
        for (sign, z) in [(1.0, &p), (-1.0, &m)] {
            let g = geodesic_point(&tilt, sign * 20.0).unwrap();
            let c = g.base().coords();
            let lim = DVector::from_fn(3, |i, _| c[1 + i] / c[0]);
            assert!((lim - z.dir()).amax() < 1e-8);
        }
        assert!(m.chordal_distance(&p) > 1e-12);
    }

    #[test]
    fn log_map_round_trip() {
        let p = HPoint::origin(4);
        let q = HPoint::new(e(4, 0) * 1f64.cosh() + e(4, 1) * 1f64.sinh()).unwrap();
        let w = log_map(&p, &q);
        assert!((w.vec() - e(4, 1)).amax() < 1e-14);

        assert!(log_map(&p, &p).norm() < 1e-15);

        let r = HPoint::new(
            e(4, 0) * (1.0f64 + 0.09 + 1.21).sqrt() + e(4, 2) * 0.3 + e(4, 3) * 1.1,
        )
        .unwrap();
        let w = log_map(&p, &r);
        let back = exp_map(&p, &w).unwrap();
        assert!(back.approx_eq(&r, 1e-9));
        assert!((w.norm() - distance(&p, &r)).abs() < 1e-12);
    }
}
