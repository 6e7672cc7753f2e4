//! The space `𝒢` of oriented geodesics of `H^{n+1}` as `G/G_o`.
//!
//! An oriented geodesic is stored canonically as its ordered pair of ideal
//! endpoints `(γ(−∞), γ(+∞))`; point-and-direction and minitwistor forms are
//! derived views. A tangent vector to `𝒢` at a geodesic is stored as Jacobi
//! data: a marked unit tangent on the geodesic together with
//! `(J(0), J′(0))` of the orthogonal Jacobi field it corresponds to.
//!
//! # Invariant metrics
//!
//! At the base geodesic, `T_{c_o}𝒢 ≅ 𝔥 = {x_h + y_v}` and the invariant
//! metrics have closed-form norms `‖x_h + y_v‖₁ = |x|² − |y|²` (every `n`)
//! and `‖x_h + y_v‖₀ = ⟨ix, y⟩` (`n = 2`, with `i(a,b) = (−b,a)`). On Jacobi
//! data these become `‖J‖₁ = |J(0)|² − |J′(0)|²` and
//! `‖J‖₀ = ω(γ̇(0), J(0), J′(0))`, where `ω` is the chosen orientation form
//! of `T_pH³` (see [`norm_g0`]).
//!
//! # The `𝔥` ↔ Jacobi dictionary
//!
//! The geodesic `s ↦ exp(s(x_h + y_v))·c_o` has Jacobi data
//! `(J(0), J′(0)) = (x̃, −ỹ)` — note the sign on `ỹ`, which is what direct
//! differentiation of the variation `exp(t·y_v)∘γ_o` produces (the velocity
//! field of the rotation generated by `y_v` along `γ_o` is `−sinh(s)·ỹ`).
//! [`orbit_velocity`] and [`h_coordinates`] implement the two directions.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hyperbolic::{
    distance, exp_map, geodesic_point, ideal_endpoints, jacobi_eval, log_map,
    parallel_transport, project_tangent, HPoint, HTangent, IdealPoint, UnitTangent,
};
use crate::minkowski::{
    self, algebra_split, embed_spatial, inner_unchecked, is_in_group, killing_b, lorentz_frame,
    lorentz_inverse, mat_exp, AlgebraElement, LorentzVector,
};
use crate::tol;

/// Oriented geodesic of `H^{n+1}`: an ordered pair of distinct ideal points.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedGeodesic {
    minus: IdealPoint,
    plus: IdealPoint,
}

impl OrientedGeodesic {
    pub fn new(minus: IdealPoint, plus: IdealPoint) -> Result<Self> {
        if minus.dim() != plus.dim() {
            return Err(Error::Dimension { expected: minus.dim(), got: plus.dim() });
        }
        if minus.chordal_distance(&plus) <= tol::PAIR_DISTINCT {
            return Err(Error::domain("ideal endpoints must be distinct"));
        }
        Ok(OrientedGeodesic { minus, plus })
    }

    /// The reference geodesic `c_o` through `e₀` with direction `e₁`,
    /// endpoints `(−e₁, e₁)` on `Sⁿ ⊂ ℝ^{n+1}`.
    pub fn reference(n: usize) -> Self {
        let mut d = DVector::zeros(n + 1);
        d[0] = 1.0;
        OrientedGeodesic {
            minus: IdealPoint::new(-d.clone()).expect("unit"),
            plus: IdealPoint::new(d).expect("unit"),
        }
    }

    pub fn minus(&self) -> &IdealPoint {
        &self.minus
    }

    pub fn plus(&self) -> &IdealPoint {
        &self.plus
    }

    /// Same geodesic with the opposite orientation.
    pub fn reversed(&self) -> Self {
        OrientedGeodesic { minus: self.plus.clone(), plus: self.minus.clone() }
    }

    /// Chordal distance between the endpoint pairs; zero iff equal geodesics.
    pub fn pair_distance(&self, other: &OrientedGeodesic) -> f64 {
        self.minus.chordal_distance(&other.minus) + self.plus.chordal_distance(&other.plus)
    }
}

/// Tangent vector to `𝒢` at a geodesic, stored as Jacobi data
/// `(J(0), J′(0)) = (j0, j1)` at a marked unit tangent on the geodesic.
/// Both data vectors are tangent at the marked point and orthogonal to the
/// direction.
#[derive(Debug, Clone)]
pub struct GTangent {
    base: UnitTangent,
    j0: HTangent,
    j1: HTangent,
}

impl GTangent {
    pub fn new(base: UnitTangent, j0: HTangent, j1: HTangent) -> Result<Self> {
        let mut data = Vec::with_capacity(2);
        for j in [j0, j1] {
            if !j.base().approx_eq(base.base(), 1e-8) {
                return Err(Error::domain("Jacobi data must be based at the marked point"));
            }
            let along = inner_unchecked(j.vec(), base.vec());
            if along.abs() > 1e-8 * (1.0 + j.norm()) {
                return Err(Error::domain(
                    "Jacobi data must be orthogonal to the geodesic direction",
                ));
            }
            let vec = j.vec() - base.vec() * along;
            data.push(HTangent::new(base.base().clone(), vec)?);
        }
        let j1 = data.pop().expect("two entries");
        let j0 = data.pop().expect("two entries");
        Ok(GTangent { base, j0, j1 })
    }

    pub fn zero(base: UnitTangent) -> Self {
        let p = base.base().clone();
        GTangent { base, j0: HTangent::zero(p.clone()), j1: HTangent::zero(p) }
    }

    pub fn base(&self) -> &UnitTangent {
        &self.base
    }

    pub fn j0(&self) -> &HTangent {
        &self.j0
    }

    pub fn j1(&self) -> &HTangent {
        &self.j1
    }

    /// The geodesic this vector is tangent at.
    pub fn geodesic(&self) -> OrientedGeodesic {
        from_unit_tangent(&self.base)
    }

    /// Euclidean size of the data, used for relative tolerances.
    pub fn data_norm(&self) -> f64 {
        (self.j0.norm().powi(2) + self.j1.norm().powi(2)).sqrt()
    }

    /// Componentwise distance to another tangent at the same marked point.
    pub fn data_distance(&self, other: &GTangent) -> f64 {
        ((self.j0.vec() - other.j0.vec()).norm_squared()
            + (self.j1.vec() - other.j1.vec()).norm_squared())
        .sqrt()
    }

    /// The same tangent vector of `𝒢` expressed for the reversed orientation
    /// (`t ↦ −t` reparametrization: `v ↦ −v`, `J0 ↦ J0`, `J1 ↦ −J1`).
    pub fn orientation_reversed(&self) -> Self {
        GTangent {
            base: self.base.reversed(),
            j0: self.j0.clone(),
            j1: HTangent::new(self.base.base().clone(), -self.j1.vec().clone())
                .expect("negated data stays tangent"),
        }
    }
}

/// Causal class of a tangent vector or curve sample under a chosen metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalType {
    Spacelike,
    Timelike,
    /// Within the tolerance band of the trichotomy.
    Null,
}

impl CausalType {
    pub fn as_str(&self) -> &'static str {
        match self {
            CausalType::Spacelike => "spacelike",
            CausalType::Timelike => "timelike",
            CausalType::Null => "null",
        }
    }

    /// Classification by sign with a band: `|value| ≤ band·scale` is null.
    pub fn from_value(value: f64, band: f64, scale: f64) -> CausalType {
        if value.abs() <= band * scale {
            CausalType::Null
        } else if value > 0.0 {
            CausalType::Spacelike
        } else {
            CausalType::Timelike
        }
    }
}

/// Choice of invariant metric; `G0` and `Combo` exist only for `n = 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricChoice {
    G1,
    G0,
    Combo { lambda: f64, mu: f64 },
}

impl MetricChoice {
    pub fn validate(&self, n: usize) -> Result<()> {
        let config = crate::config::SpaceConfig::new(n)?;
        match self {
            MetricChoice::G1 => Ok(()),
            MetricChoice::G0 => config.require_g0(),
            MetricChoice::Combo { lambda, mu } => {
                config.require_g0()?;
                if *lambda == 0.0 && *mu == 0.0 {
                    return Err(Error::domain("(λ, μ) must not both vanish"));
                }
                Ok(())
            }
        }
    }
}

/// The projection `T¹H → 𝒢`: the oriented geodesic through a unit tangent.
pub fn from_unit_tangent(t0: &UnitTangent) -> OrientedGeodesic {
    let (minus, plus) = ideal_endpoints(t0);
    OrientedGeodesic { minus, plus }
}

/// Canonical inverse of the endpoint map: the unit tangent of `geo` at the
/// point of the geodesic closest to `e₀`, in closed form from the null
/// vectors `u = e₀ + minus`, `w = e₀ + plus`:
/// `(γ(0), γ̇(0)) = ((u+w)/|q−p|, (w−u)/|q−p|)`.
pub fn base_tangent(geo: &OrientedGeodesic) -> Result<UnitTangent> {
    let u = geo.minus.null_vector();
    let w = geo.plus.null_vector();
    let gap = (geo.plus.dir() - geo.minus.dir()).norm();
    if gap <= tol::PAIR_DISTINCT {
        return Err(Error::domain("degenerate ideal pair"));
    }
    let p = (&u + &w) / gap;
    let v = (&w - &u) / gap;
    let base = HPoint::new(p)?;
    UnitTangent::new(base, v)
}

/// Minitwistor chart `F : TSⁿ → 𝒢`: the geodesic through `Exp_{e₀}(x)` whose
/// direction is the parallel transport of `v` along the radial geodesic
/// `t ↦ Exp_{e₀}(tx)`.
///
/// `v` (unit) and `x` are given in `T_{e₀}H ≅ ℝ^{n+1}`; they must be
/// orthogonal. Since `v ⟂ x`, the transport leaves `v` unchanged in ambient
/// coordinates, so the chart is closed-form.
pub fn minitwistor_f(v: &DVector<f64>, x: &DVector<f64>) -> Result<OrientedGeodesic> {
    if v.len() != x.len() {
        return Err(Error::Dimension { expected: v.len(), got: x.len() });
    }
    if (v.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::domain("direction must be a unit vector"));
    }
    if v.dot(x).abs() > 1e-9 * x.norm().max(1.0) {
        return Err(Error::domain("⟨v, x⟩ = 0 is required"));
    }
    let dim = v.len() + 1;
    let origin = HPoint::origin(dim);
    let lift = |s: &DVector<f64>| {
        let mut a = LorentzVector::zeros(dim);
        for i in 0..s.len() {
            a[1 + i] = s[i];
        }
        a
    };
    let p = exp_map(&origin, &HTangent::new(origin.clone(), lift(x))?)?;
    let dir = project_tangent(&p, &lift(v));
    let n = inner_unchecked(&dir, &dir).sqrt();
    Ok(from_unit_tangent(&UnitTangent::new(p, dir / n)?))
}

/// Inverse minitwistor chart: the foot of the perpendicular from `e₀`.
///
/// The critical point of `t ↦ ⟨e₀, γ(t)⟩` along the geodesic is located by a
/// Newton solve (the canonical lift of [`base_tangent`] already sits at the
/// foot, so the iteration is a polish step), then `x = log_map(e₀, γ(t*))`
/// and `v` is the direction transported back to `e₀`.
pub fn minitwistor_f_inv(geo: &OrientedGeodesic) -> Result<(DVector<f64>, DVector<f64>)> {
    let t0 = base_tangent(geo)?;
    let p0 = t0.base().coords()[0];
    let v0 = t0.vec()[0];

    // d/dt γ(t)₀ = sinh(t)·p₀ + cosh(t)·v₀; monotone derivative since p₀ > |v₀|.
    let mut t_star = 0.0f64;
    let mut converged = false;
    for _ in 0..60 {
        let g = t_star.sinh() * p0 + t_star.cosh() * v0;
        let dg = t_star.cosh() * p0 + t_star.sinh() * v0;
        let step = g / dg;
        t_star -= step;
        if step.abs() < 1e-14 * (1.0 + t_star.abs()) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numeric("foot-of-perpendicular solve did not converge".into()));
    }

    let foot = geodesic_point(&t0, t_star)?;
    let origin = HPoint::origin(t0.dim());
    let x_tangent = log_map(&origin, foot.base());

    let dir_back = if distance(&origin, foot.base()) < 1e-12 {
        foot.as_tangent().clone()
    } else {
        let d = distance(foot.base(), &origin);
        let back = log_map(foot.base(), &origin);
        let radial = UnitTangent::new(foot.base().clone(), back.vec() / back.norm())?;
        parallel_transport(&radial, d, foot.as_tangent())?
    };

    let spatial = |w: &HTangent| DVector::from_fn(w.vec().len() - 1, |i, _| w.vec()[1 + i]);
    let mut v = spatial(&dir_back);
    let x = spatial(&x_tangent);
    // The foot direction is orthogonal to the radial one, hence so is v.
    let drift = v.dot(&x).abs();
    if drift > 1e-7 * x.norm().max(1.0) {
        return Err(Error::Numeric(format!("transported direction drifted: {drift:.3e}")));
    }
    if x.norm() > 0.0 {
        let xhat = &x / x.norm();
        v -= &xhat * v.dot(&xhat);
    }
    v /= v.norm();
    Ok((v, x))
}

/// Velocity at `s = 0` of the geodesic `s ↦ exp(s(x_h + y_v))·c_o` of `𝒢`,
/// as Jacobi data at the reference tangent: `(J(0), J′(0)) = (x̃, −ỹ)`.
pub fn orbit_velocity(x: &DVector<f64>, y: &DVector<f64>) -> Result<GTangent> {
    if x.len() != y.len() {
        return Err(Error::Dimension { expected: x.len(), got: y.len() });
    }
    let base = UnitTangent::reference(x.len() + 2);
    let j0 = HTangent::new(base.base().clone(), embed_spatial(x))?;
    let j1 = HTangent::new(base.base().clone(), -embed_spatial(y))?;
    GTangent::new(base, j0, j1)
}

/// `(x, y)` coordinates on `𝔥 ≅ T_{c_o}𝒢` of a tangent vector, obtained by
/// conjugating its marked point to the reference tangent with a Lorentz
/// frame. Well defined because the residual frame ambiguity (a spatial
/// rotation) acts identically on both data slots.
pub fn h_coordinates(gt: &GTangent) -> Result<(DVector<f64>, DVector<f64>)> {
    let g = lorentz_frame(gt.base.base().coords(), gt.base.vec())?;
    let at_ref = push_forward(&lorentz_inverse(&g), gt)?;
    let n = gt.base.dim() - 2;
    let x = DVector::from_fn(n, |i, _| at_ref.j0.vec()[2 + i]);
    let y = DVector::from_fn(n, |i, _| -at_ref.j1.vec()[2 + i]);
    Ok((x, y))
}

/// Norm of the metric `g₁`: `‖L(J)‖₁ = |J(0)|² − |J′(0)|²`. Independent of
/// the marked point chosen on the geodesic.
pub fn norm_g1(gt: &GTangent) -> f64 {
    gt.j0.norm().powi(2) - gt.j1.norm().powi(2)
}

/// Orientation form of `T_pH³` used by `g₀` and the orientation classifier:
/// `ω_p(a,b,c) = −det[p a b c]`.
///
/// With this choice `‖x_h + y_v‖₀ = ⟨ix, y⟩` for `i(a,b) = (−b,a)` under the
/// dictionary `(J(0), J′(0)) = (x̃, −ỹ)`, and "positively oriented
/// `{β̇, Dα̇, α̇}`" coincides with "spacelike". The opposite orientation
/// flips every `g₀` sign and both causal labels together.
pub fn orientation_form(p: &HPoint, a: &LorentzVector, b: &LorentzVector, c: &LorentzVector) -> f64 {
    let m = DMatrix::from_columns(&[p.coords().clone(), a.clone(), b.clone(), c.clone()]);
    -m.determinant()
}

/// Cross product on `T_pH³` determined by `⟨a × b, c⟩ = ω_p(a, b, c)`.
pub fn cross_tangent(p: &HPoint, a: &LorentzVector, b: &LorentzVector) -> Result<LorentzVector> {
    if p.dim() != 4 {
        return Err(Error::Feature { required: 2, actual: p.dim() - 2 });
    }
    let dim = 4;
    let mut d = LorentzVector::zeros(dim);
    for mu in 0..dim {
        let mut e = LorentzVector::zeros(dim);
        e[mu] = 1.0;
        d[mu] = -orientation_form(p, a, b, &e);
    }
    // ⟨w, c⟩_L = ω(a,b,c) = −Σ d_μ c_μ, so w = −η d.
    d[0] = -d[0];
    Ok(-d)
}

/// Norm of the metric `g₀` on `𝒢₃`: `‖L(J)‖₀ = ω(γ̇(0), J(0), J′(0))`.
///
/// Requires `n = 2`. Base-point independent along the geodesic.
pub fn norm_g0(gt: &GTangent) -> Result<f64> {
    if gt.base.dim() != 4 {
        return Err(Error::Feature { required: 2, actual: gt.base.dim() - 2 });
    }
    let w = cross_tangent(gt.base.base(), gt.base.vec(), gt.j0.vec())?;
    Ok(inner_unchecked(&w, gt.j1.vec()))
}

/// `λ·g₀ + μ·g₁` norm (`n = 2`, `(λ,μ) ≠ (0,0)`).
pub fn norm_combo(gt: &GTangent, lambda: f64, mu: f64) -> Result<f64> {
    if lambda == 0.0 && mu == 0.0 {
        return Err(Error::domain("(λ, μ) must not both vanish"));
    }
    Ok(lambda * norm_g0(gt)? + mu * norm_g1(gt))
}

/// Norm under a [`MetricChoice`].
pub fn norm(gt: &GTangent, metric: MetricChoice) -> Result<f64> {
    match metric {
        MetricChoice::G1 => Ok(norm_g1(gt)),
        MetricChoice::G0 => norm_g0(gt),
        MetricChoice::Combo { lambda, mu } => norm_combo(gt, lambda, mu),
    }
}

/// Action of `g ∈ G` on tangent vectors of `𝒢`: isometries map Jacobi
/// fields to Jacobi fields, so all four stored vectors map by `g`.
pub fn push_forward(g: &DMatrix<f64>, gt: &GTangent) -> Result<GTangent> {
    if !is_in_group(g, tol::GROUP_MEMBERSHIP) {
        return Err(Error::domain("matrix is not in the identity component of O(1,n+1)"));
    }
    let p = HPoint::new(g * gt.base.base().coords())?;
    let base = UnitTangent::new(p.clone(), g * gt.base.vec())?;
    let j0 = HTangent::new(p.clone(), g * gt.j0.vec())?;
    let j1 = HTangent::new(p, g * gt.j1.vec())?;
    GTangent::new(base, j0, j1)
}

/// Slides the marked point of `gt` along its geodesic by parameter `t`,
/// propagating the data with the Jacobi flow. Represents the same tangent
/// vector of `𝒢`.
pub fn slide_along(gt: &GTangent, t: f64) -> Result<GTangent> {
    let new_base = geodesic_point(&gt.base, t)?;
    let (j, jp) = jacobi_eval(&gt.base, &gt.j0, &gt.j1, t)?;
    GTangent::new(new_base, j, jp)
}

/// The geodesic of `𝒢` through `c_o` with initial velocity `X ∈ 𝔥`,
/// evaluated at parameter `s`: `exp_G(sX)·c_o`.
pub fn geodesic_in_g(x: &AlgebraElement, s: f64) -> Result<OrientedGeodesic> {
    let split = algebra_split(x);
    if split.go_part.norm() > 1e-10 * x.norm().max(1.0) {
        return Err(Error::domain("velocity must lie in 𝔥 (vanishing 𝔤₀ part)"));
    }
    let g = mat_exp(x, s)?;
    let dim = x.dim();
    let p = HPoint::new(g.column(0).clone_owned())?;
    let mut e1 = LorentzVector::zeros(dim);
    e1[1] = 1.0;
    let t0 = UnitTangent::new(p, &g * e1)?;
    Ok(from_unit_tangent(&t0))
}

/// Periodicity verdict for a geodesic of `𝒢`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Periodicity {
    Periodic { period: f64 },
    NonPeriodic,
}

/// Classifies the geodesic of `𝒢` with initial velocity `X = x_h + y_v`:
/// periodic iff `x = λy` with `|λ| < 1` (strictly; a band around the
/// frontier `|λ| = 1` counts as non-periodic).
///
/// The period `2π/(√(1−λ²)·|y|)` comes from orthogonalizing `(x, y)` with
/// the `Ad(e^{tZ})` flow (`tanh t = −λ` sends `x` to zero and rescales `y`
/// by `√(1−λ²)`), which conjugates the orbit to a pure rotation.
pub fn classify_periodic(x_elem: &AlgebraElement) -> Result<Periodicity> {
    let split = algebra_split(x_elem);
    if split.go_part.norm() > 1e-10 * x_elem.norm().max(1.0) {
        return Err(Error::domain("velocity must lie in 𝔥"));
    }
    let (x, y) = (&split.x, &split.y);
    let scale = x.norm().max(y.norm());
    if scale == 0.0 {
        return Err(Error::domain("velocity must be nonzero"));
    }
    let ynorm = y.norm();
    if ynorm <= 1e-12 * scale {
        return Ok(Periodicity::NonPeriodic);
    }
    let lambda = x.dot(y) / (ynorm * ynorm);
    let residual = (x - y * lambda).norm();
    if residual > 1e-9 * scale {
        return Ok(Periodicity::NonPeriodic);
    }
    if lambda.abs() >= 1.0 - tol::PERIODIC_FRONTIER_BAND {
        return Ok(Periodicity::NonPeriodic);
    }
    let period = 2.0 * std::f64::consts::PI / ((1.0 - lambda * lambda).sqrt() * ynorm);
    Ok(Periodicity::Periodic { period })
}

/// Sectional curvature of the plane `span{X, Y} ⊂ 𝔥` at `c_o` with respect
/// to `g₁`, from the symmetric-space bracket formula
/// `K = B(−[[X,Y],Y], X) / (B(X,X)B(Y,Y) − B(X,Y)²)`.
///
/// The sign convention makes the formula return `−1` on hyperbolic space
/// itself (boost planes of `G/SO(n+1)`), hence `+1` on the round sphere.
pub fn curvature_at_base(x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    for e in [x, y] {
        let s = algebra_split(e);
        if s.go_part.norm() > 1e-10 * e.norm().max(1.0) {
            return Err(Error::domain("curvature plane must lie in 𝔥"));
        }
    }
    let bxx = killing_b(x, x)?;
    let byy = killing_b(y, y)?;
    let bxy = killing_b(x, y)?;
    let gram = bxx * byy - bxy * bxy;
    let scale = x.norm().powi(2) * y.norm().powi(2);
    if gram.abs() <= tol::CURVATURE_PLANE_GUARD * scale.max(1e-300) {
        return Err(Error::domain("plane is degenerate for g₁"));
    }
    let bb = minkowski::bracket(&minkowski::bracket(x, y)?, y)?;
    let num = -killing_b(&bb, x)?;
    Ok(num / gram)
}

/// Gram matrix of the chosen metric on `𝔥` in the basis of `x`-units
/// followed by `y`-units (size `2n × 2n`).
pub fn gram_at_base(n: usize, metric: MetricChoice) -> Result<DMatrix<f64>> {
    metric.validate(n)?;
    match metric {
        MetricChoice::G1 => {
            let basis = h_basis(n);
            let mut gram = DMatrix::zeros(2 * n, 2 * n);
            for i in 0..2 * n {
                for j in 0..2 * n {
                    gram[(i, j)] = killing_b(&basis[i], &basis[j])?;
                }
            }
            Ok(gram)
        }
        MetricChoice::G0 => {
            let q = |x: &DVector<f64>, y: &DVector<f64>| -> Result<f64> {
                norm_g0(&orbit_velocity(x, y)?)
            };
            let coords = |i: usize| -> (DVector<f64>, DVector<f64>) {
                let mut x = DVector::zeros(n);
                let mut y = DVector::zeros(n);
                if i < n {
                    x[i] = 1.0;
                } else {
                    y[i - n] = 1.0;
                }
                (x, y)
            };
            let mut gram = DMatrix::zeros(2 * n, 2 * n);
            for i in 0..2 * n {
                for j in 0..2 * n {
                    let (xi, yi) = coords(i);
                    let (xj, yj) = coords(j);
                    let plus = q(&(&xi + &xj), &(&yi + &yj))?;
                    let minus = q(&(&xi - &xj), &(&yi - &yj))?;
                    gram[(i, j)] = 0.25 * (plus - minus);
                }
            }
            Ok(gram)
        }
        MetricChoice::Combo { lambda, mu } => {
            let g0 = gram_at_base(n, MetricChoice::G0)?;
            let g1 = gram_at_base(n, MetricChoice::G1)?;
            Ok(g0 * lambda + g1 * mu)
        }
    }
}

/// Counts `(positive, negative)` eigenvalues of a symmetric matrix,
/// ignoring magnitudes below `threshold` times the largest.
pub fn signature(gram: &DMatrix<f64>, threshold: f64) -> (usize, usize) {
    let eig = nalgebra::SymmetricEigen::new(gram.clone());
    let max = eig.eigenvalues.amax().max(1e-300);
    let mut pos = 0;
    let mut neg = 0;
    for &v in eig.eigenvalues.iter() {
        if v > threshold * max {
            pos += 1;
        } else if v < -threshold * max {
            neg += 1;
        }
    }
    (pos, neg)
}

/// Basis `x_h(e₁), …, x_h(eₙ), y_v(e₁), …, y_v(eₙ)` of `𝔥`.
pub fn h_basis(n: usize) -> Vec<AlgebraElement> {
    let mut basis = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut x = DVector::zeros(n);
        x[i] = 1.0;
        basis.push(AlgebraElement::horizontal(&x));
    }
    for i in 0..n {
        let mut y = DVector::zeros(n);
        y[i] = 1.0;
        basis.push(AlgebraElement::vertical(&y));
    }
    basis
}

/// Numerically determines the dimension of the space of `Ad(G_o)`-invariant
/// symmetric bilinear forms on `𝔥` (the space of invariant metrics on `𝒢`,
/// degenerate forms included) by stacking invariance constraints from
/// random isotropy elements and counting small singular values.
pub fn invariant_form_space_dimension(
    n: usize,
    constraints: usize,
    seed: u64,
    sv_threshold: f64,
) -> Result<usize> {
    let nh = 2 * n;
    let unknowns = nh * (nh + 1) / 2;
    let idx = |k: usize, l: usize| -> usize {
        // Index of the unordered pair (k ≤ l) in row-major upper-triangle order.
        k * nh - k * (k + 1) / 2 + l
    };

    let mut rng = crate::sampling::rng_for(seed, "invariant-form-dimension");
    let basis = h_basis(n);
    let mut rows: Vec<DVector<f64>> = Vec::new();

    for _ in 0..constraints {
        let g = crate::sampling::random_isotropy_element(&mut rng, n, 1.0);
        let ginv = lorentz_inverse(&g);
        // Matrix of Ad(g) restricted to 𝔥 in the (x, y) basis.
        let mut m = DMatrix::zeros(nh, nh);
        for (j, b) in basis.iter().enumerate() {
            let conj = AlgebraElement::new(&g * b.matrix() * &ginv)
                .map_err(|e| Error::Numeric(format!("conjugation left the algebra: {e}")))?;
            let s = algebra_split(&conj);
            if s.go_part.norm() > 1e-9 {
                return Err(Error::Numeric("Ad(G_o) did not preserve 𝔥".into()));
            }
            for i in 0..n {
                m[(i, j)] = s.x[i];
                m[(n + i, j)] = s.y[i];
            }
        }
        // (MᵀSM − S)_{ij} = 0 for i ≤ j, linear in the entries of S.
        for i in 0..nh {
            for j in i..nh {
                let mut row = DVector::zeros(unknowns);
                for k in 0..nh {
                    for l in k..nh {
                        let mut coef = m[(k, i)] * m[(l, j)];
                        if k != l {
                            coef += m[(l, i)] * m[(k, j)];
                        }
                        row[idx(k, l)] += coef;
                    }
                }
                row[idx(i, j)] -= 1.0;
                rows.push(row);
            }
        }
    }

    let mut a = DMatrix::zeros(rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        a.set_row(r, &row.transpose());
    }
    let svd = a.svd(false, false);
    let smax = svd.singular_values.amax().max(1e-300);
    let rank = svd.singular_values.iter().filter(|&&s| s > sv_threshold * smax).count();
    Ok(unknowns - rank)
}
