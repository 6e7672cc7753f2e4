//! Curves in the space of oriented geodesics.
//!
//! A curve enters as a uniformly sampled lift `t ↦ v(t) ∈ T¹H` of `c(t)`.
//! A *standard presentation* reparametrizes the representing geodesics,
//! `φ(s,t) = γ_{v(t)}(s + f(t))`, so that the base curve `β(t) = φ(0,t)`
//! is orthogonal to the directions `α̇_t(0)`. The offset solves
//!
//! ```text
//! f′(t) = −⟨ψ_t(f(t),t), ψ_s(f(t),t)⟩ / ‖ψ_s(f(t),t)‖²,
//! ```
//!
//! integrated here with fixed-step RK4 (10 substeps per grid cell), with
//! `ψ_t` obtained from the closed-form geodesic `cosh s·p(t) + sinh s·v(t)`
//! and central differences of the lift samples.
//!
//! From the presentation, `(β̇, Dα̇/dt, α̇)` at each interior sample gives the
//! Jacobi data of the curve velocity (`J(0) = β̇`, `J′(0) = Dα̇/dt`), which
//! the causal classifiers compare against the displacement/variation rates
//! and against the orientation of the frame in `H³`.

use nalgebra::DVector;

use crate::boundary::{BoundaryPair, BoundaryTangent};
use crate::error::{Error, Result};
use crate::hyperbolic::{
    covariant_derivative, geodesic_point, project_tangent, HPoint, HTangent, UnitTangent,
};
use crate::linespace::{from_unit_tangent, orientation_form, CausalType, GTangent};
use crate::minkowski::inner_unchecked;

/// Uniformly sampled lift of a curve in `𝒢`.
#[derive(Debug, Clone)]
pub struct CurveInG {
    h: f64,
    t_start: f64,
    samples: Vec<UnitTangent>,
}

impl CurveInG {
    pub fn new(h: f64, t_start: f64, samples: Vec<UnitTangent>) -> Result<Self> {
        if h <= 0.0 || !h.is_finite() {
            return Err(Error::domain("grid step must be positive"));
        }
        if samples.len() < 5 {
            return Err(Error::domain("a curve needs at least 5 samples"));
        }
        let dim = samples[0].dim();
        for s in &samples {
            if s.dim() != dim {
                return Err(Error::Dimension { expected: dim, got: s.dim() });
            }
        }
        Ok(CurveInG { h, t_start, samples })
    }

    /// Convenience constructor from endpoint-pair samples, lifted through
    /// the canonical inverse of the endpoint map.
    pub fn from_pairs(h: f64, t_start: f64, pairs: &[BoundaryPair]) -> Result<Self> {
        let samples = pairs
            .iter()
            .map(|bp| crate::linespace::base_tangent(&bp.to_geodesic()?))
            .collect::<Result<Vec<_>>>()?;
        CurveInG::new(h, t_start, samples)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn sample(&self, i: usize) -> &UnitTangent {
        &self.samples[i]
    }

    pub fn t_at(&self, i: usize) -> f64 {
        self.t_start + self.h * i as f64
    }

    pub fn dim(&self) -> usize {
        self.samples[0].dim()
    }

    /// Derivatives of the lift `(p′, v′)` at every sample: central
    /// differences inside, three-point one-sided stencils at the two ends.
    fn lift_derivatives(&self) -> (Vec<DVector<f64>>, Vec<DVector<f64>>) {
        let m = self.samples.len();
        let mut pd = Vec::with_capacity(m);
        let mut vd = Vec::with_capacity(m);
        let point = |k: usize| self.samples[k].base().coords();
        let vec = |k: usize| self.samples[k].vec();
        for i in 0..m {
            // Three-point one-sided stencils keep the ends at O(h²), which
            // the presentation residual bound needs near the boundary.
            let (dp, dv) = if i == 0 {
                (
                    (point(0) * -3.0 + point(1) * 4.0 - point(2)) / (2.0 * self.h),
                    (vec(0) * -3.0 + vec(1) * 4.0 - vec(2)) / (2.0 * self.h),
                )
            } else if i == m - 1 {
                (
                    (point(m - 1) * 3.0 - point(m - 2) * 4.0 + point(m - 3)) / (2.0 * self.h),
                    (vec(m - 1) * 3.0 - vec(m - 2) * 4.0 + vec(m - 3)) / (2.0 * self.h),
                )
            } else {
                (
                    (point(i + 1) - point(i - 1)) / (2.0 * self.h),
                    (vec(i + 1) - vec(i - 1)) / (2.0 * self.h),
                )
            };
            pd.push(dp);
            vd.push(dv);
        }
        (pd, vd)
    }
}

/// Standard presentation of a sampled curve: per-sample offsets `f(tᵢ)` and
/// the derived base curve `β` and direction field `α̇`.
#[derive(Debug, Clone)]
pub struct StandardPresentation {
    curve: CurveInG,
    base_index: usize,
    offsets: Vec<f64>,
    beta: Vec<HPoint>,
    alpha_dot: Vec<UnitTangent>,
}

impl StandardPresentation {
    pub fn curve(&self) -> &CurveInG {
        &self.curve
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn base_index(&self) -> usize {
        self.base_index
    }

    pub fn beta(&self) -> &[HPoint] {
        &self.beta
    }

    pub fn alpha_dot(&self) -> &[UnitTangent] {
        &self.alpha_dot
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    /// Residual `|⟨β̇, α̇⟩|` at an interior sample, with `β̇` by central
    /// differences: the quantity the presentation drives to zero.
    pub fn orthogonality_residual(&self, i: usize) -> Result<f64> {
        let (beta_dot, alpha, _) = presentation_data(self, i)?;
        Ok(inner_unchecked(beta_dot.vec(), alpha.vec()).abs())
    }
}

/// Builds the standard presentation of `c` through the point `p` on the
/// geodesic `c(t_o)` (given by its grid index).
///
/// The initial offset places `φ(0, t_o) = p`; `p` must lie on that geodesic
/// to within `1e−8`. The lift has unit speed, so `‖ψ_s‖² = 1` up to sample
/// noise; the quotient is still formed and guarded.
pub fn standard_presentation(
    c: &CurveInG,
    base_index: usize,
    p: &HPoint,
) -> Result<StandardPresentation> {
    if base_index >= c.len() {
        return Err(Error::domain(format!("base index {base_index} out of range")));
    }
    let anchor = c.sample(base_index);
    // γ(f₀) = p along the anchor geodesic: ⟨p, v̂⟩ = sinh f₀.
    let f0 = inner_unchecked(p.coords(), anchor.vec()).asinh();
    let on_curve = geodesic_point(anchor, f0)?;
    // Compare coordinates; the distance function has an acosh noise floor
    // of about 1e−8 near zero.
    let gap = (on_curve.base().coords() - p.coords()).amax();
    if gap > 1e-8 * p.coords().amax().max(1.0) {
        return Err(Error::domain("the anchor point does not lie on the anchor geodesic"));
    }

    let (pd, vd) = c.lift_derivatives();
    let m = c.len();

    // Linear interpolation of the lift and its sample derivatives at a grid
    // coordinate u ∈ [0, m−1].
    let interp = |u: f64| -> (DVector<f64>, DVector<f64>, DVector<f64>, DVector<f64>) {
        let clamped = u.clamp(0.0, (m - 1) as f64);
        let i0 = (clamped.floor() as usize).min(m - 2);
        let w = clamped - i0 as f64;
        let lerp = |a: &DVector<f64>, b: &DVector<f64>| a * (1.0 - w) + b * w;
        (
            lerp(c.sample(i0).base().coords(), c.sample(i0 + 1).base().coords()),
            lerp(c.sample(i0).vec(), c.sample(i0 + 1).vec()),
            lerp(&pd[i0], &pd[i0 + 1]),
            lerp(&vd[i0], &vd[i0 + 1]),
        )
    };

    let rhs = |u: f64, f: f64| -> Result<f64> {
        let (p_t, v_t, p_dot, v_dot) = interp(u);
        let (ch, sh) = (f.cosh(), f.sinh());
        let psi_s = &p_t * sh + &v_t * ch;
        let psi_t = &p_dot * ch + &v_dot * sh;
        let den = inner_unchecked(&psi_s, &psi_s);
        // Unit-speed lift: the denominator sits at 1 up to interpolation error.
        if den < 0.5 {
            return Err(Error::Numeric(format!("degenerate ψ_s norm {den:.3}")));
        }
        Ok(-inner_unchecked(&psi_t, &psi_s) / den)
    };

    const SUBSTEPS: usize = 10;
    let mut offsets = vec![0.0; m];
    offsets[base_index] = f0;

    // March the offset ODE away from the anchor in both directions.
    let mut march = |from: usize, to: usize, dir: f64| -> Result<()> {
        let mut f = offsets[from];
        let mut i = from;
        while i != to {
            let u0 = i as f64;
            let dt = dir * c.h / SUBSTEPS as f64;
            let du = dir / SUBSTEPS as f64;
            for k in 0..SUBSTEPS {
                let u = u0 + du * k as f64;
                let k1 = rhs(u, f)?;
                let k2 = rhs(u + du / 2.0, f + dt * k1 / 2.0)?;
                let k3 = rhs(u + du / 2.0, f + dt * k2 / 2.0)?;
                let k4 = rhs(u + du, f + dt * k3)?;
                f += dt * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
            }
            i = (i as isize + dir as isize) as usize;
            offsets[i] = f;
        }
        Ok(())
    };
    if base_index + 1 < m {
        march(base_index, m - 1, 1.0)?;
    }
    if base_index > 0 {
        march(base_index, 0, -1.0)?;
    }

    let mut beta = Vec::with_capacity(m);
    let mut alpha_dot = Vec::with_capacity(m);
    for (sample, &offset) in c.samples.iter().zip(&offsets) {
        let at = geodesic_point(sample, offset)?;
        beta.push(at.base().clone());
        alpha_dot.push(at);
    }

    Ok(StandardPresentation { curve: c.clone(), base_index, offsets, beta, alpha_dot })
}

/// Extracts `(β̇, α̇, Dα̇/dt)` at an interior sample: the displacement rate,
/// the direction, and the variation rate of the directions.
pub fn presentation_data(
    sp: &StandardPresentation,
    i: usize,
) -> Result<(HTangent, UnitTangent, HTangent)> {
    if i == 0 || i + 1 >= sp.len() {
        return Err(Error::domain(format!("index {i} is not interior")));
    }
    let h = sp.curve.h;
    let raw = (sp.beta[i + 1].coords() - sp.beta[i - 1].coords()) / (2.0 * h);
    let beta_dot = HTangent::new(sp.beta[i].clone(), project_tangent(&sp.beta[i], &raw))?;

    // The stencil only touches the neighbors, so hand the derivative a
    // three-sample window rather than cloning the whole field.
    let window_beta = [sp.beta[i - 1].clone(), sp.beta[i].clone(), sp.beta[i + 1].clone()];
    let window_field = [
        sp.alpha_dot[i - 1].as_tangent().clone(),
        sp.alpha_dot[i].as_tangent().clone(),
        sp.alpha_dot[i + 1].as_tangent().clone(),
    ];
    let d_alpha = covariant_derivative(&window_beta, &window_field, h, 1)?;

    Ok((beta_dot, sp.alpha_dot[i].clone(), d_alpha))
}

/// The curve velocity at an interior sample as a tangent vector of `𝒢`,
/// with Jacobi data `(J(0), J′(0)) = (β̇, Dα̇/dt)`.
///
/// The finite-difference data carries the presentation residual along `α̇`;
/// only the orthogonal component represents the velocity, so it is projected
/// out here before constructing the tangent.
pub fn velocity_gtangent(sp: &StandardPresentation, i: usize) -> Result<GTangent> {
    let (beta_dot, alpha, d_alpha) = presentation_data(sp, i)?;
    let orth = |w: &HTangent| -> Result<HTangent> {
        let along = inner_unchecked(w.vec(), alpha.vec());
        HTangent::new(w.base().clone(), w.vec() - alpha.vec() * along)
    };
    GTangent::new(alpha.clone(), orth(&beta_dot)?, orth(&d_alpha)?)
}

/// Causal class of the curve at an interior sample for the metric `g₁`:
/// spacelike/timelike when the variation rate `‖Dα̇‖` is smaller/larger than
/// the displacement rate `‖β̇‖`, null within the band.
pub fn causal_classify_g1(sp: &StandardPresentation, i: usize, band: f64) -> Result<CausalType> {
    let (beta_dot, _, d_alpha) = presentation_data(sp, i)?;
    let b = beta_dot.norm();
    let a = d_alpha.norm();
    Ok(CausalType::from_value(b - a, band, a.max(b)))
}

/// Causal class for the metric `g₀` on `𝒢₃`: the sign of the orientation
/// form `ω(β̇, Dα̇, α̇)` of `T_βH³` (same convention as `norm_g0`, with which
/// the sign agrees identically).
pub fn causal_classify_g0(sp: &StandardPresentation, i: usize, band: f64) -> Result<CausalType> {
    if sp.curve.dim() != 4 {
        return Err(Error::Feature { required: 2, actual: sp.curve.dim() - 2 });
    }
    let (beta_dot, alpha, d_alpha) = presentation_data(sp, i)?;
    let value = orientation_form(&sp.beta[i], beta_dot.vec(), d_alpha.vec(), alpha.vec());
    let scale = beta_dot.norm() * d_alpha.norm();
    Ok(CausalType::from_value(value, band, scale))
}

/// Finite-difference velocity of the endpoint-pair curve `ψ∘c` at an
/// interior sample: the independent cross-check path for causal signs.
pub fn velocity_boundary(c: &CurveInG, i: usize) -> Result<BoundaryTangent> {
    if i == 0 || i + 1 >= c.len() {
        return Err(Error::domain(format!("index {i} is not interior")));
    }
    let pair = |k: usize| BoundaryPair::from(&from_unit_tangent(&c.samples[k]));
    let at = pair(i);
    let prev = pair(i - 1);
    let next = pair(i + 1);
    let denom = 2.0 * c.h;
    let xm = (next.p().dir() - prev.p().dir()) / denom;
    let xp = (next.q().dir() - prev.q().dir()) / denom;
    let xm = &xm - at.p().dir() * at.p().dir().dot(&xm);
    let xp = &xp - at.q().dir() * at.q().dir().dot(&xp);
    BoundaryTangent::new(at, xm, xp)
}

/// Ready-made curve families used as fixtures throughout the test and
/// verification suites.
pub mod families {
    use super::*;
    use crate::minkowski::{mat_exp, AlgebraElement, LorentzVector};

    fn grid(h: f64, t0: f64, t1: f64) -> Vec<f64> {
        let steps = ((t1 - t0) / h).round() as usize;
        (0..=steps).map(|i| t0 + h * i as f64).collect()
    }

    /// Curve from an explicit lift `t ↦ (p(t), v(t))`.
    pub fn from_lift(
        h: f64,
        t0: f64,
        t1: f64,
        lift: impl Fn(f64) -> Result<UnitTangent>,
    ) -> Result<CurveInG> {
        let samples = grid(h, t0, t1).into_iter().map(lift).collect::<Result<Vec<_>>>()?;
        CurveInG::new(h, t0, samples)
    }

    /// Orbit `t ↦ exp(tX)·c_o` with the group lift `(exp(tX)e₀, exp(tX)e₁)`.
    pub fn group_orbit(x: &AlgebraElement, h: f64, t0: f64, t1: f64) -> Result<CurveInG> {
        let dim = x.dim();
        from_lift(h, t0, t1, |t| {
            let g = mat_exp(x, t)?;
            let mut e1 = LorentzVector::zeros(dim);
            e1[1] = 1.0;
            UnitTangent::new(HPoint::new(g.column(0).clone_owned())?, &g * e1)
        })
    }

    /// Rotation family: geodesics through `e₀` with direction
    /// `cos t·e₁ + sin t·e₂` (timelike for `g₁`; `β ≡ e₀`).
    pub fn rotation(n: usize, h: f64, t0: f64, t1: f64) -> Result<CurveInG> {
        let dim = n + 2;
        from_lift(h, t0, t1, |t| {
            let mut v = LorentzVector::zeros(dim);
            v[1] = t.cos();
            v[2] = t.sin();
            UnitTangent::new(HPoint::origin(dim), v)
        })
    }

    /// Translation family `exp(t·x_h)·c_o` with `x = e⁽¹⁾` (spacelike for `g₁`).
    pub fn translation(n: usize, h: f64, t0: f64, t1: f64) -> Result<CurveInG> {
        let mut x = DVector::zeros(n);
        x[0] = 1.0;
        group_orbit(&AlgebraElement::horizontal(&x), h, t0, t1)
    }

    /// Null-direction family `exp(t(x_h + x_v))·c_o` with `x = e⁽¹⁾`.
    pub fn null_orbit(n: usize, h: f64, t0: f64, t1: f64) -> Result<CurveInG> {
        let mut x = DVector::zeros(n);
        x[0] = 1.0;
        let vel = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&x))?;
        group_orbit(&vel, h, t0, t1)
    }

    /// The rotation family re-lifted with an artificial offset `sin t` along
    /// each geodesic; the standard presentation recovers `f(t) = −sin t`.
    pub fn relifted_rotation(n: usize, h: f64, t0: f64, t1: f64) -> Result<CurveInG> {
        let dim = n + 2;
        from_lift(h, t0, t1, |t| {
            let mut v = LorentzVector::zeros(dim);
            v[1] = t.cos();
            v[2] = t.sin();
            let plain = UnitTangent::new(HPoint::origin(dim), v)?;
            geodesic_point(&plain, t.sin())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::norm_mss;
    use crate::linespace::{norm_g0, norm_g1};
    use crate::minkowski::AlgebraElement;
    use crate::sampling;
    use crate::tol;

    fn ev(n: usize, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(n);
        v[i] = 1.0;
        v
    }

    #[test]
    fn rotation_family_presents_trivially() {
        let c = families::rotation(2, 1e-3, 0.0, 0.2).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        for &f in sp.offsets() {
            assert!(f.abs() < 1e-10, "offset should vanish, got {f}");
        }
        for i in 1..sp.len() - 1 {
            assert!(sp.orthogonality_residual(i).unwrap() < 1e-10);
        }
    }

    #[test]
    fn relifted_rotation_recovers_the_offset() {
        let h = 1e-4;
        let c = families::relifted_rotation(2, h, 0.0, 1.5).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        for (i, &f) in sp.offsets().iter().enumerate() {
            let t = c.t_at(i);
            assert!((f + t.sin()).abs() < 1e-6, "offset at t = {t}: got {f}, want {}", -t.sin());
        }
        for i in 1..sp.len() - 1 {
            let (beta_dot, _, _) = presentation_data(&sp, i).unwrap();
            assert!(
                sp.orthogonality_residual(i).unwrap()
                    <= tol::PRESENTATION_RESIDUAL * (1.0 + beta_dot.norm())
            );
        }
    }

    #[test]
    fn translation_family_presents_trivially_and_is_spacelike() {
        let c = families::translation(2, 2e-4, 0.0, 0.05).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        for &f in sp.offsets() {
            assert!(f.abs() < 1e-9);
        }
        let mid = sp.len() / 2;
        let (beta_dot, _, d_alpha) = presentation_data(&sp, mid).unwrap();
        assert!((beta_dot.norm() - 1.0).abs() < 1e-6, "|β̇| = |x| = 1");
        assert!(d_alpha.norm() < 1e-6, "directions stay parallel");
        assert_eq!(causal_classify_g1(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Spacelike);
        // β̇ and Dα̇ are linearly dependent (one vanishes): g₀-null.
        assert_eq!(causal_classify_g0(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Null);
    }

    #[test]
    fn rotation_family_rates_and_classes() {
        let c = families::rotation(2, 2e-4, 0.0, 0.05).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        let mid = sp.len() / 2;
        let (beta_dot, _, d_alpha) = presentation_data(&sp, mid).unwrap();
        assert!(beta_dot.norm() < 1e-8, "β is constant");
        assert!((d_alpha.norm() - 1.0).abs() < 1e-6, "angular rate 1");
        assert_eq!(causal_classify_g1(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Timelike);
        assert_eq!(causal_classify_g0(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Null);
    }

    #[test]
    fn null_family_balances_rates() {
        let c = families::null_orbit(2, 2e-4, 0.0, 0.05).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        let mid = sp.len() / 2;
        let (beta_dot, _, d_alpha) = presentation_data(&sp, mid).unwrap();
        assert!((beta_dot.norm() - d_alpha.norm()).abs() < 1e-6);
        assert_eq!(causal_classify_g1(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Null);
    }

    #[test]
    fn g0_classes_of_definite_families() {
        // x = (1,0), y = (0,1): ⟨ix, y⟩ = 1 > 0, spacelike for g₀.
        let spacelike =
            AlgebraElement::horizontal(&ev(2, 0)).add(&AlgebraElement::vertical(&ev(2, 1))).unwrap();
        let c = families::group_orbit(&spacelike, 2e-4, 0.0, 0.05).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        let mid = sp.len() / 2;
        assert_eq!(causal_classify_g0(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Spacelike);
        let gt = velocity_gtangent(&sp, mid).unwrap();
        assert!(norm_g0(&gt).unwrap() > 0.0);

        // x = (1,0), y = (0,−1): ⟨ix, y⟩ = −1 < 0, timelike for g₀.
        let timelike = AlgebraElement::horizontal(&ev(2, 0))
            .add(&AlgebraElement::vertical(&(-ev(2, 1))))
            .unwrap();
        let c = families::group_orbit(&timelike, 2e-4, 0.0, 0.05).unwrap();
        let sp = standard_presentation(&c, 0, &HPoint::origin(4)).unwrap();
        assert_eq!(causal_classify_g0(&sp, mid, tol::NULL_BAND).unwrap(), CausalType::Timelike);
    }

    #[test]
    fn velocity_boundary_examples() {
        // Constant curve: zero velocity.
        let c = families::from_lift(1e-3, 0.0, 0.01, |_| {
            UnitTangent::new(HPoint::origin(4), ev(4, 1))
        })
        .unwrap();
        let bt = velocity_boundary(&c, 2).unwrap();
        assert!(bt.component_norm() < 1e-12);

        // Translation family at t = 0 maps to (x̃, x̃).
        let c = families::translation(2, 1e-4, -0.01, 0.01).unwrap();
        let mid = c.len() / 2;
        let bt = velocity_boundary(&c, mid).unwrap();
        assert!((bt.xi_minus() - ev(3, 1)).amax() < 1e-5);
        assert!((bt.xi_plus() - ev(3, 1)).amax() < 1e-5);

        // The rotation fixture (generator y_v with ỹ = −e₂) gives (−e₂, e₂).
        let c = families::rotation(2, 1e-4, -0.01, 0.01).unwrap();
        let bt = velocity_boundary(&c, mid).unwrap();
        assert!((bt.xi_minus() + ev(3, 1)).amax() < 1e-5);
        assert!((bt.xi_plus() - ev(3, 1)).amax() < 1e-5);

        // Plain exp(s·y_v) with y = e⁽¹⁾ gives (ỹ, −ỹ).
        let c =
            families::group_orbit(&AlgebraElement::vertical(&ev(2, 0)), 1e-4, -0.01, 0.01).unwrap();
        let bt = velocity_boundary(&c, mid).unwrap();
        assert!((bt.xi_minus() - ev(3, 1)).amax() < 1e-5);
        assert!((bt.xi_plus() + ev(3, 1)).amax() < 1e-5);
    }

    #[test]
    fn dual_paths_agree_on_random_orbits() {
        let mut rng = sampling::rng_for(83, "curves-dual-path");
        for _ in 0..20 {
            let x = sampling::random_vector(&mut rng, 2, 1.0);
            let y = sampling::random_vector(&mut rng, 2, 1.0);
            let vel = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y)).unwrap();
            let c = families::group_orbit(&vel, 2e-4, -0.02, 0.02).unwrap();
            let mid = c.len() / 2;
            let sp = standard_presentation(&c, mid, &HPoint::origin(4)).unwrap();
            let gt = velocity_gtangent(&sp, mid).unwrap();
            let q_jacobi = norm_g1(&gt);
            let q_boundary = norm_mss(&velocity_boundary(&c, mid).unwrap()).unwrap();
            let scale = (1.0 + gt.data_norm()).powi(2);
            assert!(
                (q_jacobi - q_boundary).abs() < 1e-4 * scale,
                "dual-path mismatch: {q_jacobi} vs {q_boundary}"
            );
        }
    }

    #[test]
    fn reparametrization_does_not_change_causal_type() {
        // c(t) and c(σ(t)) with σ(t) = t + 0.3 sin t classify identically
        // at corresponding parameters.
        let vel = AlgebraElement::horizontal(&ev(2, 0))
            .add(&AlgebraElement::vertical(&(ev(2, 1) * 0.4)))
            .unwrap();
        let h = 2e-4;
        let plain = families::group_orbit(&vel, h, -0.02, 0.02).unwrap();
        let sigma = |t: f64| t + 0.3 * t.sin();
        let reparam = families::from_lift(h, -0.02, 0.02, |t| {
            let g = crate::minkowski::mat_exp(&vel, sigma(t))?;
            let mut e1 = DVector::zeros(4);
            e1[1] = 1.0;
            UnitTangent::new(HPoint::new(g.column(0).clone_owned())?, &g * e1)
        })
        .unwrap();
        let mid = plain.len() / 2;
        let sp_a = standard_presentation(&plain, mid, &HPoint::origin(4)).unwrap();
        // σ(0) = 0, so the same anchor point works for both.
        let sp_b = standard_presentation(&reparam, mid, &HPoint::origin(4)).unwrap();
        let a = causal_classify_g1(&sp_a, mid, tol::NULL_BAND).unwrap();
        let b = causal_classify_g1(&sp_b, mid, tol::NULL_BAND).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, CausalType::Spacelike);
    }

    #[test]
    fn anchor_must_lie_on_the_anchor_geodesic() {
        let c = families::rotation(2, 1e-3, 0.0, 0.02).unwrap();
        let off =
            HPoint::new(DVector::from_vec(vec![1.5f64.cosh(), 0.0, 0.0, 1.5f64.sinh()])).unwrap();
        assert!(standard_presentation(&c, 0, &off).is_err());
    }

    #[test]
    fn anchor_offset_is_respected() {
        // Anchoring at γ(0.4) of the anchor geodesic shifts the offsets.
        let c = families::rotation(2, 1e-3, 0.0, 0.05).unwrap();
        let p = geodesic_point(c.sample(0), 0.4).unwrap();
        let sp = standard_presentation(&c, 0, p.base()).unwrap();
        assert!((sp.offsets()[0] - 0.4).abs() < 1e-10);
        assert!((sp.beta()[0].coords() - p.base().coords()).amax() < 1e-10);
    }
}
