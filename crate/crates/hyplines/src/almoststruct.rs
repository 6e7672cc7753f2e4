//! Complex-structure layer: the Kähler structure of `𝒢₃` and the
//! octonionic almost complex structure of `𝒢₇`.
//!
//! Octonions are built by Cayley–Dickson doubling of the quaternions with
//! `e₄` as the doubling unit: `(a,b)(c,d) = (ac − d̄b, da + bc̄)`. This
//! fixes the multiplication table `e₁e₂ = e₃`, `e₁e₄ = e₅`, `e₂e₄ = e₆`,
//! `e₃e₄ = e₇` and consequences (Fano lines (123), (145), (246), (347),
//! (257), (176), (365)); any other table related by an algebra automorphism
//! gives an equivalent structure. The cross product on `ℝ⁷ = Im 𝕆` is
//! `u × v = Im(uv)`; `j_p(x) = p × x` is the almost complex structure of
//! `S⁶`, and on boundary pairs `J_{(p,q)}(x,y) = (j_p(x), j_{p,q}(y))` with
//! `j_{p,q} = T_{p,q} ∘ j_p ∘ T_{p,q}`.
//!
//! On `𝒢₃` the structure `j₀` acts on `𝔥 ≅ ℂ×ℂ` as `(z,w) ↦ (iz, iw)`
//! with the identification `(a,b) ↦ a + bi`; on Jacobi data this is the
//! quarter rotation of the plane orthogonal to the geodesic applied to both
//! slots, which commutes with the isotropy action and is therefore well
//! defined at every geodesic via frame conjugation.

use nalgebra::DVector;

use crate::boundary::{BoundaryPair, BoundaryTangent};
use crate::error::{Error, Result};
use crate::hyperbolic::{HTangent, IdealPoint, UnitTangent};
use crate::linespace::{push_forward, GTangent};
use crate::minkowski::{lorentz_frame, lorentz_inverse, mat_exp, AlgebraElement, LorentzVector};

/// Octonion in the basis `(1, e₁, …, e₇)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Octonion {
    pub coords: [f64; 8],
}

fn quat_mul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: [f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion { coords: [0.0; 8] }
    }

    pub fn one() -> Self {
        let mut c = [0.0; 8];
        c[0] = 1.0;
        Octonion { coords: c }
    }

    /// Basis unit `e_i` (`e₀ = 1`).
    pub fn unit(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion { coords: c }
    }

    /// Imaginary octonion from a vector of `ℝ⁷`.
    pub fn imaginary(v: &DVector<f64>) -> Result<Self> {
        if v.len() != 7 {
            return Err(Error::Dimension { expected: 7, got: v.len() });
        }
        let mut c = [0.0; 8];
        for i in 0..7 {
            c[1 + i] = v[i];
        }
        Ok(Octonion { coords: c })
    }

    pub fn im(&self) -> DVector<f64> {
        DVector::from_fn(7, |i, _| self.coords[1 + i])
    }

    pub fn re(&self) -> f64 {
        self.coords[0]
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Octonion product by Cayley–Dickson doubling of quaternion pairs.
pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let (a1, a2) = split(a);
    let (b1, b2) = split(b);
    let first = sub4(quat_mul(a1, b1), quat_mul(quat_conj(b2), a2));
    let second = add4(quat_mul(b2, a1), quat_mul(a2, quat_conj(b1)));
    join(first, second)
}

fn split(o: &Octonion) -> ([f64; 4], [f64; 4]) {
    let c = &o.coords;
    ([c[0], c[1], c[2], c[3]], [c[4], c[5], c[6], c[7]])
}

fn join(a: [f64; 4], b: [f64; 4]) -> Octonion {
    Octonion { coords: [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]] }
}

fn add4(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub4(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Seven-dimensional cross product `u × v = Im(uv)` on `ℝ⁷ = Im 𝕆`.
pub fn cross7(u: &DVector<f64>, v: &DVector<f64>) -> Result<DVector<f64>> {
    let a = Octonion::imaginary(u)?;
    let b = Octonion::imaginary(v)?;
    Ok(oct_mul(&a, &b).im())
}

/// Almost complex structure of `S⁶`: `j_p(x) = p × x` on `T_pS⁶ = p^⊥`.
pub fn j_sphere(p: &IdealPoint, x: &DVector<f64>) -> Result<DVector<f64>> {
    if p.dim() != 7 {
        return Err(Error::Feature { required: 6, actual: p.dim().saturating_sub(1) });
    }
    if x.dot(p.dir()).abs() > 1e-9 * x.norm().max(1.0) {
        return Err(Error::domain("x must be tangent at p"));
    }
    cross7(p.dir(), x)
}

/// Reflected structure on the second factor: `j_{p,q} = T_{p,q}∘j_p∘T_{p,q}`
/// acting on `T_qS⁶`.
pub fn j_pq(p: &IdealPoint, q: &IdealPoint, y: &DVector<f64>) -> Result<DVector<f64>> {
    if y.dot(q.dir()).abs() > 1e-9 * y.norm().max(1.0) {
        return Err(Error::domain("y must be tangent at q"));
    }
    let reflected = crate::boundary::reflection_t(p, q, y)?;
    let rotated = j_sphere(p, &reflected)?;
    crate::boundary::reflection_t(p, q, &rotated)
}

/// The orthogonal almost complex structure on `(S⁶×S⁶)∖Δ`:
/// `J_{(p,q)}(x, y) = (j_p(x), j_{p,q}(y))`. Squares to `−id` and preserves
/// the boundary pseudo-metric.
pub fn big_j(bt: &BoundaryTangent) -> Result<BoundaryTangent> {
    if bt.at().dim() != 7 {
        return Err(Error::Feature { required: 6, actual: bt.at().dim().saturating_sub(1) });
    }
    let xm = j_sphere(bt.at().p(), bt.xi_minus())?;
    let xp = j_pq(bt.at().p(), bt.at().q(), bt.xi_plus())?;
    BoundaryTangent::new(bt.at().clone(), xm, xp)
}

/// Unvalidated componentwise `J` used inside finite-difference loops; the
/// inputs are projected tangent before applying the structure.
fn big_j_components(
    p: &IdealPoint,
    q: &IdealPoint,
    xm: &DVector<f64>,
    xp: &DVector<f64>,
) -> Result<(DVector<f64>, DVector<f64>)> {
    let xm = xm - p.dir() * p.dir().dot(xm);
    let xp = xp - q.dir() * q.dir().dot(xp);
    Ok((j_sphere(p, &xm)?, j_pq(p, q, &xp)?))
}

/// The almost complex structure `j₀` of `𝒢₃`, `(x, y) ↦ (ix, iy)` on
/// `𝔥 ≅ ℂ²`: on Jacobi data, the quarter rotation of the orthogonal plane
/// applied to both slots, conjugated to the marked point by a Lorentz frame.
pub fn j0_g3(gt: &GTangent) -> Result<GTangent> {
    if gt.base().dim() != 4 {
        return Err(Error::Feature { required: 2, actual: gt.base().dim().saturating_sub(2) });
    }
    let g = lorentz_frame(gt.base().base().coords(), gt.base().vec())?;
    let at_ref = push_forward(&lorentz_inverse(&g), gt)?;

    // i(a, b) = (−b, a) on span(e₂, e₃): e₂ ↦ e₃, e₃ ↦ −e₂.
    let rot = |w: &LorentzVector| {
        let mut r = w.clone();
        r[2] = -w[3];
        r[3] = w[2];
        r
    };
    let base = at_ref.base().clone();
    let j0 = HTangent::new(base.base().clone(), rot(at_ref.j0().vec()))?;
    let j1 = HTangent::new(base.base().clone(), rot(at_ref.j1().vec()))?;
    push_forward(&g, &GTangent::new(base, j0, j1)?)
}

/// Parallelism defect of `j₀` along the geodesic `t ↦ exp(tX)·c_o`.
///
/// Parallel fields along a geodesic of a symmetric space are the
/// `d exp(tX)`-images of their initial values, so `∇j₀ = 0` is equivalent to
/// `j₀(exp(tX)·Y₀) = exp(tX)·(j₀Y₀)` along the orbit. Returns the maximum
/// componentwise deviation over the grid; a Kähler structure yields zero up
/// to roundoff, and any non-invariant candidate structure produces a
/// macroscopic value.
pub fn kahler_parallel_check(
    x: &AlgebraElement,
    gt0: &GTangent,
    t_total: f64,
    steps: usize,
) -> Result<f64> {
    if gt0.base().dim() != 4 {
        return Err(Error::Feature { required: 2, actual: gt0.base().dim().saturating_sub(2) });
    }
    if steps == 0 {
        return Err(Error::domain("at least one step is required"));
    }
    let reference = UnitTangent::reference(4);
    if !gt0.base().base().approx_eq(reference.base(), 1e-8)
        || (gt0.base().vec() - reference.vec()).amax() > 1e-8
    {
        return Err(Error::domain("the initial tangent must be marked at the reference tangent"));
    }
    let j_gt0 = j0_g3(gt0)?;
    let mut worst: f64 = 0.0;
    for k in 0..=steps {
        let t = t_total * k as f64 / steps as f64;
        let g = mat_exp(x, t)?;
        let parallel = push_forward(&g, gt0)?;
        let lhs = j0_g3(&parallel)?;
        let rhs = push_forward(&g, &j_gt0)?;
        worst = worst.max(lhs.data_distance(&rhs));
    }
    Ok(worst)
}

/// Finite-difference Nijenhuis tensor of [`big_j`] at a boundary pair:
/// `N(ξ,η) = [Jξ,Jη] − J[Jξ,η] − J[ξ,Jη] − [ξ,η]`, with the fields extended
/// by tangential projection of the constant pair `(ξ₋, ξ₊)` and brackets by
/// central differences of step `h` in the ambient chart.
pub fn nijenhuis(
    at: &BoundaryPair,
    xi: &BoundaryTangent,
    eta: &BoundaryTangent,
    h: f64,
) -> Result<BoundaryTangent> {
    if at.dim() != 7 {
        return Err(Error::Feature { required: 6, actual: at.dim().saturating_sub(1) });
    }
    if !(h > 0.0 && h < 0.1) {
        return Err(Error::domain("finite-difference step must be small and positive"));
    }
    for t in [xi, eta] {
        if t.at().distance(at) > 1e-9 {
            return Err(Error::domain("tangents must be based at the evaluation pair"));
        }
    }

    type Field = Box<dyn Fn(&IdealPoint, &IdealPoint) -> Result<(DVector<f64>, DVector<f64>)>>;

    let constant = |a: DVector<f64>, b: DVector<f64>| -> Field {
        Box::new(move |p: &IdealPoint, q: &IdealPoint| {
            Ok((&a - p.dir() * p.dir().dot(&a), &b - q.dir() * q.dir().dot(&b)))
        })
    };
    let with_j = |f: Field| -> Field {
        Box::new(move |p: &IdealPoint, q: &IdealPoint| {
            let (a, b) = f(p, q)?;
            big_j_components(p, q, &a, &b)
        })
    };

    let flow = |p: &IdealPoint,
                q: &IdealPoint,
                d: &(DVector<f64>, DVector<f64>),
                s: f64|
     -> Result<(IdealPoint, IdealPoint)> {
        let pm = p.dir() + &d.0 * s;
        let qp = q.dir() + &d.1 * s;
        Ok((IdealPoint::new(pm.normalize())?, IdealPoint::new(qp.normalize())?))
    };

    // [A, B](m) = dB(A)(m) − dA(B)(m), each derivative by central differences
    // along the projected straight-line flow.
    let bracket = |a: &Field, b: &Field| -> Result<(DVector<f64>, DVector<f64>)> {
        let am = a(at.p(), at.q())?;
        let bm = b(at.p(), at.q())?;
        let d_of = |f: &Field, dir: &(DVector<f64>, DVector<f64>)| -> Result<(DVector<f64>, DVector<f64>)> {
            let (pp, qp) = flow(at.p(), at.q(), dir, h)?;
            let (pm, qm) = flow(at.p(), at.q(), dir, -h)?;
            let fp = f(&pp, &qp)?;
            let fm = f(&pm, &qm)?;
            Ok(((fp.0 - fm.0) / (2.0 * h), (fp.1 - fm.1) / (2.0 * h)))
        };
        let db_a = d_of(b, &am)?;
        let da_b = d_of(a, &bm)?;
        Ok((db_a.0 - da_b.0, db_a.1 - da_b.1))
    };

    let a: Field = constant(xi.xi_minus().clone(), xi.xi_plus().clone());
    let b: Field = constant(eta.xi_minus().clone(), eta.xi_plus().clone());
    let ja: Field = with_j(constant(xi.xi_minus().clone(), xi.xi_plus().clone()));
    let jb: Field = with_j(constant(eta.xi_minus().clone(), eta.xi_plus().clone()));

    let t1 = bracket(&ja, &jb)?;
    let t2 = bracket(&ja, &b)?;
    let t3 = bracket(&a, &jb)?;
    let t4 = bracket(&a, &b)?;

    let jt2 = big_j_components(at.p(), at.q(), &t2.0, &t2.1)?;
    let jt3 = big_j_components(at.p(), at.q(), &t3.0, &t3.1)?;

    let nm = t1.0 - jt2.0 - jt3.0 - t4.0;
    let np = t1.1 - jt2.1 - jt3.1 - t4.1;
    let nm = &nm - at.p().dir() * at.p().dir().dot(&nm);
    let np = &np - at.q().dir() * at.q().dir().dot(&np);
    BoundaryTangent::new(at.clone(), nm, np)
}

/// Finite-difference Nijenhuis tensor of the `S⁶` structure `p ↦ j_p` alone,
/// for the submanifold reduction cross-check.
pub fn s6_nijenhuis(
    p: &IdealPoint,
    a: &DVector<f64>,
    b: &DVector<f64>,
    h: f64,
) -> Result<DVector<f64>> {
    if p.dim() != 7 {
        return Err(Error::Feature { required: 6, actual: p.dim().saturating_sub(1) });
    }
    type Field = Box<dyn Fn(&IdealPoint) -> Result<DVector<f64>>>;
    let constant = |v: DVector<f64>| -> Field {
        Box::new(move |z: &IdealPoint| Ok(&v - z.dir() * z.dir().dot(&v)))
    };
    let with_j = |f: Field| -> Field {
        Box::new(move |z: &IdealPoint| {
            let w = f(z)?;
            let w = &w - z.dir() * z.dir().dot(&w);
            cross7(z.dir(), &w)
        })
    };
    let bracket = |f: &Field, g: &Field| -> Result<DVector<f64>> {
        let fm = f(p)?;
        let gm = g(p)?;
        let d_of = |k: &Field, dir: &DVector<f64>| -> Result<DVector<f64>> {
            let zp = IdealPoint::new((p.dir() + dir * h).normalize())?;
            let zm = IdealPoint::new((p.dir() - dir * h).normalize())?;
            Ok((k(&zp)? - k(&zm)?) / (2.0 * h))
        };
        Ok(d_of(g, &fm)? - d_of(f, &gm)?)
    };

    let fa: Field = constant(a.clone());
    let fb: Field = constant(b.clone());
    let ja: Field = with_j(constant(a.clone()));
    let jb: Field = with_j(constant(b.clone()));

    let t1 = bracket(&ja, &jb)?;
    let t2 = bracket(&ja, &fb)?;
    let t3 = bracket(&fa, &jb)?;
    let t4 = bracket(&fa, &fb)?;
    let proj = |w: &DVector<f64>| w - p.dir() * p.dir().dot(w);
    let jt2 = cross7(p.dir(), &proj(&t2))?;
    let jt3 = cross7(p.dir(), &proj(&t3))?;
    Ok(proj(&(t1 - jt2 - jt3 - t4)))
}
