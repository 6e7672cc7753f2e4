//! Lorentz linear algebra over `ℝ^{n+2}`.
//!
//! The ambient inner product is `⟨x,y⟩ = −x₀y₀ + x₁y₁ + ⋯ + x_{n+1}y_{n+1}`
//! (coordinate 0 is time). The Lie algebra `so(1,n+1)` of the isometry group
//! `G = O_o(1,n+1)` splits `B`-orthogonally as `𝔤 = 𝔤₀ ⊕ 𝔥`, where `B(X,Y) =
//! ½ tr(XY)` is a multiple of the Killing form, `𝔤₀` is the isotropy algebra
//! of the base geodesic, and `𝔥 = {x_h + y_v}` carries the `(x,y)` coordinates
//! used throughout the crate:
//!
//! ```text
//! x_h = ⎛0₂      (x,0)ᵀ⎞        y_v = ⎛0₂      (0,y)ᵀ⎞
//!       ⎝(x,0)   0ₙ    ⎠              ⎝(0,−y)  0ₙ    ⎠
//! ```
//!
//! so `x_h` is the boost pairing `e₀` with the spatial block and `y_v` the
//! rotation pairing `e₁` with it.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::tol;

/// General ambient vector of `ℝ^{n+2}` in the basis `e₀,…,e_{n+1}`.
pub type LorentzVector = DVector<f64>;

/// Minkowski inner product with signature `(1, n+1)`, minus on coordinate 0.
pub fn inner(a: &LorentzVector, b: &LorentzVector) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension { expected: a.len(), got: b.len() });
    }
    let mut s = -a[0] * b[0];
    for i in 1..a.len() {
        s += a[i] * b[i];
    }
    Ok(s)
}

/// `inner` for vectors already known to have equal lengths.
pub(crate) fn inner_unchecked(a: &LorentzVector, b: &LorentzVector) -> f64 {
    let mut s = -a[0] * b[0];
    for i in 1..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// The metric matrix `η = diag(−1, 1, …, 1)` of size `dim`.
pub fn eta(dim: usize) -> DMatrix<f64> {
    let mut m = DMatrix::identity(dim, dim);
    m[(0, 0)] = -1.0;
    m
}

/// Embeds an `ℝⁿ` coordinate vector into the spatial block: `x ↦ Σ xᵢ e_{i+1}`
/// as an ambient vector of length `n + 2` (coordinates 2..n+2).
pub fn embed_spatial(x: &DVector<f64>) -> LorentzVector {
    let n = x.len();
    let mut v = DVector::zeros(n + 2);
    for i in 0..n {
        v[2 + i] = x[i];
    }
    v
}

/// Inverse of [`embed_spatial`]; the first two coordinates must vanish.
pub fn extract_spatial(v: &LorentzVector) -> Result<DVector<f64>> {
    let scale = v.amax().max(1.0);
    if v[0].abs() > 1e-9 * scale || v[1].abs() > 1e-9 * scale {
        return Err(Error::domain("vector is not supported on coordinates 2..n+2"));
    }
    Ok(DVector::from_fn(v.len() - 2, |i, _| v[2 + i]))
}

/// Element of `so(1,n+1)`: a matrix `X` with `Xᵀη + ηX = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    mat: DMatrix<f64>,
}

impl AlgebraElement {
    /// Validates membership in `so(1,n+1)` and wraps the matrix.
    pub fn new(mat: DMatrix<f64>) -> Result<Self> {
        if mat.nrows() != mat.ncols() || mat.nrows() < 3 {
            return Err(Error::domain("algebra element must be square of size at least 3"));
        }
        let dim = mat.nrows();
        let scale = mat.amax().max(1.0);
        let residual = mat.transpose() * eta(dim) + eta(dim) * &mat;
        if residual.amax() > tol::SO_MEMBERSHIP * scale {
            return Err(Error::domain(format!(
                "matrix is not in so(1,n+1): residual {:.3e}",
                residual.amax()
            )));
        }
        Ok(AlgebraElement { mat })
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement { mat: DMatrix::zeros(dim, dim) }
    }

    /// The boost `x_h` pairing `e₀` with the spatial block.
    pub fn horizontal(x: &DVector<f64>) -> Self {
        let n = x.len();
        let mut m = DMatrix::zeros(n + 2, n + 2);
        for i in 0..n {
            m[(0, 2 + i)] = x[i];
            m[(2 + i, 0)] = x[i];
        }
        AlgebraElement { mat: m }
    }

    /// The rotation `y_v` pairing `e₁` with the spatial block.
    pub fn vertical(y: &DVector<f64>) -> Self {
        let n = y.len();
        let mut m = DMatrix::zeros(n + 2, n + 2);
        for i in 0..n {
            m[(1, 2 + i)] = y[i];
            m[(2 + i, 1)] = -y[i];
        }
        AlgebraElement { mat: m }
    }

    /// `Z = diag(R, 0ₙ)` with `R = [[0,1],[1,0]]`: the boost along the base
    /// geodesic, generator of the `G_o` flow.
    pub fn axis_boost(n: usize) -> Self {
        let mut m = DMatrix::zeros(n + 2, n + 2);
        m[(0, 1)] = 1.0;
        m[(1, 0)] = 1.0;
        AlgebraElement { mat: m }
    }

    /// `diag(0₂, A)` for `A ∈ so_n`: the spatial-rotation part `𝔪` of `𝔤₀`.
    pub fn spatial(a: &DMatrix<f64>) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::domain("spatial block must be square"));
        }
        let skew = a + a.transpose();
        if skew.amax() > tol::SO_MEMBERSHIP * a.amax().max(1.0) {
            return Err(Error::domain("spatial block must be antisymmetric"));
        }
        let mut m = DMatrix::zeros(n + 2, n + 2);
        for i in 0..n {
            for j in 0..n {
                m[(2 + i, 2 + j)] = a[(i, j)];
            }
        }
        Ok(AlgebraElement { mat: m })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn scaled(&self, c: f64) -> Self {
        AlgebraElement { mat: &self.mat * c }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: other.dim() });
        }
        Ok(AlgebraElement { mat: &self.mat + &other.mat })
    }

    /// Frobenius norm of the underlying matrix.
    pub fn norm(&self) -> f64 {
        self.mat.norm()
    }
}

/// Commutator `[X, Y] = XY − YX`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension { expected: x.dim(), got: y.dim() });
    }
    let m = x.matrix() * y.matrix() - y.matrix() * x.matrix();
    Ok(AlgebraElement { mat: m })
}

/// `B(X,Y) = ½ tr(XY)`, a multiple of the Killing form; nondegenerate on `𝔤`.
pub fn killing_b(x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::Dimension { expected: x.dim(), got: y.dim() });
    }
    let mut tr = 0.0;
    let n = x.dim();
    for i in 0..n {
        for j in 0..n {
            tr += x.matrix()[(i, j)] * y.matrix()[(j, i)];
        }
    }
    Ok(0.5 * tr)
}

/// `B`-orthogonal decomposition of an algebra element into `𝔤₀ ⊕ 𝔥`,
/// together with the `(x, y)` coordinates of the `𝔥` part.
#[derive(Debug, Clone)]
pub struct HSplit {
    pub go_part: AlgebraElement,
    pub h_part: AlgebraElement,
    pub x: DVector<f64>,
    pub y: DVector<f64>,
}

/// Splits `X ∈ so(1,n+1)` along `𝔤 = 𝔤₀ ⊕ 𝔥` by reading off the blocks.
///
/// `𝔤₀` consists of `t·Z + diag(0₂, A)`; `𝔥` of `x_h + y_v`. The two parts
/// partition the matrix entries, so the reconstruction is exact.
pub fn algebra_split(x: &AlgebraElement) -> HSplit {
    let dim = x.dim();
    let n = dim - 2;
    let m = x.matrix();

    let xv = DVector::from_fn(n, |i, _| m[(0, 2 + i)]);
    let yv = DVector::from_fn(n, |i, _| m[(1, 2 + i)]);

    let h_part = AlgebraElement::horizontal(&xv)
        .add(&AlgebraElement::vertical(&yv))
        .expect("same dimension");

    let go_part = AlgebraElement { mat: m - h_part.matrix() };

    HSplit { go_part, h_part, x: xv, y: yv }
}

/// Flow of `Ad(e^{tZ})` on the `(x,y)` coordinates of `𝔥`:
/// `(xᵗ, yᵗ) = (cosh t·x + sinh t·y, sinh t·x + cosh t·y)`.
///
/// The eigenspaces `𝔤_{±1} = {x_h ± x_v}` of `ad_Z` scale by `e^{±t}`.
pub fn adz_flow(t: f64, x: &DVector<f64>, y: &DVector<f64>) -> (DVector<f64>, DVector<f64>) {
    let (c, s) = (t.cosh(), t.sinh());
    (x * c + y * s, x * s + y * c)
}

/// Matrix exponential `exp(tX)` by scaling and squaring with a truncated
/// Taylor series.
///
/// Hyperbolic entries grow like `e^{‖X‖t}`, so arguments are clamped to
/// `‖X‖_F·|t| ≤ 50` with a range error beyond.
pub fn mat_exp(x: &AlgebraElement, t: f64) -> Result<DMatrix<f64>> {
    let a = x.matrix() * t;
    let norm = a.norm();
    if norm > tol::HYPERBOLIC_RANGE {
        return Err(Error::range(format!(
            "‖X‖·|t| = {norm:.3} exceeds the exponential range guard {}",
            tol::HYPERBOLIC_RANGE
        )));
    }
    let dim = a.nrows();
    if norm == 0.0 {
        return Ok(DMatrix::identity(dim, dim));
    }

    // Scale so the series argument has norm at most 1/2.
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let b = &a / 2f64.powi(s as i32);

    let mut result = DMatrix::identity(dim, dim);
    let mut term = DMatrix::identity(dim, dim);
    for k in 1..=30 {
        term = &term * &b / (k as f64);
        result += &term;
        if term.norm() <= 1e-18 * result.norm() {
            break;
        }
    }
    for _ in 0..s {
        result = &result * &result;
    }
    Ok(result)
}

/// Inverse of a Lorentz-orthogonal matrix: `g⁻¹ = η gᵀ η`.
pub fn lorentz_inverse(g: &DMatrix<f64>) -> DMatrix<f64> {
    let dim = g.nrows();
    eta(dim) * g.transpose() * eta(dim)
}

/// Checks membership of `g` in the identity component `O_o(1,n+1)`:
/// `gᵀηg = η` to the given tolerance, `det g > 0` and `(g e₀)₀ > 0`.
pub fn is_in_group(g: &DMatrix<f64>, tolerance: f64) -> bool {
    if g.nrows() != g.ncols() {
        return false;
    }
    let dim = g.nrows();
    let scale = g.amax().max(1.0);
    let residual = g.transpose() * eta(dim) * g - eta(dim);
    residual.amax() <= tolerance * scale * scale && g.determinant() > 0.0 && g[(0, 0)] > 0.0
}

/// Completes `(p, u)` to a frame `g ∈ O_o(1,n+1)` with `g e₀ = p`, `g e₁ = u`.
///
/// The remaining columns come from Gram–Schmidt over the ambient basis in
/// index order, skipping candidates whose projected norm falls below the
/// pivot threshold; the sign of the last column is fixed so `det g > 0`.
pub fn lorentz_frame(p: &LorentzVector, u: &LorentzVector) -> Result<DMatrix<f64>> {
    let dim = p.len();
    if u.len() != dim {
        return Err(Error::Dimension { expected: dim, got: u.len() });
    }
    let pp = inner_unchecked(p, p);
    let uu = inner_unchecked(u, u);
    let pu = inner_unchecked(p, u);
    if (pp + 1.0).abs() > 1e-8 || p[0] <= 0.0 {
        return Err(Error::domain("frame base must satisfy ⟨p,p⟩ = −1, p₀ > 0"));
    }
    if (uu - 1.0).abs() > 1e-8 || pu.abs() > 1e-8 {
        return Err(Error::domain("frame direction must be a unit tangent at p"));
    }

    let mut cols: Vec<LorentzVector> = vec![p.clone(), u.clone()];
    for k in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut w: LorentzVector = DVector::zeros(dim);
        w[k] = 1.0;
        // Two Gram–Schmidt passes keep the columns orthonormal to roundoff.
        for _ in 0..2 {
            let w0 = w.clone();
            let mut acc = w0;
            acc += &cols[0] * inner_unchecked(&w, &cols[0]);
            for c in cols.iter().skip(1) {
                acc -= c * inner_unchecked(&w, c);
            }
            w = acc;
        }
        let nw = inner_unchecked(&w, &w);
        if nw <= tol::FRAME_PIVOT * tol::FRAME_PIVOT {
            continue;
        }
        cols.push(&w / nw.sqrt());
    }
    if cols.len() != dim {
        return Err(Error::domain("frame completion failed: degenerate input"));
    }

    let mut g = DMatrix::zeros(dim, dim);
    for (j, c) in cols.iter().enumerate() {
        g.set_column(j, c);
    }
    if g.determinant() < 0.0 {
        let last = -g.column(dim - 1).clone_owned();
        g.set_column(dim - 1, &last);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(n);
        v[i] = 1.0;
        v
    }

    fn ambient_unit(dim: usize, i: usize) -> LorentzVector {
        let mut v = DVector::zeros(dim);
        v[i] = 1.0;
        v
    }

    #[test]
    fn inner_signature() {
        let e0 = ambient_unit(4, 0);
        let e1 = ambient_unit(4, 1);
        assert_eq!(inner(&e0, &e0).unwrap(), -1.0);
        assert_eq!(inner(&e1, &e1).unwrap(), 1.0);
        let null = &e0 + &e1;
        assert_eq!(inner(&null, &null).unwrap(), 0.0);
        assert!(inner(&e0, &ambient_unit(5, 0)).is_err());
    }

    // Independent oracle: assemble the block matrices entry by entry and
    // take ½ tr by a raw loop, without going through AlgebraElement.
    fn half_trace_product(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
        let n = a.len();
        let mut tr = 0.0;
        for i in 0..n {
            for j in 0..n {
                tr += a[i][j] * b[j][i];
            }
        }
        0.5 * tr
    }

    fn raw_horizontal(n: usize, x: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; n + 2]; n + 2];
        for i in 0..n {
            m[0][2 + i] = x[i];
            m[2 + i][0] = x[i];
        }
        m
    }

    fn raw_vertical(n: usize, y: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; n + 2]; n + 2];
        for i in 0..n {
            m[1][2 + i] = y[i];
            m[2 + i][1] = -y[i];
        }
        m
    }

    #[test]
    fn killing_form_on_h_matches_oracle() {
        let n = 3;
        let xh = AlgebraElement::horizontal(&unit(n, 0));
        let yv = AlgebraElement::vertical(&unit(n, 0));

        let raw_h = raw_horizontal(n, &[1.0, 0.0, 0.0]);
        let raw_v = raw_vertical(n, &[1.0, 0.0, 0.0]);

        let oracle_hh = half_trace_product(&raw_h, &raw_h);
        let oracle_vv = half_trace_product(&raw_v, &raw_v);
        assert_eq!(oracle_hh, 1.0);
        assert_eq!(oracle_vv, -1.0);

        assert!((killing_b(&xh, &xh).unwrap() - oracle_hh).abs() < 1e-15);
        assert!((killing_b(&yv, &yv).unwrap() - oracle_vv).abs() < 1e-15);

        let z = AlgebraElement::axis_boost(n);
        assert_eq!(killing_b(&z, &xh).unwrap(), 0.0);
    }

    #[test]
    fn killing_form_on_h_is_x2_minus_y2() {
        let x = DVector::from_vec(vec![0.3, -1.1, 0.0, 2.0]);
        let y = DVector::from_vec(vec![1.0, 0.5, -0.2, 0.7]);
        let h = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y)).unwrap();
        let expect = x.norm_squared() - y.norm_squared();
        assert!((killing_b(&h, &h).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn exponential_basics() {
        let n = 2;
        let z = AlgebraElement::axis_boost(n);
        let id = mat_exp(&z, 0.0).unwrap();
        assert_eq!(id, DMatrix::identity(n + 2, n + 2));

        let t = 0.7;
        let g = mat_exp(&z, t).unwrap();
        let mut expect = DMatrix::identity(n + 2, n + 2);
        expect[(0, 0)] = t.cosh();
        expect[(0, 1)] = t.sinh();
        expect[(1, 0)] = t.sinh();
        expect[(1, 1)] = t.cosh();
        assert!((g - expect).amax() < 1e-13);
    }

    #[test]
    fn exponential_rotation_period() {
        let n = 3;
        let y = DVector::from_vec(vec![0.6, 0.0, 0.8]);
        let yv = AlgebraElement::vertical(&y);
        let g = mat_exp(&yv, 2.0 * std::f64::consts::PI / y.norm()).unwrap();
        assert!((g - DMatrix::identity(n + 2, n + 2)).amax() < 1e-12);
    }

    #[test]
    fn exponential_group_law_and_membership() {
        let x = DVector::from_vec(vec![0.4, -0.3]);
        let y = DVector::from_vec(vec![0.1, 0.9]);
        let h = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y)).unwrap();
        let a = mat_exp(&h, 0.8).unwrap();
        let b = mat_exp(&h, 1.3).unwrap();
        let c = mat_exp(&h, 2.1).unwrap();
        assert!((a * b - c).amax() < 1e-9);
        let g = mat_exp(&h, 1.7).unwrap();
        assert!(is_in_group(&g, tol::GROUP_MEMBERSHIP));
    }

    #[test]
    fn exponential_range_guard() {
        let z = AlgebraElement::axis_boost(2);
        assert!(matches!(mat_exp(&z, 100.0), Err(Error::Range(_))));
    }

    #[test]
    fn split_reads_off_blocks() {
        let n = 3;
        let z = AlgebraElement::axis_boost(n);
        let s = algebra_split(&z);
        assert!(s.h_part.norm() < 1e-15);
        assert!(s.x.amax() < 1e-15 && s.y.amax() < 1e-15);

        let x = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let s = algebra_split(&AlgebraElement::horizontal(&x));
        assert!((s.x - &x).amax() < 1e-15);
        assert!(s.y.amax() < 1e-15);
        assert!(s.go_part.norm() < 1e-15);
    }

    #[test]
    fn split_is_b_orthogonal_and_exact() {
        let n = 4usize;
        let x = DVector::from_vec(vec![0.3, -1.0, 0.2, 0.0]);
        let y = DVector::from_vec(vec![0.5, 0.5, -0.5, 1.5]);
        let mut a = DMatrix::zeros(n, n);
        a[(0, 2)] = 0.7;
        a[(2, 0)] = -0.7;
        let total = AlgebraElement::horizontal(&x)
            .add(&AlgebraElement::vertical(&y))
            .unwrap()
            .add(&AlgebraElement::axis_boost(n).scaled(0.9))
            .unwrap()
            .add(&AlgebraElement::spatial(&a).unwrap())
            .unwrap();
        let s = algebra_split(&total);
        assert!((s.x - &x).amax() < 1e-15);
        assert!((s.y - &y).amax() < 1e-15);
        let recombined = s.go_part.add(&s.h_part).unwrap();
        assert!((recombined.matrix() - total.matrix()).amax() < 1e-15);
        assert!(killing_b(&s.go_part, &s.h_part).unwrap().abs() < tol::SPLIT_ORTHO);
        // Splitting the h part again leaves nothing in 𝔤₀.
        assert!(algebra_split(&s.h_part).go_part.norm() < 1e-15);
    }

    #[test]
    fn adz_flow_matches_conjugation() {
        let n = 3;
        let x = DVector::from_vec(vec![0.2, -0.4, 1.0]);
        let y = DVector::from_vec(vec![-0.5, 0.3, 0.8]);
        let t = 0.83;

        let (xt, yt) = adz_flow(t, &x, &y);

        let h = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y)).unwrap();
        let g = mat_exp(&AlgebraElement::axis_boost(n), t).unwrap();
        let ginv = mat_exp(&AlgebraElement::axis_boost(n), -t).unwrap();
        let conj = AlgebraElement::new(&g * h.matrix() * &ginv).unwrap();
        let s = algebra_split(&conj);
        assert!(s.go_part.norm() < 1e-12);
        assert!((s.x - xt).amax() < 1e-10);
        assert!((s.y - yt).amax() < 1e-10);
    }

    #[test]
    fn adz_flow_null_eigenvector_and_orthogonalization() {
        let y = DVector::from_vec(vec![0.3, 0.4]);
        let (xt, yt) = adz_flow(1.1, &y, &y);
        let scale = 1.1f64.exp();
        assert!((xt.clone() - &y * scale).amax() < 1e-12);
        assert!((yt.clone() - &y * scale).amax() < 1e-12);

        let x = DVector::from_vec(vec![0.9, -0.1]);
        let y = DVector::from_vec(vec![0.2, 1.4]);
        let s = 0.5 * f64::atanh(-2.0 * x.dot(&y) / (x.norm_squared() + y.norm_squared()));
        let (xs, ys) = adz_flow(s, &x, &y);
        assert!(xs.dot(&ys).abs() < 1e-12);
    }

    #[test]
    fn adz_flow_group_law() {
        let x = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let y = DVector::from_vec(vec![-0.5, 0.0, 0.25]);
        let (s, t) = (0.37, -0.91);
        let (x1, y1) = adz_flow(t, &x, &y);
        let (x2, y2) = adz_flow(s, &x1, &y1);
        let (x3, y3) = adz_flow(s + t, &x, &y);
        assert!((x2 - x3).amax() < 1e-10);
        assert!((y2 - y3).amax() < 1e-10);
    }

    #[test]
    fn frame_identity_and_boost() {
        let dim = 5;
        let e0 = ambient_unit(dim, 0);
        let e1 = ambient_unit(dim, 1);
        let g = lorentz_frame(&e0, &e1).unwrap();
        assert!((g.clone() - DMatrix::identity(dim, dim)).amax() < 1e-14);

        let a = 0.8f64;
        let p = &e0 * a.cosh() + &e1 * a.sinh();
        let u = &e0 * a.sinh() + &e1 * a.cosh();
        let g = lorentz_frame(&p, &u).unwrap();
        let boost = mat_exp(&AlgebraElement::axis_boost(dim - 2), a).unwrap();
        assert!((g - boost).amax() < 1e-12);
    }

    #[test]
    fn frame_contract_holds_for_generic_input() {
        // A point and direction with no special alignment.
        let spatial = DVector::from_vec(vec![0.0, 0.4, -0.7, 0.2]);
        let mut p = spatial.clone();
        p[0] = f64::sqrt(1.0 + spatial.norm_squared());
        let mut u = DVector::from_vec(vec![0.0, 1.0, 0.3, -0.4]);
        u[0] = 0.0;
        // Project u tangent to p and normalize.
        let c = inner(&u, &p).unwrap();
        u += &p * c;
        let nu = inner(&u, &u).unwrap().sqrt();
        u /= nu;

        let g = lorentz_frame(&p, &u).unwrap();
        assert!(is_in_group(&g, 1e-10));
        assert!((g.column(0).clone_owned() - &p).amax() < 1e-12);
        assert!((g.column(1).clone_owned() - &u).amax() < 1e-12);
    }

    #[test]
    fn frame_rejects_degenerate_input() {
        let e0 = ambient_unit(4, 0);
        assert!(lorentz_frame(&e0, &e0).is_err());
    }

    #[test]
    fn algebra_membership_is_validated() {
        let mut m = DMatrix::zeros(4, 4);
        m[(1, 2)] = 1.0;
        m[(2, 1)] = 1.0; // symmetric spatial block: not in so(1,3)
        assert!(AlgebraElement::new(m).is_err());
    }
}
