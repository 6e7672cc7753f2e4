//! Seeded sampling helpers for the verification suites and tests.
//!
//! Everything is driven by `ChaCha8` streams derived from a user seed and a
//! stable label, so identical seeds reproduce identical checks.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hyperbolic::{exp_map, HPoint, HTangent, UnitTangent};
use crate::minkowski::{inner_unchecked, mat_exp, AlgebraElement};

/// FNV-1a, used to derive independent streams from check labels.
fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in label.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Deterministic RNG for a `(seed, label)` pair.
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(label))
}

/// Vector with components uniform in `[−scale, scale]`.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> DVector<f64> {
    DVector::from_fn(dim, |_, _| rng.gen_range(-scale..scale))
}

/// Unit vector in a generic direction.
pub fn random_unit_vector(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    loop {
        let v = random_vector(rng, dim, 1.0);
        let n = v.norm();
        if n > 0.1 {
            return v / n;
        }
    }
}

/// Antisymmetric `n×n` matrix with entries of size `scale`.
pub fn random_so_matrix(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.gen_range(-scale..scale);
            a[(i, j)] = v;
            a[(j, i)] = -v;
        }
    }
    a
}

/// Generic element of `so(1,n+1)` with all blocks populated.
pub fn random_algebra_element(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> AlgebraElement {
    let x = random_vector(rng, n, scale);
    let y = random_vector(rng, n, scale);
    let t = rng.gen_range(-scale..scale);
    let a = random_so_matrix(rng, n, scale);
    AlgebraElement::horizontal(&x)
        .add(&AlgebraElement::vertical(&y))
        .and_then(|e| e.add(&AlgebraElement::axis_boost(n).scaled(t)))
        .and_then(|e| e.add(&AlgebraElement::spatial(&a).expect("antisymmetric")))
        .expect("consistent dimensions")
}

/// Group element `exp(X)` for a random `X` with `‖X‖ ≤ scale`-ish.
pub fn random_group_element(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DMatrix<f64> {
    let x = random_algebra_element(rng, n, scale / (n as f64 + 2.0));
    mat_exp(&x, 1.0).expect("bounded argument")
}

/// Element of the isotropy group `G_o = exp(tZ)·diag(I₂, SO_n)`.
pub fn random_isotropy_element(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DMatrix<f64> {
    let t = rng.gen_range(-scale..scale);
    let boost = mat_exp(&AlgebraElement::axis_boost(n), t).expect("bounded");
    let rot = mat_exp(
        &AlgebraElement::spatial(&random_so_matrix(rng, n, scale)).expect("antisymmetric"),
        1.0,
    )
    .expect("bounded");
    boost * rot
}

/// Rotation of `ℝ^{n+1}` (stabilizer of `e₀` inside `G`), returned as the
/// `(n+1)×(n+1)` spatial block.
pub fn random_rotation(rng: &mut ChaCha8Rng, dim: usize, scale: f64) -> DMatrix<f64> {
    let a = random_so_matrix(rng, dim, scale);
    let mut r = DMatrix::identity(dim, dim);
    let mut term = DMatrix::identity(dim, dim);
    for k in 1..=25 {
        term = &term * &a / (k as f64);
        r += &term;
    }
    r
}

/// Point of `H^{n+1}` within distance `radius` of the origin.
pub fn random_hpoint(rng: &mut ChaCha8Rng, dim: usize, radius: f64) -> HPoint {
    let origin = HPoint::origin(dim);
    let mut dir = DVector::zeros(dim);
    let sph = random_unit_vector(rng, dim - 1);
    for i in 0..dim - 1 {
        dir[1 + i] = sph[i];
    }
    let r = rng.gen_range(0.0..radius);
    let w = HTangent::new(origin.clone(), dir * r).expect("tangent at origin");
    exp_map(&origin, &w).expect("within range")
}

/// Tangent vector at `p` with components of size `scale`.
pub fn random_tangent(rng: &mut ChaCha8Rng, p: &HPoint, scale: f64) -> HTangent {
    let raw = random_vector(rng, p.dim(), scale);
    let proj = crate::hyperbolic::project_tangent(p, &raw);
    HTangent::new(p.clone(), proj).expect("projected tangent")
}

/// Unit tangent at a random point within `radius` of the origin.
pub fn random_unit_tangent(rng: &mut ChaCha8Rng, dim: usize, radius: f64) -> UnitTangent {
    let p = random_hpoint(rng, dim, radius);
    loop {
        let t = random_tangent(rng, &p, 1.0);
        let n2 = inner_unchecked(t.vec(), t.vec());
        if n2 > 0.01 {
            return UnitTangent::new(p, t.vec() / n2.sqrt()).expect("unit tangent");
        }
    }
}

/// Tangent at `p` orthogonal to `u` (Jacobi-data slot).
pub fn random_orthogonal_tangent(
    rng: &mut ChaCha8Rng,
    u: &UnitTangent,
    scale: f64,
) -> HTangent {
    let raw = random_tangent(rng, u.base(), scale);
    let along = inner_unchecked(raw.vec(), u.vec());
    HTangent::new(u.base().clone(), raw.vec() - u.vec() * along).expect("orthogonal tangent")
}
