//! Shared setup for the criterion benchmarks in `benches/`.

use nalgebra::DVector;

use hyplines::curves::{families, CurveInG};
use hyplines::linespace::{orbit_velocity, GTangent};
use hyplines::minkowski::AlgebraElement;

/// A generic velocity in `𝔥` for dimension `n`.
pub fn sample_velocity(n: usize) -> AlgebraElement {
    let x = DVector::from_fn(n, |i, _| 0.3 + 0.1 * i as f64);
    let y = DVector::from_fn(n, |i, _| 0.8 - 0.2 * i as f64);
    AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y)).expect("same dimension")
}

/// A generic tangent vector of `𝒢` at the reference geodesic.
pub fn sample_gtangent(n: usize) -> GTangent {
    let x = DVector::from_fn(n, |i, _| 0.5 - 0.3 * i as f64);
    let y = DVector::from_fn(n, |i, _| -0.2 + 0.4 * i as f64);
    orbit_velocity(&x, &y).expect("valid data")
}

/// A short sampled curve for the presentation and classification kernels.
pub fn sample_curve(n: usize) -> CurveInG {
    families::group_orbit(&sample_velocity(n), 2e-4, -0.02, 0.02).expect("valid family")
}
