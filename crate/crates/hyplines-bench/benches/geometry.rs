//! Benchmarks for the numeric kernels: matrix exponential, standard
//! presentation, causal classification, boundary isometry, and the
//! finite-difference Nijenhuis tensor.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nalgebra::DVector;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyplines::boundary::{jacobi_to_boundary, norm_mss, BoundaryPair, BoundaryTangent};
use hyplines::curves::{causal_classify_g1, standard_presentation};
use hyplines::hyperbolic::IdealPoint;
use hyplines::minkowski::mat_exp;
use hyplines_bench::{sample_curve, sample_gtangent, sample_velocity};

fn bench_mat_exp(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_exp");
    for n in [2usize, 6] {
        let vel = sample_velocity(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &vel, |b, vel| {
            b.iter(|| mat_exp(vel, 1.7).unwrap())
        });
    }
    group.finish();
}

fn bench_presentation(c: &mut Criterion) {
    let curve = sample_curve(2);
    let mid = curve.len() / 2;
    let anchor = curve.sample(mid).base().clone();
    c.bench_function("standard_presentation_201", |b| {
        b.iter(|| standard_presentation(&curve, mid, &anchor).unwrap())
    });

    let sp = standard_presentation(&curve, mid, &anchor).unwrap();
    c.bench_function("causal_classify_g1", |b| {
        b.iter(|| causal_classify_g1(&sp, mid, 1e-7).unwrap())
    });
}

fn bench_boundary(c: &mut Criterion) {
    let gt = sample_gtangent(2);
    c.bench_function("jacobi_to_boundary", |b| {
        b.iter(|| norm_mss(&jacobi_to_boundary(&gt).unwrap()).unwrap())
    });
}

fn bench_nijenhuis(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut unit = |dim: usize| {
        let v = DVector::from_fn(dim, |_, _| rng.gen_range(-1.0..1.0f64));
        let n = v.norm();
        v / n
    };
    let p = IdealPoint::new(unit(7)).unwrap();
    let q = IdealPoint::new(unit(7)).unwrap();
    let at = BoundaryPair::new(p, q).unwrap();
    let tangent = |at: &BoundaryPair, rng: &mut ChaCha8Rng| {
        let raw = |z: &IdealPoint, rng: &mut ChaCha8Rng| {
            let v = DVector::from_fn(7, |_, _| rng.gen_range(-1.0..1.0f64));
            &v - z.dir() * z.dir().dot(&v)
        };
        let xm = raw(at.p(), rng);
        let xp = raw(at.q(), rng);
        BoundaryTangent::new(at.clone(), xm, xp).unwrap()
    };
    let xi = tangent(&at, &mut rng);
    let eta = tangent(&at, &mut rng);
    c.bench_function("nijenhuis_fd", |b| {
        b.iter(|| hyplines::almoststruct::nijenhuis(&at, &xi, &eta, 1e-4).unwrap())
    });
}

criterion_group!(benches, bench_mat_exp, bench_presentation, bench_boundary, bench_nijenhuis);
criterion_main!(benches);
