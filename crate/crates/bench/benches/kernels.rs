use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wittkit::{det_omega, fast_apply, make_local_witt, omega, spectral_basis_nn, Signature, Variant};
use wittkit_bench::{dense_multivector, ramp};

fn geometric_product(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric_product");
    for (name, sig) in [("g13", Signature::g13()), ("g17", Signature::g_1n(7))] {
        let sig = sig.into_arc();
        let x = dense_multivector(&sig);
        let y = x.reverse();
        group.bench_function(name, |b| b.iter(|| black_box(&x) * black_box(&y)));
    }
    group.finish();
}

fn omega_apply(c: &mut Criterion) {
    let mut group = c.benchmark_group("omega_apply");
    for k in [4, 6] {
        let x = ramp(1 << k);
        let dense = omega(k, Variant::Plain).unwrap().entries;
        group.bench_with_input(BenchmarkId::new("dense", k), &x, |b, x| b.iter(|| dense.mul_vec(black_box(x)).unwrap()));
        group.bench_with_input(BenchmarkId::new("butterfly", k), &x, |b, x| {
            b.iter(|| fast_apply(k, Variant::Plain, black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_omega");
    group.sample_size(10);
    for k in [3, 5] {
        group.bench_function(BenchmarkId::from_parameter(k), |b| b.iter(|| det_omega(black_box(k)).unwrap()));
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    group.sample_size(10);
    group.bench_function("spectral_basis_g44", |b| b.iter(|| spectral_basis_nn(black_box(4)).unwrap()));
    group.bench_function("local_witt_8", |b| b.iter(|| make_local_witt(black_box(8)).unwrap()));
    group.finish();
}

criterion_group!(benches, geometric_product, omega_apply, determinant, construction);
criterion_main!(benches);
