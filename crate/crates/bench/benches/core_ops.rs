use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fractal_nevanlinna::content::{brute_force_content, exact_content};
use fractal_nevanlinna::frostman::frostman_measure;
use fractal_nevanlinna::gauge::Gauge;
use fractal_nevanlinna::increasing::IncreasingFunction;
use fractal_nevanlinna::nevanlinna::LogRatio;
use fractal_nevanlinna::set::IntervalUnion;
use fractal_nevanlinna::Complex64;

fn cantor_gauge() -> Gauge {
    Gauge::power(1.0, 2f64.ln() / 3f64.ln(), 1.0).unwrap()
}

fn bench_content(c: &mut Criterion) {
    let g = cantor_gauge();
    let mut group = c.benchmark_group("content");
    for depth in [4u32, 6, 8] {
        let s = IntervalUnion::cantor_prefractal(depth, 1.0 / 3.0, 1.0).unwrap();
        group.bench_with_input(BenchmarkId::new("exact_prefractal", depth), &s, |b, s| {
            b.iter(|| exact_content(&g, black_box(s), f64::INFINITY).unwrap().value)
        });
    }
    let small = IntervalUnion::normalize(&[(0.0, 0.3125), (0.5, 0.875)], 1.0).unwrap();
    group.bench_function("brute_force_constrained", |b| {
        b.iter(|| brute_force_content(&g, black_box(&small), 0.3, 8).unwrap())
    });
    group.finish();
}

fn bench_frostman(c: &mut Criterion) {
    let g = cantor_gauge();
    let mut group = c.benchmark_group("frostman");
    for depth in [6u32, 8] {
        let s = IntervalUnion::cantor_prefractal(depth, 1.0 / 3.0, 1.0).unwrap();
        group.bench_with_input(BenchmarkId::new("construct", depth), &s, |b, s| {
            b.iter(|| frostman_measure(&g, black_box(s), 3, depth).unwrap().total_mass)
        });
    }
    group.finish();
}

fn bench_nevanlinna(c: &mut Criterion) {
    let u = LogRatio::new(
        0.2,
        vec![(Complex64::new(0.4, 0.1), 1), (Complex64::new(-0.3, 0.5), 2)],
        vec![(Complex64::new(0.6, -0.2), 1)],
        f64::INFINITY,
    )
    .unwrap();
    let mut group = c.benchmark_group("nevanlinna");
    group.bench_function("max_on_circle", |b| {
        b.iter(|| u.max_plus_on_circle(black_box(0.55)).value)
    });
    group.bench_function("circle_mean_positive", |b| {
        b.iter(|| u.circle_mean_positive(black_box(0.9), 1e-8).unwrap())
    });
    group.bench_function("characteristic", |b| {
        b.iter(|| u.characteristic(black_box(1.0), 2.0, 1e-8).unwrap())
    });
    group.finish();
}

fn bench_measures(c: &mut Criterion) {
    let staircase = IncreasingFunction::cantor_staircase(1.0, 1.0 / 3.0, 8, 1.0).unwrap();
    let mut group = c.benchmark_group("increasing");
    group.bench_function("modulus_staircase8", |b| {
        b.iter(|| staircase.modulus_of_continuity(black_box(0.04)))
    });
    group.bench_function("dini_staircase8", |b| {
        b.iter(|| staircase.dini_integral(black_box(4.0)).unwrap().value)
    });
    group.finish();
}

criterion_group!(benches, bench_content, bench_frostman, bench_nevanlinna, bench_measures);
criterion_main!(benches);
