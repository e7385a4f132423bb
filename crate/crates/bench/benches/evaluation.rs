use criterion::{black_box, criterion_group, criterion_main, Criterion};
use delta2d::{
    bessel_k0, bessel_y0, cross_section_closed, limit_extrapolate, EpsilonSchedule,
    RegularizationMode, ScatteringProblem,
};

fn special_functions(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for z in [1e-3, 0.5, 2.0] {
        group.bench_function(format!("k0/{z}"), |b| b.iter(|| bessel_k0(black_box(z))));
        group.bench_function(format!("y0/{z}"), |b| b.iter(|| bessel_y0(black_box(z))));
    }
    group.finish();
}

fn cross_sections(c: &mut Criterion) {
    let p = ScatteringProblem::new(1.3, -2.0).unwrap();
    let schedule = EpsilonSchedule::default();
    c.bench_function("closed", |b| b.iter(|| cross_section_closed(black_box(&p))));
    for mode in RegularizationMode::ALL {
        c.bench_function(&format!("limit/{mode}"), |b| {
            b.iter(|| limit_extrapolate(black_box(&p), &schedule, mode))
        });
    }
}

criterion_group!(benches, special_functions, cross_sections);
criterion_main!(benches);
