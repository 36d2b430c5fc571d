use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use elchi_core::classical::z0_limit;
use elchi_core::qplane::{plane_lambda, to_poch};
use elchi_core::envalg::{named_element, NamedElement};
use elchi_core::schrodinger::{angular_state, plane_wave_state, AngularSpec, PlaneWaveSpec};

fn plane_waves(c: &mut Criterion) {
    let mut g = c.benchmark_group("plane_wave");
    g.sample_size(10);
    for order in [4u32, 8] {
        g.bench_with_input(BenchmarkId::new("state", order), &order, |b, &o| b.iter(|| plane_wave_state(&PlaneWaveSpec::new(o))));
        let psi = plane_wave_state(&PlaneWaveSpec::new(order));
        let casimir = named_element(NamedElement::Casimir);
        g.bench_with_input(BenchmarkId::new("lambda(C)", order), &psi, |b, psi| b.iter(|| plane_lambda(&casimir, black_box(psi))));
        g.bench_with_input(BenchmarkId::new("z0_limit", order), &psi, |b, psi| b.iter(|| z0_limit(black_box(psi))));
    }
    g.finish();
}

fn angular(c: &mut Criterion) {
    let mut g = c.benchmark_group("angular");
    g.sample_size(10);
    for max_l in [4u32, 8] {
        g.bench_with_input(BenchmarkId::new("state r=-2", max_l), &max_l, |b, &l| b.iter(|| angular_state(&AngularSpec::new(-2, l))));
        let phi = angular_state(&AngularSpec::new(-2, max_l));
        g.bench_with_input(BenchmarkId::new("to_poch", max_l), &phi, |b, phi| b.iter(|| to_poch(black_box(phi))));
    }
    g.finish();
}

criterion_group!(benches, plane_waves, angular);
criterion_main!(benches);
