use criterion::{criterion_group, criterion_main, Criterion};
use omnf_bench::*;
use omnf_core::{equivariant_complement, normal_form};

fn bench_planar_normal_form(c: &mut Criterion) {
    let (jet, form) = planar_input();
    c.bench_function("normal_form planar r=7", |b| {
        b.iter(|| normal_form(&jet, &form, 7).unwrap())
    });
}

fn bench_equivariant_complement_k6(c: &mut Criterion) {
    let form = omega_coupled();
    let l = coupled_l();
    let g = coupled_group();
    c.bench_function("equivariant_complement 4 vars k=6", |b| {
        b.iter(|| equivariant_complement(&l, &form, &g, 6).unwrap())
    });
}

fn bench_reynolds_k6(c: &mut Criterion) {
    let g = coupled_group();
    let chi = g.sigma12();
    c.bench_function("reynolds projection 4 vars k=6", |b| {
        b.iter(|| g.reynolds_projection(&chi, 6).unwrap())
    });
}

criterion_group!(
    benches,
    bench_planar_normal_form,
    bench_equivariant_complement_k6,
    bench_reynolds_k6
);
criterion_main!(benches);
