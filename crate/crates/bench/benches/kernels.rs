use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use dirichlet_core::fixtures::{complete_join, path_network, wheatstone, wheel};
use dirichlet_core::harmonic::harmonic_solve;
use dirichlet_core::master::find_critical_points;
use dirichlet_core::network::closure_graph;
use dirichlet_core::orientations::enumerate_class;
use dirichlet_core::polynomials::{chromatic_polynomial, precoloring_interpolated, precoloring_polynomial};
use dirichlet_core::poset::mobius_characteristic;
use dirichlet_core::rational::int;
use dirichlet_core::{ClassMode, EdgeWeights, Limits, MasterFunction, SolverOptions};

fn polynomials(c: &mut Criterion) {
    let limits = Limits::default();
    let w7 = wheel(7);
    let closure = closure_graph(&w7);
    c.bench_function("chromatic/wheel7 closure", |b| b.iter(|| chromatic_polynomial(black_box(&closure))));
    c.bench_function("precoloring/wheel7", |b| b.iter(|| precoloring_polynomial(black_box(&w7)).unwrap()));
    c.bench_function("mobius/wheel7", |b| {
        b.iter(|| mobius_characteristic(black_box(&w7), &limits).unwrap())
    });
    let p8 = path_network(8);
    c.bench_function("interpolated/path8", |b| {
        b.iter(|| precoloring_interpolated(black_box(&p8), &limits).unwrap())
    });
}

fn orientations(c: &mut Criterion) {
    let limits = Limits::default();
    let w7 = wheel(7);
    c.bench_function("semicompatible/wheel7", |b| {
        b.iter(|| enumerate_class(black_box(&w7), ClassMode::Semicompatible, &limits).unwrap())
    });
}

fn harmonic(c: &mut Criterion) {
    let join = complete_join(3, 6);
    let k = join.graph().edge_count();
    let exact = EdgeWeights::uniform_exact(k, int(2));
    let float = EdgeWeights::uniform_float(k, 2.0);
    c.bench_function("harmonic exact/J(3,6)", |b| b.iter(|| harmonic_solve(black_box(&join), &exact).unwrap()));
    c.bench_function("harmonic float/J(3,6)", |b| b.iter(|| harmonic_solve(black_box(&join), &float).unwrap()));
}

fn critical_points(c: &mut Criterion) {
    let limits = Limits::default();
    let options = SolverOptions::default();
    let w = MasterFunction::unit(wheatstone());
    let w7 = MasterFunction::unit(wheel(7));
    c.bench_function("critical points/wheatstone", |b| {
        b.iter(|| find_critical_points(black_box(&w), &options, &limits).unwrap())
    });
    c.bench_function("critical points/wheel7", |b| {
        b.iter(|| find_critical_points(black_box(&w7), &options, &limits).unwrap())
    });
}

criterion_group!(benches, polynomials, orientations, harmonic, critical_points);
criterion_main!(benches);
