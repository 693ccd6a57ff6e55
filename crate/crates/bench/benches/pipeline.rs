use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use coxlink_bench::{coxeter_polynomials, graphs, trees};
use coxlink_core::analysis::{
    analyze_alternating, min_dilatation_search, verify_theorems, VerifyConfig,
};
use coxlink_core::spectra::{
    default_epsilon, interlace_check, isolate_real_roots, spectral_radius_enclosure,
};
use coxlink_core::CoxeterSystem;

fn coxeter(c: &mut Criterion) {
    let mut group = c.benchmark_group("coxeter");
    for n in [5, 8, 12] {
        let gs = graphs(n, 16, 7);
        group.bench_with_input(BenchmarkId::new("polynomial", n), &gs, |b, gs| {
            b.iter(|| {
                for g in gs {
                    black_box(CoxeterSystem::alternating(g).unwrap().coxeter_polynomial());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("proof_identities", n), &gs, |b, gs| {
            let systems: Vec<_> = gs
                .iter()
                .map(|g| CoxeterSystem::alternating(g).unwrap())
                .collect();
            b.iter(|| {
                for s in &systems {
                    black_box(s.verify_proof_identities().is_ok());
                }
            })
        });
    }
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let eps = default_epsilon();
    let mut group = c.benchmark_group("spectra");
    for n in [5, 8, 12] {
        let polys = coxeter_polynomials(&graphs(n, 16, 11));
        group.bench_with_input(BenchmarkId::new("isolate", n), &polys, |b, ps| {
            b.iter(|| {
                for p in ps {
                    black_box(isolate_real_roots(p, &eps).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("radius", n), &polys, |b, ps| {
            b.iter(|| {
                for p in ps {
                    black_box(spectral_radius_enclosure(p, &eps).unwrap());
                }
            })
        });
    }
    let small = coxeter_polynomials(&trees(7, 32));
    let large = coxeter_polynomials(&trees(8, 32));
    group.bench_function("interlace_7_8", |b| {
        b.iter(|| {
            for (p, q) in small.iter().zip(&large) {
                black_box(interlace_check(p, q).unwrap());
            }
        })
    });
    group.finish();
}

fn analysis(c: &mut Criterion) {
    let eps = default_epsilon();
    let gs = graphs(8, 8, 3);
    c.bench_function("analyze_8", |b| {
        b.iter(|| {
            for g in &gs {
                black_box(analyze_alternating(g, &eps).unwrap());
            }
        })
    });
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    let config = VerifyConfig {
        n_max: 6,
        trials: 20,
        ..VerifyConfig::default()
    };
    group.bench_function("verify_6", |b| {
        b.iter(|| black_box(verify_theorems(&config).unwrap()))
    });
    group.bench_function("min_search_6", |b| {
        b.iter(|| black_box(min_dilatation_search(6, false, &eps).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, coxeter, spectra, analysis);
criterion_main!(benches);
