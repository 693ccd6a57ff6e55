//! Benchmark inputs.

use coxlink_core::analysis::random::random_alternating_graph;
use coxlink_core::graph::{labeled_tree_count, AlternatingTrees};
use coxlink_core::{CoxeterSystem, IntPolynomial, MixedSignGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A fixed spread of alternating trees on `n` vertices.
pub fn trees(n: usize, count: u64) -> Vec<MixedSignGraph> {
    let total = labeled_tree_count(n);
    let count = count.min(total);
    (0..count)
        .map(|k| AlternatingTrees::tree_at(n, k * total / count))
        .collect()
}

/// Seeded alternating graphs with extra edges.
pub fn graphs(n: usize, count: usize, seed: u64) -> Vec<MixedSignGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_alternating_graph(&mut rng, n))
        .collect()
}

pub fn coxeter_polynomials(gs: &[MixedSignGraph]) -> Vec<IntPolynomial> {
    gs.iter()
        .map(|g| {
            CoxeterSystem::alternating(g)
                .expect("alternating")
                .coxeter_polynomial()
        })
        .collect()
}
