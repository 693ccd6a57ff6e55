//! Seeded random alternating-sign graphs, vertex extensions and inclusions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{tree_from_prufer, vertex_extension, ExtensionMode, MixedSignGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrialKind {
    Extension = 1,
    Inclusion = 2,
}

/// Independent generator for one trial, so trials can run in any order.
pub fn trial_rng(seed: u64, kind: TrialKind, n: usize, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((kind as u64) << 56) | ((n as u64) << 40) | trial);
    rng
}

/// Uniform labeled tree on `n` vertices with up to a random fraction of the
/// remaining `+`/`-` pairs added as extra edges.
pub fn random_alternating_graph<R: Rng>(rng: &mut R, n: usize) -> MixedSignGraph {
    assert!(n >= 1);
    let code: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.random_range(0..n))
        .collect();
    let tree = tree_from_prufer(n, &code);
    let density: f64 = if rng.random_bool(0.5) {
        0.0
    } else {
        rng.random_range(0.0..0.5)
    };
    let mut extra = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if tree.sign(a) != tree.sign(b) && !tree.has_edge(a, b) && rng.random_bool(density) {
                extra.push((a, b));
            }
        }
    }
    tree.with_extra_edges(&extra)
        .expect("extra edges are new and cross the parts")
}

/// A vertex extension keeping the graph alternating-sign: the new vertex gets
/// a random sign and a random nonempty set of opposite-sign neighbors.
pub fn random_extension<R: Rng>(rng: &mut R, g: &MixedSignGraph) -> MixedSignGraph {
    let mut sign = if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    let mut candidates: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.sign(v) != sign)
        .collect();
    if candidates.is_empty() {
        sign = sign.flip();
        candidates = (0..g.vertex_count())
            .filter(|&v| g.sign(v) != sign)
            .collect();
    }
    let mut neighbors: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|_| rng.random_bool(0.5))
        .collect();
    if neighbors.is_empty() {
        neighbors.push(candidates[rng.random_range(0..candidates.len())]);
    }
    vertex_extension(g, sign, &neighbors, ExtensionMode::RequireAlternating)
        .expect("opposite-sign neighbors keep alternation")
}

/// A random `(base, extension)` pair where the extension has `n` vertices.
pub fn random_extension_pair<R: Rng>(rng: &mut R, n: usize) -> (MixedSignGraph, MixedSignGraph) {
    assert!(n >= 2);
    let base = random_alternating_graph(rng, n - 1);
    let ext = random_extension(rng, &base);
    (base, ext)
}

/// A random connected `small ⊆ large` pair with `large` on `n ≥ 2` vertices:
/// `small` drops either one non-bridge edge or one non-cut vertex.
pub fn random_inclusion_pair<R: Rng>(rng: &mut R, n: usize) -> (MixedSignGraph, MixedSignGraph) {
    assert!(n >= 2);
    let large = random_alternating_graph(rng, n);
    if rng.random_bool(0.5) {
        let mut edges = large.edges();
        edges.shuffle(rng);
        if let Some(small) = edges.iter().find_map(|&e| large.without_edges(&[e])) {
            return (small, large);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let small = order
        .iter()
        .find_map(|&v| large.without_vertex(v))
        .expect("a connected graph has a non-cut vertex");
    (small, large)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_alternating_sign, is_subgraph, is_vertex_extension};

    #[test]
    fn generated_graphs_are_valid() {
        for n in 2..=8 {
            for trial in 0..20 {
                let mut rng = trial_rng(7, TrialKind::Extension, n, trial);
                let (base, ext) = random_extension_pair(&mut rng, n);
                assert!(is_alternating_sign(&base) && is_alternating_sign(&ext));
                assert!(is_vertex_extension(&base, &ext));
                assert_eq!(ext.vertex_count(), n);

                let mut rng = trial_rng(7, TrialKind::Inclusion, n, trial);
                let (small, large) = random_inclusion_pair(&mut rng, n);
                assert!(is_subgraph(&small, &large));
                assert!(is_alternating_sign(&small) && is_alternating_sign(&large));
            }
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let draw = |kind, n, t| {
            let mut rng = trial_rng(1, kind, n, t);
            random_alternating_graph(&mut rng, 8).edges()
        };
        assert_eq!(
            draw(TrialKind::Extension, 8, 3),
            draw(TrialKind::Extension, 8, 3)
        );
        let distinct: std::collections::HashSet<_> =
            (0..30).map(|t| draw(TrialKind::Inclusion, 8, t)).collect();
        assert!(distinct.len() > 20);
    }
}
