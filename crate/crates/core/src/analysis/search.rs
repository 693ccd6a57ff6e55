//! Minimum spectral radius of `C₊₋` over alternating trees.

use std::cmp::Ordering;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::coxeter::CoxeterSystem;
use crate::graph::{labeled_tree_count, AlternatingTrees, MixedSignGraph};
use crate::numeric::{BigRational, IntPolynomial};
use crate::spectra::{
    compare_spectral_radii, interlace_check, spectral_radius_enclosure, RationalInterval,
};

#[derive(Debug, Clone)]
struct Candidate {
    n: usize,
    index: u64,
    poly: IntPolynomial,
    coarse: RationalInterval,
}

impl Candidate {
    fn key(&self) -> (usize, u64) {
        (self.n, self.index)
    }
}

/// The smaller radius; ties go to the least `(n, index)`. Coarse enclosures
/// decide most pairs and exact comparison settles the rest.
fn smaller(a: Candidate, b: Candidate) -> Candidate {
    let ord = if a.coarse.hi < b.coarse.lo {
        Ordering::Less
    } else if b.coarse.hi < a.coarse.lo {
        Ordering::Greater
    } else {
        compare_spectral_radii(&a.poly, &b.poly).expect("alternating spectra are real")
    };
    match ord {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if a.key() <= b.key() {
                a
            } else {
                b
            }
        }
    }
}

fn coarse_eps() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1024))
}

fn candidate(n: usize, index: u64) -> Candidate {
    let t = AlternatingTrees::tree_at(n, index);
    let poly = CoxeterSystem::alternating(&t)
        .expect("alternating")
        .coxeter_polynomial();
    let coarse =
        spectral_radius_enclosure(&poly, &coarse_eps()).expect("alternating spectra are real");
    Candidate {
        n,
        index,
        poly,
        coarse,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinSearchResult {
    pub n_max: usize,
    pub dedup: bool,
    pub trees_examined: u64,
    /// Width at most the requested epsilon.
    pub minimum: RationalInterval,
    pub attained_n: usize,
    pub attained_index: u64,
    #[serde(skip)]
    pub attained_by: MixedSignGraph,
    pub attained_graph: String,
    /// Leaf-deletion chains checked for nondecreasing radius and interlacing.
    pub monotonicity_checks: u64,
    pub monotonicity_ok: bool,
}

/// Deletes the highest-numbered leaf.
fn drop_leaf(t: &MixedSignGraph) -> MixedSignGraph {
    let leaf = (0..t.vertex_count())
        .rev()
        .find(|&v| t.neighbors(v).len() == 1)
        .expect("trees with two or more vertices have leaves");
    t.without_vertex(leaf)
        .expect("removing a leaf keeps a tree connected")
}

/// Walks leaf deletions down to two vertices, checking each step.
fn chain_is_monotone(t: &MixedSignGraph) -> (u64, bool) {
    let mut checks = 0;
    let mut large = t.clone();
    let mut q = CoxeterSystem::alternating(&large)
        .expect("alternating")
        .coxeter_polynomial();
    while large.vertex_count() > 2 {
        let small = drop_leaf(&large);
        let p = CoxeterSystem::alternating(&small)
            .expect("alternating")
            .coxeter_polynomial();
        checks += 1;
        let radius_ok = compare_spectral_radii(&p, &q).is_ok_and(|o| o != Ordering::Greater);
        if !radius_ok || interlace_check(&p, &q) != Ok(true) {
            return (checks, false);
        }
        large = small;
        q = p;
    }
    (checks, true)
}

/// Whether the enclosure contains `φ² = (3 + √5)/2`, decided exactly by a
/// sign change of `t² - 3t + 1` (the other root is below 1).
pub fn contains_golden_square(r: &RationalInterval) -> bool {
    let p = IntPolynomial::from_i64s(&[1, -3, 1]);
    let (a, b) = (p.sign_at(&r.lo), p.sign_at(&r.hi));
    r.lo > BigRational::from_integer(BigInt::from(1))
        && (a != b || a == Ordering::Equal || b == Ordering::Equal)
}

/// Minimum spectral-radius enclosure over alternating trees on `2..=n_max`
/// vertices, refined to width `eps`, with the attaining tree.
pub fn min_dilatation_search(
    n_max: usize,
    dedup: bool,
    eps: &BigRational,
) -> Result<MinSearchResult, AnalysisError> {
    if n_max < 2 {
        return Err(AnalysisError::InvalidConfig(format!(
            "n_max must be at least 2, got {n_max}"
        )));
    }
    let mut best: Option<Candidate> = None;
    let mut examined = 0u64;
    let mut checks = 0u64;
    let mut monotone = true;
    for n in 2..=n_max {
        let indices: Vec<u64> = if dedup {
            AlternatingTrees::new(n, true).map(|(i, _)| i).collect()
        } else {
            (0..labeled_tree_count(n)).collect()
        };
        examined += indices.len() as u64;
        let local = indices
            .par_iter()
            .map(|&i| candidate(n, i))
            .reduce_with(smaller)
            .expect("every size has a tree");
        best = Some(match best {
            Some(b) => smaller(b, local),
            None => local,
        });

        // spot checks spread evenly over the enumeration
        let count = labeled_tree_count(n);
        let spots: Vec<u64> = (0..8u64.min(count))
            .map(|k| k * count / 8.min(count))
            .collect();
        for i in spots {
            let (c, ok) = chain_is_monotone(&AlternatingTrees::tree_at(n, i));
            checks += c;
            monotone &= ok;
        }
    }
    let best = best.expect("n_max >= 2");
    let graph = AlternatingTrees::tree_at(best.n, best.index);
    Ok(MinSearchResult {
        n_max,
        dedup,
        trees_examined: examined,
        minimum: spectral_radius_enclosure(&best.poly, eps)?,
        attained_n: best.n,
        attained_index: best.index,
        attained_graph: graph.to_text(),
        attained_by: graph,
        monotonicity_checks: checks,
        monotonicity_ok: monotone,
    })
}
