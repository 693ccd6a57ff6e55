//! Exhaustive and seeded verification sweeps over alternating-sign graphs.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use super::coefficients::{log_concavity_check, sign_alternation_check, trapezoidal_check};
use super::random::{random_extension_pair, random_inclusion_pair, trial_rng, TrialKind};
use super::AnalysisError;
use crate::coxeter::{alexander_from_coxeter, CoxeterSystem};
use crate::graph::{labeled_tree_count, AlternatingTrees, MixedSignGraph};
use crate::spectra::{
    compare_spectral_radii, correspondence_check, has_only_negative_roots, interlace_check,
    is_real_stable,
};

/// Every property the sweep certifies, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    CoxeterSymmetric,
    CoxeterUnimodular,
    SpectrumRealNegative,
    SumSquaredIsNegAdjacencySquared,
    SumSquaredIsTraceForm,
    MonodromyCharpoly,
    AlexanderFromCoxeter,
    Reciprocal,
    AlexanderRealStable,
    AlexanderSignAlternating,
    AlexanderTrapezoidal,
    AlexanderLogConcave,
    AdjacencyCorrespondence,
    ExtensionInterlacingCoxeter,
    ExtensionInterlacingAlexander,
    InclusionRadiusMonotone,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::CoxeterSymmetric,
        Check::CoxeterUnimodular,
        Check::SpectrumRealNegative,
        Check::SumSquaredIsNegAdjacencySquared,
        Check::SumSquaredIsTraceForm,
        Check::MonodromyCharpoly,
        Check::AlexanderFromCoxeter,
        Check::Reciprocal,
        Check::AlexanderRealStable,
        Check::AlexanderSignAlternating,
        Check::AlexanderTrapezoidal,
        Check::AlexanderLogConcave,
        Check::AdjacencyCorrespondence,
        Check::ExtensionInterlacingCoxeter,
        Check::ExtensionInterlacingAlexander,
        Check::InclusionRadiusMonotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CoxeterSymmetric => "coxeter_symmetric",
            Check::CoxeterUnimodular => "coxeter_unimodular",
            Check::SpectrumRealNegative => "spectrum_real_negative",
            Check::SumSquaredIsNegAdjacencySquared => "identity_neg_adjacency_squared",
            Check::SumSquaredIsTraceForm => "identity_two_plus_c_plus_c_inverse",
            Check::MonodromyCharpoly => "monodromy_charpoly_matches_neg_coxeter",
            Check::AlexanderFromCoxeter => "alexander_equals_signed_reflected_coxeter",
            Check::Reciprocal => "reciprocal",
            Check::AlexanderRealStable => "alexander_real_stable",
            Check::AlexanderSignAlternating => "alexander_sign_alternating",
            Check::AlexanderTrapezoidal => "alexander_trapezoidal",
            Check::AlexanderLogConcave => "alexander_log_concave",
            Check::AdjacencyCorrespondence => "adjacency_correspondence",
            Check::ExtensionInterlacingCoxeter => "extension_interlacing_coxeter",
            Check::ExtensionInterlacingAlexander => "extension_interlacing_alexander",
            Check::InclusionRadiusMonotone => "inclusion_radius_monotone",
        }
    }

    fn index(self) -> usize {
        Check::ALL.iter().position(|&c| c == self).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub n_max: usize,
    /// Seeded extension trials and inclusion trials, each, per size.
    pub trials: u64,
    pub seed: u64,
    /// One labeled tree per isomorphism class instead of all labeled trees.
    pub dedup: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_max: 6,
            trials: 50,
            seed: 1,
            dedup: false,
        }
    }
}

/// Where a counterexample came from; sorts so trees come before trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Tree,
    Correspondence,
    Extension,
    Inclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub source: Source,
    pub n: usize,
    /// Tree enumeration index, or trial number.
    pub index: u64,
    pub detail: String,
    /// Offending graphs in the text format; pairs are listed small first.
    pub graphs: Vec<String>,
}

impl Counterexample {
    fn key(&self) -> (usize, Source, u64, usize) {
        let check = Check::ALL
            .iter()
            .position(|c| c.name() == self.check)
            .unwrap_or(usize::MAX);
        (self.n, self.source, self.index, check)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub n: usize,
    pub trees: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub config: VerifyConfig,
    pub graphs_examined: u64,
    pub trees: Vec<SizeCount>,
    pub checks: Vec<CheckCount>,
    /// The least failure by `(n, source, index)`, so it does not depend on
    /// scheduling.
    pub counterexample: Option<Counterexample>,
    /// Kept out of the serialized form so output is reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, check: Check) -> &CheckCount {
        &self.checks[check.index()]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summaries always serialize")
    }
}

/// Per-check counters plus the least counterexample; merging is associative
/// and commutative.
#[derive(Debug, Clone)]
struct Tally {
    counts: Vec<(u64, u64)>,
    graphs: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn new() -> Self {
        Self {
            counts: vec![(0, 0); Check::ALL.len()],
            graphs: 0,
            first: None,
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.0 += b.0;
            a.1 += b.1;
        }
        self.graphs += other.graphs;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if b.key() < a.key() { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Recorder<'a> {
    tally: Tally,
    source: Source,
    n: usize,
    index: u64,
    graphs: &'a [&'a MixedSignGraph],
}

impl Recorder<'_> {
    fn record(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        let slot = &mut self.tally.counts[check.index()];
        if ok {
            slot.0 += 1;
            return;
        }
        slot.1 += 1;
        let cx = Counterexample {
            check: check.name(),
            source: self.source,
            n: self.n,
            index: self.index,
            detail: detail(),
            graphs: self.graphs.iter().map(|g| g.to_text()).collect(),
        };
        if self.tally.first.as_ref().is_none_or(|f| cx.key() < f.key()) {
            self.tally.first = Some(cx);
        }
    }
}

fn check_tree(n: usize, index: u64, t: &MixedSignGraph) -> Tally {
    let graphs = [t];
    let mut r = Recorder {
        tally: Tally::new(),
        source: Source::Tree,
        n,
        index,
        graphs: &graphs,
    };
    r.tally.graphs = 1;
    let sys = CoxeterSystem::alternating(t).expect("enumerated trees are alternating");
    let c = sys.c_bipartite();
    r.record(Check::CoxeterSymmetric, c.is_symmetric(), || {
        "C₊₋ not symmetric".into()
    });
    let det = c.determinant();
    r.record(
        Check::CoxeterUnimodular,
        det.abs() == BigInt::from(1),
        || format!("det C₊₋ = {det}"),
    );

    let cp = sys.coxeter_polynomial();
    let negative = has_only_negative_roots(&cp).unwrap_or(false);
    r.record(Check::SpectrumRealNegative, negative, || {
        format!("c(t) = {cp}")
    });

    let [neg_adj, _, trace] = sys.check_proof_identities();
    r.record(
        Check::SumSquaredIsNegAdjacencySquared,
        neg_adj.is_ok(),
        || neg_adj.clone().unwrap_err().to_string(),
    );
    r.record(Check::SumSquaredIsTraceForm, trace.is_ok(), || {
        trace.clone().unwrap_err().to_string()
    });

    let delta = match sys.homological_monodromy() {
        Ok(phi) => phi.charpoly(),
        Err(e) => {
            r.record(Check::MonodromyCharpoly, false, || e.to_string());
            return r.tally;
        }
    };
    let neg_c = (-c).charpoly();
    r.record(Check::MonodromyCharpoly, delta == neg_c, || {
        format!("charpoly φ* = {delta}, charpoly(-C₊₋) = {neg_c}")
    });
    let from_c = alexander_from_coxeter(&cp, n);
    r.record(Check::AlexanderFromCoxeter, delta == from_c, || {
        format!("Δ = {delta}, (-1)^n c(-t) = {from_c}")
    });
    r.record(
        Check::Reciprocal,
        cp.is_reciprocal() && delta.is_reciprocal(),
        || format!("c(t) = {cp}, Δ(t) = {delta}"),
    );
    r.record(
        Check::AlexanderRealStable,
        is_real_stable(&delta).unwrap_or(false),
        || format!("Δ(t) = {delta}"),
    );
    r.record(
        Check::AlexanderSignAlternating,
        sign_alternation_check(&delta),
        || format!("Δ(t) = {delta}"),
    );
    let trap = trapezoidal_check(&delta);
    r.record(Check::AlexanderTrapezoidal, trap.is_ok(), || {
        format!("Δ(t) = {delta}: {}", trap.clone().unwrap_err())
    });
    r.record(
        Check::AlexanderLogConcave,
        log_concavity_check(&delta),
        || format!("Δ(t) = {delta}"),
    );
    r.tally
}

fn check_correspondence(n: usize, index: u64, t: &MixedSignGraph) -> Tally {
    let graphs = [t];
    let mut r = Recorder {
        tally: Tally::new(),
        source: Source::Correspondence,
        n,
        index,
        graphs: &graphs,
    };
    let ok = correspondence_check(t);
    r.record(Check::AdjacencyCorrespondence, ok == Ok(true), || {
        format!("{ok:?}")
    });
    r.tally
}

fn check_extension(seed: u64, n: usize, trial: u64) -> Tally {
    let mut rng = trial_rng(seed, TrialKind::Extension, n, trial);
    let (base, ext) = random_extension_pair(&mut rng, n);
    let graphs = [&base, &ext];
    let mut r = Recorder {
        tally: Tally::new(),
        source: Source::Extension,
        n,
        index: trial,
        graphs: &graphs,
    };
    r.tally.graphs = 1;
    let small = CoxeterSystem::alternating(&base).expect("alternating");
    let large = CoxeterSystem::alternating(&ext).expect("alternating");
    let (p, q) = (small.coxeter_polynomial(), large.coxeter_polynomial());
    let res = interlace_check(&p, &q);
    r.record(Check::ExtensionInterlacingCoxeter, res == Ok(true), || {
        format!("c = {p}, c' = {q}: {res:?}")
    });
    let (dp, dq) = (
        small.alexander_polynomial().expect("alternating"),
        large.alexander_polynomial().expect("alternating"),
    );
    let res = interlace_check(&dp, &dq);
    r.record(
        Check::ExtensionInterlacingAlexander,
        res == Ok(true),
        || format!("Δ = {dp}, Δ' = {dq}: {res:?}"),
    );
    r.tally
}

fn check_inclusion(seed: u64, n: usize, trial: u64) -> Tally {
    let mut rng = trial_rng(seed, TrialKind::Inclusion, n, trial);
    let (small, large) = random_inclusion_pair(&mut rng, n);
    let graphs = [&small, &large];
    let mut r = Recorder {
        tally: Tally::new(),
        source: Source::Inclusion,
        n,
        index: trial,
        graphs: &graphs,
    };
    r.tally.graphs = 1;
    let p = CoxeterSystem::alternating(&small)
        .expect("alternating")
        .coxeter_polynomial();
    let q = CoxeterSystem::alternating(&large)
        .expect("alternating")
        .coxeter_polynomial();
    let cmp = compare_spectral_radii(&p, &q);
    r.record(
        Check::InclusionRadiusMonotone,
        matches!(cmp, Ok(Ordering::Less | Ordering::Equal)),
        || format!("c = {p}, c' = {q}: {cmp:?}"),
    );
    r.tally
}

/// Tree indices covered at size `n`.
fn tree_indices(n: usize, dedup: bool) -> Vec<u64> {
    if dedup {
        AlternatingTrees::new(n, true).map(|(i, _)| i).collect()
    } else {
        (0..labeled_tree_count(n)).collect()
    }
}

/// Runs every check over all alternating trees with `2..=n_max` vertices and
/// `trials` seeded extension and inclusion pairs per size. The adjacency
/// correspondence runs on one tree per isomorphism class, since both spectra
/// are invariant under relabeling.
pub fn verify_theorems(config: &VerifyConfig) -> Result<VerificationSummary, AnalysisError> {
    if config.n_max < 2 {
        return Err(AnalysisError::InvalidConfig(format!(
            "n_max must be at least 2, got {}",
            config.n_max
        )));
    }
    let start = Instant::now();
    let mut total = Tally::new();
    let mut trees = Vec::new();
    for n in 2..=config.n_max {
        let indices = tree_indices(n, config.dedup);
        trees.push(SizeCount {
            n,
            trees: indices.len() as u64,
        });
        let tally = indices
            .par_iter()
            .map(|&i| check_tree(n, i, &AlternatingTrees::tree_at(n, i)))
            .reduce(Tally::new, Tally::merge);
        total = total.merge(tally);

        let reps = tree_indices(n, true);
        let tally = reps
            .par_iter()
            .map(|&i| check_correspondence(n, i, &AlternatingTrees::tree_at(n, i)))
            .reduce(Tally::new, Tally::merge);
        total = total.merge(tally);

        let tally = (0..config.trials)
            .into_par_iter()
            .map(|t| check_extension(config.seed, n, t).merge(check_inclusion(config.seed, n, t)))
            .reduce(Tally::new, Tally::merge);
        total = total.merge(tally);
    }
    Ok(VerificationSummary {
        config: config.clone(),
        graphs_examined: total.graphs,
        trees,
        checks: Check::ALL
            .iter()
            .zip(&total.counts)
            .map(|(c, &(passed, failed))| CheckCount {
                name: c.name(),
                passed,
                failed,
            })
            .collect(),
        counterexample: total.first,
        wall_time: start.elapsed(),
    })
}
