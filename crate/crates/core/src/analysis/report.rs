use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::coefficients::{log_concavity_check, sign_alternation_check, trapezoidal_check};
use super::AnalysisError;
use crate::coxeter::CoxeterSystem;
use crate::graph::{is_alternating_sign, MixedSignGraph};
use crate::numeric::{BigRational, IntPolynomial};
use crate::spectra::{
    has_only_negative_roots, is_real_stable, max_real_root, spectral_radius_enclosure,
    RationalInterval, SpectraError,
};

/// Serializes coefficients as plain JSON integers of any size.
fn coeffs_as_numbers<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.coeffs().len()))?;
    for c in p.coeffs() {
        let n: serde_json::Number = c.to_string().parse().map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub alternating: bool,
}

impl GraphSummary {
    pub fn of(g: &MixedSignGraph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edge_count(),
            alternating: is_alternating_sign(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polynomials {
    #[serde(serialize_with = "coeffs_as_numbers")]
    pub coxeter: IntPolynomial,
    #[serde(serialize_with = "coeffs_as_numbers")]
    pub alexander: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Every root of `Δ` real and positive.
    pub real_stable: bool,
    pub sign_alternating: bool,
    pub trapezoidal: bool,
    pub plateau_k: Option<usize>,
    pub log_concave: bool,
    /// All eigenvalues of the monodromy real and positive, the hypothesis of
    /// the bi-orderability criterion. Nothing about orderings is computed.
    pub biorderable_implied: bool,
    pub proof_identities_ok: bool,
}

/// Certified report for an alternating-sign graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub mode: &'static str,
    pub graph: GraphSummary,
    pub polynomials: Polynomials,
    pub flags: Flags,
    pub spectral_radius: RationalInterval,
    /// Not serialized; reported in the human-readable form only.
    #[serde(skip)]
    pub negative_spectrum: bool,
}

impl AnalysisReport {
    /// `real_stable ⇒ trapezoidal ∧ log_concave`.
    pub fn is_consistent(&self) -> bool {
        let f = &self.flags;
        !f.real_stable || (f.trapezoidal && f.log_concave)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalPolynomials {
    #[serde(serialize_with = "coeffs_as_numbers")]
    pub coxeter: IntPolynomial,
}

/// Reduced report for a bipartite graph whose signs do not alternate:
/// c(t) and its largest real root only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub mode: &'static str,
    pub graph: GraphSummary,
    pub polynomials: ClassicalPolynomials,
    pub max_real_root: Option<RationalInterval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Alternating(AnalysisReport),
    Classical(ClassicalReport),
}

impl Report {
    pub fn graph(&self) -> &GraphSummary {
        match self {
            Self::Alternating(r) => &r.graph,
            Self::Classical(r) => &r.graph,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

fn require_size(g: &MixedSignGraph) -> Result<(), AnalysisError> {
    if g.vertex_count() < 2 {
        Err(AnalysisError::TooSmall(g.vertex_count()))
    } else {
        Ok(())
    }
}

/// Full report for an alternating-sign graph with at least two vertices.
pub fn analyze_alternating(
    g: &MixedSignGraph,
    eps: &BigRational,
) -> Result<AnalysisReport, AnalysisError> {
    require_size(g)?;
    let sys = CoxeterSystem::alternating(g)?;
    let coxeter = sys.coxeter_polynomial();
    let alexander = sys.alexander_polynomial()?;
    let monodromy = sys.homological_monodromy()?;
    let trapezoid = trapezoidal_check(&alexander);
    let flags = Flags {
        real_stable: is_real_stable(&alexander)?,
        sign_alternating: sign_alternation_check(&alexander),
        trapezoidal: trapezoid.is_ok(),
        plateau_k: trapezoid.ok(),
        log_concave: log_concavity_check(&alexander),
        biorderable_implied: is_real_stable(&monodromy.charpoly())?,
        proof_identities_ok: sys.verify_proof_identities().is_ok(),
    };
    Ok(AnalysisReport {
        mode: "alternating",
        graph: GraphSummary::of(g),
        spectral_radius: spectral_radius_enclosure(&coxeter, eps)?,
        negative_spectrum: has_only_negative_roots(&coxeter)?,
        polynomials: Polynomials { coxeter, alexander },
        flags,
    })
}

/// Reduced report using the sign classes if they form a bipartition, else
/// the canonical 2-coloring.
pub fn analyze_classical(
    g: &MixedSignGraph,
    eps: &BigRational,
) -> Result<ClassicalReport, AnalysisError> {
    require_size(g)?;
    let sys = CoxeterSystem::for_graph(g)?;
    let coxeter = sys.coxeter_polynomial();
    let max_real_root = match max_real_root(&coxeter, eps) {
        Ok(r) => Some(r),
        Err(SpectraError::NoRealRoots) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(ClassicalReport {
        mode: "classical",
        graph: GraphSummary::of(g),
        polynomials: ClassicalPolynomials { coxeter },
        max_real_root,
    })
}

/// Full report for alternating-sign graphs, reduced report otherwise.
pub fn analyze(g: &MixedSignGraph, eps: &BigRational) -> Result<Report, AnalysisError> {
    if is_alternating_sign(g) {
        analyze_alternating(g, eps).map(Report::Alternating)
    } else {
        analyze_classical(g, eps).map(Report::Classical)
    }
}

/// `Δ(1)`, which is `±1` when the link is a knot.
pub fn alexander_at_one(report: &AnalysisReport) -> BigInt {
    report.polynomials.alexander.eval_int(&BigInt::from(1))
}
