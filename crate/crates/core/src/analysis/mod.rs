//! Coefficient certifications of the Alexander polynomial, per-graph reports,
//! theorem sweeps and the minimum spectral-radius search.

mod coefficients;
pub mod random;
mod report;
mod search;
mod verify;

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::spectra::SpectraError;

pub use coefficients::{
    log_concavity_check, sign_alternation_check, trapezoidal_check, TrapezoidalFailure,
};
pub use report::{
    alexander_at_one, analyze, analyze_alternating, analyze_classical, AnalysisReport,
    ClassicalPolynomials, ClassicalReport, Flags, GraphSummary, Polynomials, Report,
};
pub use search::{contains_golden_square, min_dilatation_search, MinSearchResult};
pub use verify::{
    verify_theorems, Check, CheckCount, Counterexample, SizeCount, Source, VerificationSummary,
    VerifyConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("analysis needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("{0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}
