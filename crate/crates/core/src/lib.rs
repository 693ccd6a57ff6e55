//! Exact mixed-sign Coxeter transformations of bipartite graphs: reflection
//! products, Coxeter and Alexander polynomials, Seifert and monodromy
//! matrices, and certified spectral checks over rational arithmetic.

pub mod analysis;
pub mod coxeter;
pub mod fixtures;
pub mod graph;
pub mod numeric;
pub mod spectra;

pub use coxeter::{CoxeterError, CoxeterSystem};
pub use graph::{Bipartition, MixedSignGraph, Sign, Vertex};
pub use numeric::{BigInt, BigRational, IntMatrix, IntPolynomial, NumericError};
pub use spectra::{RationalInterval, RootIsolation, SpectraError};
