//! Coefficient-shape checks on integer polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numeric::IntPolynomial;

/// Every coefficient `a_0..a_deg` is nonzero and consecutive signs differ.
pub fn sign_alternation_check(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    !c.is_empty()
        && c.iter().all(|a| !a.is_zero())
        && c.windows(2)
            .all(|w| w[0].is_positive() != w[1].is_positive())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrapezoidalFailure {
    ZeroPolynomial,
    ZeroCoefficient(usize),
    /// Magnitudes leave the increase/plateau/decrease shape at this index.
    NotTrapezoidal(usize),
}

impl fmt::Display for TrapezoidalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroPolynomial => write!(f, "zero polynomial"),
            Self::ZeroCoefficient(i) => write!(f, "coefficient of t^{i} is zero"),
            Self::NotTrapezoidal(i) => write!(f, "shape breaks at coefficient of t^{i}"),
        }
    }
}

/// `|a_0| < ⋯ < |a_k| = ⋯ = |a_{d-k}| > ⋯ > |a_d|`; returns the plateau index `k`.
pub fn trapezoidal_check(p: &IntPolynomial) -> Result<usize, TrapezoidalFailure> {
    let c = p.coeffs();
    if c.is_empty() {
        return Err(TrapezoidalFailure::ZeroPolynomial);
    }
    if let Some(i) = c.iter().position(Zero::is_zero) {
        return Err(TrapezoidalFailure::ZeroCoefficient(i));
    }
    let m: Vec<BigInt> = c.iter().map(Signed::abs).collect();
    let d = m.len() - 1;
    let mut k = 0;
    while k < d && m[k] < m[k + 1] {
        k += 1;
    }
    if d < 2 * k {
        return Err(TrapezoidalFailure::NotTrapezoidal(k));
    }
    for i in k..d - k {
        if m[i] != m[i + 1] {
            return Err(TrapezoidalFailure::NotTrapezoidal(i + 1));
        }
    }
    for i in d - k..d {
        if m[i] <= m[i + 1] {
            return Err(TrapezoidalFailure::NotTrapezoidal(i + 1));
        }
    }
    Ok(k)
}

/// Strict log-concavity `|a_i|² > |a_{i-1}| |a_{i+1}|` at every interior index,
/// with all coefficients nonzero.
pub fn log_concavity_check(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    if c.is_empty() || c.iter().any(Zero::is_zero) {
        return false;
    }
    c.windows(3)
        .all(|w| (&w[1] * &w[1]).abs() > (&w[0] * &w[2]).abs())
}
