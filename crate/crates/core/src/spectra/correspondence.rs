//! Eigenvalues `α` of the adjacency matrix and `λ` of `C₊₋` on an
//! alternating-sign graph are tied by `2 + λ + λ⁻¹ = -α²`. The branch
//! `λ = f(α) = -((α + √(α²+4)) / 2)²` is a strictly decreasing bijection from
//! the reals onto `(-∞, 0)`, so sorted `α` match reverse-sorted `λ`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{isolate_real_roots, RationalInterval, RootIsolation, SpectraError};
use crate::coxeter::CoxeterSystem;
use crate::graph::{adjacency_matrix, MixedSignGraph};
use crate::numeric::BigRational;

/// Rational bounds on `√x` for `x ≥ 0`, to within `2^-bits`.
fn sqrt_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    let d = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(&d * &d);
    let floor = scaled.floor().to_integer();
    let s = floor.sqrt();
    let lo = BigRational::new(s.clone(), d.clone());
    if scaled.is_integer() && &s * &s == floor {
        return (lo.clone(), lo);
    }
    let hi = BigRational::new(scaled.ceil().to_integer().sqrt() + 1, d);
    (lo, hi)
}

/// Bounds on `g(x) = (x + √(x²+4)) / 2`, which is positive and increasing.
fn g_bounds(x: &BigRational, bits: u32) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    if x.is_negative() {
        // g(x) g(-x) = 1
        let (lo, hi) = g_bounds(&-x, bits);
        return (hi.recip(), lo.recip());
    }
    let (slo, shi) = sqrt_bounds(&(x * x + BigRational::from_integer(BigInt::from(4))), bits);
    ((x + slo) / &two, (x + shi) / two)
}

/// Enclosure of `f([α])` for the branch `f(α) = -g(α)²`.
pub fn adjacency_to_coxeter_enclosure(alpha: &RationalInterval, bits: u32) -> RationalInterval {
    let (_, g_hi) = g_bounds(&alpha.hi, bits);
    let (g_lo, _) = g_bounds(&alpha.lo, bits);
    RationalInterval::new(-(&g_hi * &g_hi), -(&g_lo * &g_lo))
}

enum Match {
    Yes,
    No,
    Ambiguous,
}

fn match_spectra(adj: &RootIsolation, cox: &RootIsolation, bits: u32) -> Match {
    if !adj.is_real_rooted() || !cox.is_real_rooted() || adj.roots.len() != cox.roots.len() {
        return Match::No;
    }
    let images: Vec<RationalInterval> = adj
        .roots
        .iter()
        .map(|r| adjacency_to_coxeter_enclosure(&r.interval, bits))
        .collect();
    let mut ambiguous = false;
    for (i, (a, image)) in adj.roots.iter().zip(&images).enumerate() {
        let j = cox.roots.len() - 1 - i;
        let lambda = &cox.roots[j];
        if a.multiplicity != lambda.multiplicity || !image.intersects(&lambda.interval) {
            return Match::No;
        }
        let others = cox
            .roots
            .iter()
            .enumerate()
            .any(|(k, r)| k != j && image.intersects(&r.interval));
        ambiguous |= others;
    }
    if ambiguous {
        Match::Ambiguous
    } else {
        Match::Yes
    }
}

/// Certifies that the `C₊₋` spectrum is the image of the adjacency spectrum
/// under `2 + λ + λ⁻¹ = -α²` with matching multiplicities, and that the exact
/// matrix identities behind it hold.
pub fn correspondence_check(g: &MixedSignGraph) -> Result<bool, SpectraError> {
    let sys = CoxeterSystem::alternating(g)?;
    if sys.verify_proof_identities().is_err() {
        return Ok(false);
    }
    let a = adjacency_matrix(g).charpoly();
    let c = sys.coxeter_polynomial();
    let mut eps = BigRational::new(BigInt::one(), BigInt::from(1024));
    let mut bits = 32;
    for _ in 0..16 {
        let adj = isolate_real_roots(&a, &eps)?;
        let cox = isolate_real_roots(&c, &eps)?;
        match match_spectra(&adj, &cox, bits) {
            Match::Yes => return Ok(true),
            Match::No => return Ok(false),
            Match::Ambiguous => {
                eps /= BigRational::from_integer(BigInt::from(1 << 16));
                bits += 32;
            }
        }
    }
    Ok(false)
}
