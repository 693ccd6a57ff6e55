//! Exact real-root machinery: Sturm counting, root isolation with
//! multiplicities, real stability, spectral-radius enclosures, interlacing
//! and the adjacency/Coxeter eigenvalue correspondence.

mod correspondence;
mod sturm;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::numeric::{format_decimal, format_rational, ten_pow_neg, BigRational, IntPolynomial};

pub use correspondence::{adjacency_to_coxeter_enclosure, correspondence_check};
pub use sturm::SturmChain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("polynomial has no real roots")]
    NoRealRoots,
    #[error("degree mismatch: need deg q = deg p + 1, got {p} and {q}")]
    DegreeMismatch { p: usize, q: usize },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// `10^-9`
pub fn default_epsilon() -> BigRational {
    ten_pow_neg(9)
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.hi, -&self.lo)
    }

    /// Decimal outer bounds with `places` digits.
    pub fn to_decimal_string(&self, places: usize) -> String {
        format!(
            "[{}, {}]",
            format_decimal(&self.lo, places, false),
            format_decimal(&self.hi, places, true)
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalInterval", 2)?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.end()
    }
}

/// One distinct real root. A point interval is the exact root; otherwise the
/// root lies strictly inside and neither endpoint is a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: RationalInterval,
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct RootIsolation {
    pub roots: Vec<IsolatedRoot>,
    pub squarefree_part: IntPolynomial,
    pub degree: usize,
}

impl RootIsolation {
    /// Real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.real_root_count() == self.degree
    }

    /// Intervals expanded by multiplicity, increasing.
    pub fn with_multiplicity(&self) -> Vec<&RationalInterval> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(&r.interval, r.multiplicity))
            .collect()
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn mid(lo: &BigRational, hi: &BigRational) -> BigRational {
    (lo + hi) * half()
}

fn require_nonzero(p: &IntPolynomial) -> Result<(), SpectraError> {
    if p.is_zero() {
        Err(SpectraError::ZeroPolynomial)
    } else {
        Ok(())
    }
}

fn require_positive(eps: &BigRational) -> Result<(), SpectraError> {
    if eps <= &BigRational::zero() {
        Err(SpectraError::NonPositiveEpsilon)
    } else {
        Ok(())
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize, SpectraError> {
    require_nonzero(p)?;
    Ok(SturmChain::new(&p.squarefree_part()).count(&interval.lo, &interval.hi))
}

/// Shrinks an open isolating interval `(lo, hi)` of a simple root of the
/// chain head, where `head(hi) != 0`, until its width is at most `eps` or
/// the root is hit exactly. Also moves `lo` off any root of the head.
fn refine(
    head: &IntPolynomial,
    mut lo: BigRational,
    mut hi: BigRational,
    eps: Option<&BigRational>,
) -> RationalInterval {
    let sign_hi = head.sign_at(&hi);
    debug_assert_ne!(sign_hi, Ordering::Equal);
    loop {
        let lo_ok = head.sign_at(&lo) != Ordering::Equal;
        let narrow = eps.is_none_or(|e| &(&hi - &lo) <= e);
        if lo_ok && narrow {
            return RationalInterval::new(lo, hi);
        }
        let m = mid(&lo, &hi);
        match head.sign_at(&m) {
            Ordering::Equal => return RationalInterval::point(m),
            s if s == sign_hi => hi = m,
            _ => lo = m,
        }
    }
}

/// Splits `(lo, hi]` holding `count` distinct roots into single-root pieces,
/// in increasing order.
fn split(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let count = v_lo - v_hi;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((lo, hi));
        return;
    }
    let m = mid(&lo, &hi);
    let v_m = chain.variations_at(&m);
    split(chain, lo, m.clone(), v_lo, v_m, out);
    split(chain, m, hi, v_m, v_hi, out);
}

fn single_root_interval(
    head: &IntPolynomial,
    lo: BigRational,
    hi: BigRational,
    eps: Option<&BigRational>,
) -> RationalInterval {
    if head.sign_at(&hi) == Ordering::Equal {
        RationalInterval::point(hi)
    } else {
        refine(head, lo, hi, eps)
    }
}

/// Multiplicity in the source polynomial of the one root inside `interval`.
fn multiplicity(factors: &[(IntPolynomial, usize)], interval: &RationalInterval) -> usize {
    let k = multiplicity_or_zero(factors, interval);
    assert!(k > 0, "isolated root belongs to some squarefree factor");
    k
}

fn isolate_impl(p: &IntPolynomial, eps: Option<&BigRational>) -> RootIsolation {
    let sqf = p.squarefree_part();
    let degree = p.degree().unwrap_or(0);
    if sqf.is_constant() {
        return RootIsolation {
            roots: Vec::new(),
            squarefree_part: sqf,
            degree,
        };
    }
    let factors = p.squarefree_decomposition();
    let chain = SturmChain::new(&sqf);
    let b = sqf.cauchy_bound();
    let lo = -b.clone();
    let mut pieces = Vec::new();
    let (v_lo, v_hi) = (chain.variations_at(&lo), chain.variations_at(&b));
    split(&chain, lo, b, v_lo, v_hi, &mut pieces);
    let roots = pieces
        .into_iter()
        .map(|(lo, hi)| {
            let mut interval = single_root_interval(&sqf, lo, hi, eps);
            if !interval.is_point() {
                if let Some(r) = snap_rational_root(&sqf, &interval) {
                    interval = RationalInterval::point(r);
                }
            }
            let multiplicity = multiplicity(&factors, &interval);
            IsolatedRoot {
                interval,
                multiplicity,
            }
        })
        .collect();
    RootIsolation {
        roots,
        squarefree_part: sqf,
        degree,
    }
}

/// The rational with the least denominator in `[lo, hi]` (continued fractions).
fn simplest_rational(lo: &BigRational, hi: &BigRational) -> BigRational {
    let zero = BigRational::zero();
    if lo <= &zero && &zero <= hi {
        return zero;
    }
    if hi < &zero {
        return -simplest_rational(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if &next <= hi {
        return next;
    }
    fl.clone() + simplest_rational(&(hi - &fl).recip(), &(lo - &fl).recip()).recip()
}

/// A rational root of `head` inside an isolating interval, if the simplest
/// rational there is one. Catches every root whose denominator is small
/// compared to the interval width.
fn snap_rational_root(head: &IntPolynomial, interval: &RationalInterval) -> Option<BigRational> {
    let r = simplest_rational(&interval.lo, &interval.hi);
    (head.sign_at(&r) == Ordering::Equal).then_some(r)
}

/// Isolating intervals of width at most `eps`, one per distinct real root,
/// with multiplicities.
pub fn isolate_real_roots(
    p: &IntPolynomial,
    eps: &BigRational,
) -> Result<RootIsolation, SpectraError> {
    require_nonzero(p)?;
    require_positive(eps)?;
    Ok(isolate_impl(p, Some(eps)))
}

/// Isolation without a width requirement: intervals only separate the roots.
pub fn isolate_real_roots_coarse(p: &IntPolynomial) -> Result<RootIsolation, SpectraError> {
    require_nonzero(p)?;
    Ok(isolate_impl(p, None))
}

/// Every complex root is real (counted with multiplicity).
pub fn is_real_rooted(p: &IntPolynomial) -> Result<bool, SpectraError> {
    require_nonzero(p)?;
    Ok(p.squarefree_decomposition()
        .iter()
        .all(|(f, _)| SturmChain::new(f).count_all() == f.degree().unwrap()))
}

/// Real-rooted with every root strictly positive.
pub fn is_real_stable(p: &IntPolynomial) -> Result<bool, SpectraError> {
    if !is_real_rooted(p)? {
        return Ok(false);
    }
    let chain = SturmChain::new(&p.squarefree_part());
    Ok(chain.count_at_or_below(&BigRational::zero()) == 0)
}

/// Real-rooted with every root strictly negative.
pub fn has_only_negative_roots(p: &IntPolynomial) -> Result<bool, SpectraError> {
    is_real_stable(&p.reflect())
}

/// Largest real root, to width `eps`.
pub fn max_real_root(
    p: &IntPolynomial,
    eps: &BigRational,
) -> Result<RationalInterval, SpectraError> {
    require_nonzero(p)?;
    require_positive(eps)?;
    let sqf = p.squarefree_part();
    if sqf.is_constant() {
        return Err(SpectraError::NoRealRoots);
    }
    let chain = SturmChain::new(&sqf);
    let mut hi = sqf.cauchy_bound();
    let mut lo = -hi.clone();
    let v_hi = chain.variations_at(&hi);
    if chain.variations_at(&lo) == v_hi {
        return Err(SpectraError::NoRealRoots);
    }
    // invariant: the top root lies in (lo, hi]
    loop {
        if chain.variations_at(&lo) - v_hi == 1 {
            let interval = single_root_interval(&sqf, lo, hi, Some(eps));
            if !interval.is_point() {
                if let Some(r) = snap_rational_root(&sqf, &interval) {
                    return Ok(RationalInterval::point(r));
                }
            }
            return Ok(interval);
        }
        let m = mid(&lo, &hi);
        if chain.variations_at(&m) > v_hi {
            lo = m;
        } else {
            hi = m;
        }
    }
}

/// A polynomial whose largest real root is the largest root modulus of the
/// real-rooted `p`. The product `p(t) p(-t)` is only formed when roots of
/// both signs occur.
fn radius_polynomial(p: &IntPolynomial) -> IntPolynomial {
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf);
    let zero = BigRational::zero();
    if chain.count_above(&zero) == 0 {
        p.reflect()
    } else if chain.count_at_or_below(&zero) == 0
        || (chain.count_at_or_below(&zero) == 1 && sqf.sign_at(&zero) == Ordering::Equal)
    {
        p.clone()
    } else {
        p * &p.reflect()
    }
}

/// Enclosure of `max |r|` over the roots of a real-rooted `p`.
pub fn spectral_radius_enclosure(
    p: &IntPolynomial,
    eps: &BigRational,
) -> Result<RationalInterval, SpectraError> {
    require_positive(eps)?;
    if !is_real_rooted(p)? {
        return Err(SpectraError::NotRealRooted);
    }
    if p.is_constant() {
        return Err(SpectraError::NoRealRoots);
    }
    max_real_root(&radius_polynomial(p), eps)
}

/// Exact comparison of the largest real roots of `p` and `q`.
pub fn compare_max_real_roots(
    p: &IntPolynomial,
    q: &IntPolynomial,
) -> Result<Ordering, SpectraError> {
    require_nonzero(p)?;
    require_nonzero(q)?;
    let (sp, sq) = (p.squarefree_part(), q.squarefree_part());
    let (cp, cq) = (SturmChain::new(&sp), SturmChain::new(&sq));
    if cp.count_all() == 0 || cq.count_all() == 0 {
        return Err(SpectraError::NoRealRoots);
    }
    let s = (p * q).squarefree_part();
    let chain = SturmChain::new(&s);
    let mut hi = s.cauchy_bound();
    let mut lo = -hi.clone();
    let v_hi = chain.variations_at(&hi);
    while chain.variations_at(&lo) - v_hi > 1 {
        let m = mid(&lo, &hi);
        if chain.variations_at(&m) > v_hi {
            lo = m;
        } else {
            hi = m;
        }
    }
    // (lo, hi] holds only the overall top root; see which inputs vanish there
    let p_has = cp.count(&lo, &hi) == 1;
    let q_has = cq.count(&lo, &hi) == 1;
    Ok(match (p_has, q_has) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => unreachable!("top root of p*q is a root of p or q"),
    })
}

/// Exact comparison of the spectral radii of two real-rooted polynomials.
pub fn compare_spectral_radii(
    p: &IntPolynomial,
    q: &IntPolynomial,
) -> Result<Ordering, SpectraError> {
    for x in [p, q] {
        if !is_real_rooted(x)? {
            return Err(SpectraError::NotRealRooted);
        }
        if x.is_constant() {
            return Err(SpectraError::NoRealRoots);
        }
    }
    compare_max_real_roots(&radius_polynomial(p), &radius_polynomial(q))
}

/// Position of each root of `p` and `q` in the merged increasing order of
/// distinct roots, expanded by multiplicity.
fn merged_ranks(p: &IntPolynomial, q: &IntPolynomial) -> (Vec<usize>, Vec<usize>) {
    let iso = isolate_impl(&(p * q), None);
    let fp = p.squarefree_decomposition();
    let fq = q.squarefree_decomposition();
    let mut rp = Vec::new();
    let mut rq = Vec::new();
    for (rank, root) in iso.roots.iter().enumerate() {
        let mp = multiplicity_or_zero(&fp, &root.interval);
        let mq = multiplicity_or_zero(&fq, &root.interval);
        rp.extend(std::iter::repeat_n(rank, mp));
        rq.extend(std::iter::repeat_n(rank, mq));
    }
    (rp, rq)
}

fn multiplicity_or_zero(factors: &[(IntPolynomial, usize)], interval: &RationalInterval) -> usize {
    factors
        .iter()
        .find(|(f, _)| {
            if interval.is_point() {
                f.sign_at(&interval.lo) == Ordering::Equal
            } else {
                f.sign_at(&interval.lo) != f.sign_at(&interval.hi)
            }
        })
        .map_or(0, |(_, k)| *k)
}

/// Exact check of `β₁ ≤ α₁ ≤ β₂ ≤ ⋯ ≤ αₛ ≤ βₛ₊₁` for the roots `α` of `p` and
/// `β` of `q`, counted with multiplicity.
pub fn interlace_check(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool, SpectraError> {
    require_nonzero(p)?;
    require_nonzero(q)?;
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    if dq != dp + 1 {
        return Err(SpectraError::DegreeMismatch { p: dp, q: dq });
    }
    if !is_real_rooted(p)? || !is_real_rooted(q)? {
        return Err(SpectraError::NotRealRooted);
    }
    let (alpha, beta) = merged_ranks(p, q);
    Ok((0..dp).all(|i| beta[i] <= alpha[i] && alpha[i] <= beta[i + 1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{parse_rational, rational};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn eps6() -> BigRational {
        ten_pow_neg(6)
    }

    #[test]
    fn sturm_count_examples() {
        let i = |a, b| RationalInterval::new(rational(a, 1), rational(b, 1));
        assert_eq!(sturm_count(&p(&[1, -3, 1]), &i(0, 3)), Ok(2));
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &i(-10, 10)), Ok(0));
        assert_eq!(sturm_count(&p(&[1, -2, 1]), &i(0, 2)), Ok(1));
        assert_eq!(
            sturm_count(&IntPolynomial::zero(), &i(0, 1)),
            Err(SpectraError::ZeroPolynomial)
        );
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_real_roots(&p(&[1, 3, 1]), &eps6()).unwrap();
        assert_eq!(iso.roots.len(), 2);
        assert!(
            iso.roots[0].interval.lo < q("-2.618033") && iso.roots[0].interval.hi > q("-2.618035")
        );
        assert!(
            iso.roots[1].interval.lo < q("-0.381965") && iso.roots[1].interval.hi > q("-0.381967")
        );
        for r in &iso.roots {
            assert!(r.interval.width() <= eps6());
            assert_eq!(r.multiplicity, 1);
        }

        let iso = isolate_real_roots(&p(&[1, 10, 27, 27, 10, 1]), &default_epsilon()).unwrap();
        assert_eq!(iso.roots.len(), 5);
        assert!(iso.is_real_rooted());
        assert!(iso
            .roots
            .iter()
            .all(|r| r.interval.hi < BigRational::zero()));
        let minus_one = rational(-1, 1);
        assert_eq!(
            iso.roots
                .iter()
                .filter(|r| r.interval.contains(&minus_one))
                .count(),
            1
        );

        let iso = isolate_real_roots(&p(&[-7, 1]), &default_epsilon()).unwrap();
        assert_eq!(
            iso.roots[0].interval,
            RationalInterval::point(rational(7, 1))
        );

        assert_eq!(
            isolate_real_roots(&p(&[1, 1]), &BigRational::zero()).unwrap_err(),
            SpectraError::NonPositiveEpsilon
        );
    }

    #[test]
    fn isolation_tracks_multiplicity() {
        // (t+1)^2 (t-2)^3 (t^2+1)
        let f = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 0, 1]);
        let g = &p(&[-2, 1]) * &(&p(&[-2, 1]) * &p(&[-2, 1]));
        let iso = isolate_real_roots(&(&f * &g), &eps6()).unwrap();
        let mults: Vec<usize> = iso.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![2, 3]);
        assert_eq!(iso.real_root_count(), 5);
        assert!(!iso.is_real_rooted());
    }

    #[test]
    fn rational_roots_are_exact() {
        // roots 0, 1/2, 1, 3/2, 2
        let f = [0, 1, 2, 3, 4]
            .iter()
            .fold(p(&[1]), |acc, &k| &acc * &p(&[-k, 2]));
        let iso = isolate_real_roots(&f, &eps6()).unwrap();
        assert_eq!(iso.roots.len(), 5);
        for (k, r) in iso.roots.iter().enumerate() {
            assert_eq!(r.interval, RationalInterval::point(rational(k as i64, 2)));
        }
        // alternating P₃: (t+1)(t²+4t+1)
        let iso = isolate_real_roots(&p(&[1, 5, 5, 1]), &default_epsilon()).unwrap();
        assert_eq!(
            iso.roots[1].interval,
            RationalInterval::point(rational(-1, 1))
        );
        let g = &p(&[-1, 0, 3]) * &p(&[-2, 0, 1]);
        let iso = isolate_real_roots_coarse(&g).unwrap();
        for w in iso.roots.windows(2) {
            assert!(w[0].interval.hi <= w[1].interval.lo);
        }
    }

    #[test]
    fn stability_examples() {
        assert_eq!(is_real_stable(&p(&[1, -3, 1])), Ok(true));
        assert_eq!(is_real_rooted(&p(&[1, 3, 1])), Ok(true));
        assert_eq!(is_real_stable(&p(&[1, 3, 1])), Ok(false));
        assert_eq!(is_real_rooted(&p(&[1, 0, 1])), Ok(false));
        assert_eq!(is_real_stable(&p(&[1, 0, 1])), Ok(false));
        assert_eq!(has_only_negative_roots(&p(&[1, 3, 1])), Ok(true));
        // a root at zero is neither positive nor negative
        assert_eq!(is_real_stable(&p(&[0, -1, 1])), Ok(false));
        assert_eq!(has_only_negative_roots(&p(&[0, 1, 1])), Ok(false));
    }

    #[test]
    fn spectral_radius_examples() {
        let e = default_epsilon();
        let r = spectral_radius_enclosure(&p(&[1, 3, 1]), &e).unwrap();
        assert!(r.width() <= e);
        assert!(r.contains(&q("2.6180339887")));
        assert_eq!(
            spectral_radius_enclosure(&p(&[-1, 1]), &e).unwrap(),
            RationalInterval::point(rational(1, 1))
        );
        let r = spectral_radius_enclosure(&p(&[1, 10, 27, 27, 10, 1]), &e).unwrap();
        assert!(r.lo > q("6.4054353") && r.hi < q("6.4054355"));
        // mixed signs: roots -3 and 2
        let r = spectral_radius_enclosure(&p(&[-6, 1, 1]), &e).unwrap();
        assert_eq!(r, RationalInterval::point(rational(3, 1)));
        assert_eq!(
            spectral_radius_enclosure(&p(&[1, 0, 1]), &e),
            Err(SpectraError::NotRealRooted)
        );
    }

    #[test]
    fn max_real_root_examples() {
        let e = default_epsilon();
        let r = max_real_root(&p(&[1, -3, 1]), &e).unwrap();
        assert!(r.contains(&q("2.6180339887")) && r.width() <= e);
        assert_eq!(
            max_real_root(&p(&[5, 1]), &e).unwrap(),
            RationalInterval::point(rational(-5, 1))
        );
        assert_eq!(
            max_real_root(&p(&[1, 0, 1]), &e),
            Err(SpectraError::NoRealRoots)
        );
        // Lehmer's polynomial
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let r = max_real_root(&lehmer, &e).unwrap();
        assert!(r.lo > q("1.176280") && r.hi < q("1.176282"));
    }

    #[test]
    fn exact_radius_comparison() {
        let a2 = p(&[1, 3, 1]);
        let p3 = p(&[1, 5, 5, 1]);
        assert_eq!(compare_spectral_radii(&a2, &p3), Ok(Ordering::Less));
        assert_eq!(compare_spectral_radii(&p3, &a2), Ok(Ordering::Greater));
        assert_eq!(
            compare_spectral_radii(&a2, &(&a2 * &p(&[1, 1]))),
            Ok(Ordering::Equal)
        );
        assert_eq!(
            compare_max_real_roots(&p(&[-2, 1]), &p(&[-2, 0, 1])),
            Ok(Ordering::Greater)
        );
    }

    #[test]
    fn interlacing_examples() {
        assert_eq!(interlace_check(&p(&[1, 3, 1]), &p(&[1, 5, 5, 1])), Ok(true));
        assert_eq!(
            interlace_check(&p(&[0, 3, 0, -4, 0, 1]), &p(&[0, 0, 0, 0, -9, 0, 1])),
            Ok(false)
        );
        assert_eq!(interlace_check(&p(&[-1, 1]), &p(&[0, -2, 1])), Ok(true));
        // shared roots handled exactly
        assert_eq!(interlace_check(&p(&[-1, 1]), &p(&[1, -2, 1])), Ok(true));
        assert_eq!(interlace_check(&p(&[-3, 1]), &p(&[0, -2, 1])), Ok(false));
        assert_eq!(
            interlace_check(&p(&[1, 3, 1]), &p(&[1, 3, 1])),
            Err(SpectraError::DegreeMismatch { p: 2, q: 2 })
        );
        assert_eq!(
            interlace_check(&p(&[1, 0, 1]), &p(&[1, 5, 5, 1])),
            Err(SpectraError::NotRealRooted)
        );
    }

    #[test]
    fn interval_rendering() {
        let i = RationalInterval::new(rational(1, 3), rational(1, 2));
        assert_eq!(i.to_string(), "[1/3, 1/2]");
        assert_eq!(i.to_decimal_string(3), "[0.333, 0.500]");
        let json = serde_json::to_string(&RationalInterval::point(rational(2, 1))).unwrap();
        assert_eq!(json, r#"{"lo":"2/1","hi":"2/1"}"#);
    }
}
