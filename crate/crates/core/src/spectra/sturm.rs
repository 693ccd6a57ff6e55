use std::cmp::Ordering;

use num_traits::Signed;

use crate::numeric::{BigRational, IntPolynomial};

/// Sturm sequence of a squarefree polynomial, with sign-preserving content
/// removal at each step.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

impl SturmChain {
    /// `p` must be nonzero and squarefree.
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut seq = vec![p.clone()];
        if p.is_constant() {
            return Self { seq };
        }
        seq.push(p.derivative());
        loop {
            let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
            if b.is_constant() {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1) * rem; the next member is -rem up to a positive factor.
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let lc_negative = b.leading().unwrap().is_negative();
            let flip = !(lc_negative && delta % 2 == 0);
            let content = r.content();
            let mut next = IntPolynomial::new(r.coeffs().iter().map(|c| c / &content).collect());
            if flip {
                next = -&next;
            }
            seq.push(next);
        }
        Self { seq }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.seq
    }

    pub fn head(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    fn changes(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign changes of the sequence at `x`, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::changes(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::changes(self.seq.iter().map(IntPolynomial::sign_at_pos_infinity))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::changes(self.seq.iter().map(IntPolynomial::sign_at_neg_infinity))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }

    /// Distinct real roots in `(x, +inf)`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_pos_infinity()
    }

    /// Distinct real roots in `(-inf, x]`.
    pub fn count_at_or_below(&self, x: &BigRational) -> usize {
        self.variations_at_neg_infinity() - self.variations_at(x)
    }
}
