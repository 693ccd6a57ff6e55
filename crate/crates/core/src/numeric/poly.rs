use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BigRational, NumericError};

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored by ascending power and trailing zeros are always
/// stripped, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `t - root`
    pub fn linear_root(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// Coefficient vector read from the top down.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Palindromic or anti-palindromic coefficient vector (`t^n p(1/t) = ±p(t)`).
    pub fn is_reciprocal(&self) -> bool {
        let c = &self.coeffs;
        if c.is_empty() {
            return true;
        }
        let n = c.len();
        let same = (0..n).all(|i| c[i] == c[n - 1 - i]);
        let anti = (0..n).all(|i| c[i] == -&c[n - 1 - i]);
        same || anti
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `p / content(p)`, sign-normalized so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder `lc(d)^(deg p - deg d + 1) * p mod d`.
    ///
    /// Panics if `d` is zero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(mut dr) = self.degree() else {
            return Self::zero();
        };
        if dr < dd {
            return self.clone();
        }
        let steps = dr - dd + 1;
        let mut done = 0usize;
        while r.len() > dd && !r.is_empty() {
            dr = r.len() - 1;
            let lead = r[dr].clone();
            for c in r.iter_mut() {
                *c *= lc;
            }
            let shift = dr - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &lead * dc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            done += 1;
        }
        // Finish the scaling so the result is the canonical pseudo-remainder.
        let mut out = Self::new(r);
        if done < steps {
            let f = num_traits::pow(lc.clone(), steps - done);
            out = out.scale(&f);
        }
        out
    }

    /// Exact quotient over the integers, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let dn = self.degree().unwrap();
        if dn < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Result<Self, NumericError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(NumericError::GcdOfZeros),
            (true, false) => Ok(other.primitive_part()),
            (false, true) => Ok(self.primitive_part()),
            (false, false) => {
                let (mut a, mut b) = if self.degree() >= other.degree() {
                    (self.primitive_part(), other.primitive_part())
                } else {
                    (other.primitive_part(), self.primitive_part())
                };
                loop {
                    if b.is_constant() {
                        return Ok(Self::one());
                    }
                    let r = a.pseudo_rem(&b);
                    if r.is_zero() {
                        return Ok(b);
                    }
                    a = b;
                    b = r.primitive_part();
                }
            }
        }
    }

    /// Squarefree decomposition `p = c * Π f_k^k` (Yun). Returns the non-constant
    /// primitive factors `f_k` with their multiplicities `k`, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.primitive_part();
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df).expect("nonzero");
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let mut c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut k = 1;
        while !b.is_constant() {
            let a = b.gcd(&d).expect("b nonzero");
            if !a.is_constant() {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides b");
            c = d.div_exact(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (`p / gcd(p, p')`, primitive).
    pub fn squarefree_part(&self) -> Self {
        let f = self.primitive_part();
        if f.is_constant() {
            return f;
        }
        let g = f.gcd(&f.derivative()).expect("nonzero");
        f.div_exact(&g).expect("gcd divides f")
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `p(x) * den(x)^deg`, an integer with the same sign as `p(x)`.
    pub fn eval_homogeneous(&self, x: &BigRational) -> BigInt {
        let (num, den) = (x.numer(), x.denom());
        if den.is_one() {
            return self.eval_int(num);
        }
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                acc = c.clone();
            } else {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        acc
    }

    /// Sign of `p(x)`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval_homogeneous(x).sign_ordering()
    }

    /// Sign of `p(x)` for `x -> +inf`.
    pub fn sign_at_pos_infinity(&self) -> Ordering {
        self.leading()
            .map_or(Ordering::Equal, |c| c.sign_ordering())
    }

    /// Sign of `p(x)` for `x -> -inf`.
    pub fn sign_at_neg_infinity(&self) -> Ordering {
        match self.degree() {
            None => Ordering::Equal,
            Some(d) => {
                let s = self.sign_at_pos_infinity();
                if d % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        }
    }

    /// Cauchy bound `1 + max|a_i| / |a_deg|`: every complex root has modulus below it.
    pub fn cauchy_bound(&self) -> BigRational {
        let Some(lc) = self.leading() else {
            return BigRational::one();
        };
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        BigRational::one() + BigRational::new(max, lc.abs())
    }

    /// Render with the given variable name, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mag.is_one() && i > 0 {
                out.push_str(&mono);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(&mono);
            }
        }
        out
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
