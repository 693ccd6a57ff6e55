use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{BigRational, IntPolynomial, NumericError};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self, NumericError> {
        if entries.len() != n * n {
            return Err(NumericError::NotSquare {
                len: entries.len(),
                n,
            });
        }
        Ok(Self { n, entries })
    }

    /// Build from integer rows; panics on ragged input (intended for literals).
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), n, "matrix rows must have length {n}");
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        let n = self.n;
        &mut self.entries[i * n..(i + 1) * n]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| v.to_i64()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `P M Pᵀ` where row/column `perm[k]` of `self` becomes index `k`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut out = Self::zeros(n);
        for (a, &pa) in perm.iter().enumerate() {
            for (b, &pb) in perm.iter().enumerate() {
                out.entries[a * n + b] = self.get(pa, pb).clone();
            }
        }
        out
    }

    pub fn block_diagonal(a: &Self, b: &Self) -> Self {
        let n = a.n + b.n;
        let mut out = Self::zeros(n);
        for i in 0..a.n {
            for j in 0..a.n {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.n {
            for j in 0..b.n {
                out.set(a.n + i, a.n + j, b.get(i, j).clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &pivot * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        sign * &a[n * n - 1]
    }

    /// Exact inverse when it is integral (e.g. `det = ±1`), else an error.
    pub fn integer_inverse(&self) -> Result<Self, NumericError> {
        let n = self.n;
        let mut a: Vec<BigRational> = self
            .entries
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        let mut inv: Vec<BigRational> = Self::identity(n)
            .entries
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        for k in 0..n {
            let p = (k..n)
                .find(|&r| !a[r * n + k].is_zero())
                .ok_or(NumericError::Singular)?;
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                    inv.swap(k * n + j, p * n + j);
                }
            }
            let piv = a[k * n + k].clone();
            if !piv.is_one() {
                for j in 0..n {
                    a[k * n + j] /= &piv;
                    inv[k * n + j] /= &piv;
                }
            }
            for i in 0..n {
                if i == k || a[i * n + k].is_zero() {
                    continue;
                }
                let f = a[i * n + k].clone();
                for j in 0..n {
                    let d = &f * &a[k * n + j];
                    a[i * n + j] -= d;
                    let d = &f * &inv[k * n + j];
                    inv[i * n + j] -= d;
                }
            }
        }
        let entries = inv
            .into_iter()
            .map(|r| {
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err(NumericError::NonIntegralInverse)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { n, entries })
    }

    /// Characteristic polynomial `det(tI - M)` by the division-free Berkowitz
    /// recurrence over leading principal submatrices.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        // coefficients of det(tI - M_r), highest power first
        let mut c: Vec<BigInt> = vec![BigInt::one(), -self.get(0, 0)];
        for r in 1..n {
            // M_{r+1} = [[M_r, col], [row, a]]
            let a = self.get(r, r);
            let col: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row = &self.row(r)[..r];
            // toeplitz column: 1, -a, -row·col, -row·M·col, ..., -row·M^{r-1}·col
            let mut t = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-a);
            let mut v = col;
            for step in 0..r {
                let w: BigInt = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                t.push(-w);
                if step + 1 < r {
                    v = (0..r)
                        .map(|i| {
                            self.row(i)[..r]
                                .iter()
                                .zip(&v)
                                .filter(|(x, _)| !x.is_zero())
                                .map(|(x, y)| x * y)
                                .sum()
                        })
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate().take(i + 1) {
                    if !cj.is_zero() && !t[i - j].is_zero() {
                        *slot += &t[i - j] * cj;
                    }
                }
            }
            c = next;
        }
        c.reverse();
        IntPolynomial::new(c)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.n {
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            f.write_str("]")?;
            if i + 1 < self.n {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix({}x{})", self.n, self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: Self) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: Self) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: Self) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}
