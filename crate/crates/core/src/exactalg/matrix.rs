use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Rational, RationalPolynomial};

/// Square matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    /// Rejects empty input and ragged or non-square rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated low-order coefficients in the last column.
    pub fn companion(p: &RationalPolynomial) -> Result<Self> {
        let n = match p.degree() {
            Some(0) | None => return Err(Error::ConstantPolynomial),
            Some(d) => d,
        };
        let p = p.monic();
        let mut m = Self::zeros(n);
        for i in 1..n {
            m[(i, i - 1)] = Rational::one();
        }
        for i in 0..n {
            m[(i, n - 1)] = -p.coeff(i);
        }
        Ok(m)
    }

    /// Block-diagonal matrix with the given square blocks in order.
    pub fn block_diagonal(blocks: &[RationalMatrix]) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut m = Self::zeros(n);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m[(offset + i, offset + j)] = b[(i, j)].clone();
                }
            }
            offset += b.n;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| &self[(i, i)]).sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_dim(rhs)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = a[(col, col)].recip();
            a.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Some(inv)
    }

    /// `P⁻¹ · self · P`; `None` when `p` is singular.
    pub fn conjugate_by(&self, p: &Self) -> Result<Option<Self>> {
        self.same_dim(p)?;
        let Some(p_inv) = p.inverse() else {
            return Ok(None);
        };
        Ok(Some(p_inv.checked_mul(self)?.checked_mul(p)?))
    }

    /// Evaluates `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &RationalPolynomial) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Self::scalar(self.n, c.clone());
        }
        acc
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn scale_row(&mut self, row: usize, c: &Rational) {
        for j in 0..self.n {
            self[(row, j)] *= c;
        }
    }

    // row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.n {
            let delta = factor * &self[(source, j)];
            self[(target, j)] -= delta;
        }
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.n + j]
    }
}

// Operator forms panic on dimension mismatch, like indexing out of bounds.
impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix dimensions differ")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        RationalMatrix {
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

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        RationalMatrix {
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

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// `det(xI − A)` by the Faddeev–LeVerrier recurrence:
///
/// ```text
/// M₀ = 0,  c_n = 1
/// M_k = A·M_{k−1} + c_{n−k+1}·I
/// c_{n−k} = −tr(A·M_k) / k
/// ```
pub fn char_poly(a: &RationalMatrix) -> RationalPolynomial {
    let n = a.dim();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RationalMatrix::zeros(n);
    for k in 1..=n {
        let mut next = a * &m;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        m = next;
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Rational::from_integer(k.into());
    }
    RationalPolynomial::from_coeffs(coeffs)
}

/// The monic annihilating polynomial of least degree.
///
/// Flattens `A⁰, A¹, …` one at a time and row-reduces each against the
/// previous ones; the first power that reduces to zero gives the dependency,
/// whose coefficients are tracked alongside the reduction.
pub fn min_poly(a: &RationalMatrix) -> RationalPolynomial {
    let n = a.dim();
    // Each basis entry: (pivot column, reduced vector with 1 at pivot,
    // coefficients over powers expressing that vector).
    let mut basis: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = RationalMatrix::identity(n);
    for d in 0..=n {
        let mut vector = power.entries.clone();
        let mut combo = vec![Rational::zero(); d + 1];
        combo[d] = Rational::one();
        for (pivot, bvec, bcombo) in &basis {
            let factor = vector[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, b) in vector.iter_mut().zip(bvec) {
                *v -= &factor * b;
            }
            for (c, b) in combo.iter_mut().zip(bcombo) {
                *c -= &factor * b;
            }
        }
        match vector.iter().position(|v| !v.is_zero()) {
            None => return RationalPolynomial::from_coeffs(combo),
            Some(pivot) => {
                let inv = vector[pivot].recip();
                for v in &mut vector {
                    *v *= &inv;
                }
                for c in &mut combo {
                    *c *= &inv;
                }
                basis.push((pivot, vector, combo));
            }
        }
        power = &power * a;
    }
    unreachable!("the characteristic polynomial annihilates A by Cayley-Hamilton")
}
