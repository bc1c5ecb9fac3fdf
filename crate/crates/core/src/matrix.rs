//! Dense square matrices over an exact ring, with cofactor determinant,
//! adjugate, and (over the localized ring) exact inverse.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Binding, GaussRat, ScalarError, StarPoly, Symbol, UnitFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not invertible in the localized ring: det = {det}")]
    NotInvertibleInRing { det: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The ring operations the matrix code needs. Implemented by the scalar
/// domain, by polynomials over any symbol type, and by the localized ring.
pub trait RingOps: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl RingOps for GaussRat {
    fn ring_zero() -> Self {
        GaussRat::zero()
    }
    fn ring_one() -> Self {
        GaussRat::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl<S: Symbol> RingOps for StarPoly<S> {
    fn ring_zero() -> Self {
        StarPoly::zero()
    }
    fn ring_one() -> Self {
        StarPoly::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl RingOps for UnitFraction {
    fn ring_zero() -> Self {
        UnitFraction::zero()
    }
    fn ring_one() -> Self {
        UnitFraction::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// An `n x n` matrix, fully populated, row major. Equality is entrywise
/// equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// The matrices of the ambiguity groups: entries in the localized ring.
pub type RingMatrix = Matrix<UnitFraction>;

impl<T: RingOps> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix {
            n,
            entries: vec![T::ring_zero(); n * n],
        };
        for i in 0..n {
            m.entries[i * n + i] = T::ring_one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.n + col] = value;
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::ring_zero();
                for k in 0..n {
                    acc = acc.ring_add(&self.get(i, k).ring_mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { n, entries })
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.add(&other.map(|e| e.ring_neg()))
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == drop_row {
                continue;
            }
            for j in 0..n {
                if j == drop_col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { n: n - 1, entries }
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn det(&self) -> T {
        match self.n {
            0 => T::ring_one(),
            1 => self.get(0, 0).clone(),
            2 => self
                .get(0, 0)
                .ring_mul(self.get(1, 1))
                .ring_add(&self.get(0, 1).ring_mul(self.get(1, 0)).ring_neg()),
            _ => {
                let mut acc = T::ring_zero();
                for j in 0..self.n {
                    let e = self.get(0, j);
                    if e.ring_is_zero() {
                        continue;
                    }
                    let cof = e.ring_mul(&self.minor(0, j).det());
                    acc = if j % 2 == 0 {
                        acc.ring_add(&cof)
                    } else {
                        acc.ring_add(&cof.ring_neg())
                    };
                }
                acc
            }
        }
    }

    /// The adjugate: transpose of the cofactor matrix, so that
    /// `A * adj(A) = det(A) * Id` over any commutative ring.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let mut out = Matrix {
            n,
            entries: vec![T::ring_zero(); n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(j, i).det();
                let signed = if (i + j) % 2 == 0 {
                    cof
                } else {
                    cof.ring_neg()
                };
                out.entries[i * n + j] = signed;
            }
        }
        out
    }

    /// The number of nonzero entries in `self - other`, or `n*n + 1` on a
    /// dimension mismatch. Zero means equality.
    pub fn residual_entries(&self, other: &Self) -> usize {
        if self.n != other.n {
            return self.n * self.n + 1;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| a != b)
            .count()
    }
}

impl RingMatrix {
    /// Exact inverse as adjugate over determinant. Requires the determinant
    /// to be invertible in the localized ring.
    pub fn inverse(&self) -> Result<RingMatrix, MatrixError> {
        let det = self.det();
        let inv_det = det.inv().map_err(|_| MatrixError::NotInvertibleInRing {
            det: det.to_string(),
        })?;
        Ok(self.adjugate().map(|e| e.mul(&inv_det)))
    }

    /// Entrywise exact evaluation.
    pub fn substitute(&self, binding: &Binding) -> Result<Matrix<GaussRat>, MatrixError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.substitute(binding)?);
        }
        Ok(Matrix { n: self.n, entries })
    }

    /// Entries rendered as expression strings, row by row: the JSON wire
    /// form of a symbolic matrix.
    pub fn to_expr_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[ ")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.n + j])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
