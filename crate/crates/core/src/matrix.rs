//! Dense square matrices with exact entries and Gauss-Jordan inversion.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(order: usize) -> Self {
        Matrix {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.entries[i * order + i] = T::one();
        }
        m
    }

    pub fn from_fn(order: usize, mut entry: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zero(order);
        for r in 0..order {
            for c in 0..order {
                m.entries[r * order + c] = entry(r, c);
            }
        }
        m
    }

    /// Builds from rows; panics unless the shape is square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        Matrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        assert!(row < self.order && col < self.order);
        &self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        assert!(row < self.order);
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "order mismatch");
        let n = self.order;
        Self::from_fn(n, |r, c| {
            let mut acc = T::zero();
            for k in 0..n {
                acc = acc + self.entries[r * n + k].clone() * rhs.entries[k * n + c].clone();
            }
            acc
        })
    }

    /// Exact Gauss-Jordan inverse. Pivoting only skips zero pivots — with
    /// exact arithmetic there is no stability concern. A column with no
    /// nonzero pivot below the diagonal is reported as [`Error::Singular`].
    pub fn invert(&self) -> Result<Self> {
        let n = self.order;
        let mut left = self.entries.clone();
        let mut right = Self::identity(n).entries;
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !left[r * n + col].is_zero())
                .ok_or(Error::Singular)?;
            if pivot_row != col {
                for c in 0..n {
                    left.swap(pivot_row * n + c, col * n + c);
                    right.swap(pivot_row * n + c, col * n + c);
                }
            }
            let pivot = left[col * n + col].clone();
            for c in 0..n {
                left[col * n + c] = left[col * n + c].clone() / pivot.clone();
                right[col * n + c] = right[col * n + c].clone() / pivot.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = left[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    left[r * n + c] =
                        left[r * n + c].clone() - factor.clone() * left[col * n + c].clone();
                    right[r * n + c] =
                        right[r * n + c].clone() - factor.clone() * right[col * n + c].clone();
                }
            }
        }
        Ok(Matrix {
            order: n,
            entries: right,
        })
    }
}
