//! Dense exact matrices: products and traces over any [`Ring`],
//! fraction-free rank over an [`IntegralDomain`], and reduced row echelon
//! form over a [`Field`].

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::scalar::{Field, IntegralDomain, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(height: usize, columns: &[Vec<T>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == height), "ragged columns");
        Self::from_fn(height, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        (0..e).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T: IntegralDomain> Matrix<T> {
    /// Rank by Bareiss fraction-free elimination. Every division is exact,
    /// so intermediate entries stay in `T`.
    pub fn rank_fraction_free(&self) -> usize {
        let mut a = self.clone();
        let mut prev = T::one();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let pivot = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                let factor = a[(r, col)].clone();
                for c in col..a.cols {
                    let v = pivot.clone() * a[(r, c)].clone() - factor.clone() * a[(rank, c)].clone();
                    a[(r, c)] = v / prev.clone();
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form. Pivots are chosen greedily from the left.
    pub fn rref(&self) -> Echelon<T> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = T::one() / a[(row, col)].clone();
            for c in col..a.cols {
                let v = a[(row, c)].clone() * inv.clone();
                a[(row, c)] = v;
            }
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in col..a.cols {
                    let v = a[(r, c)].clone() - factor.clone() * a[(row, c)].clone();
                    a[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Solve `self · X = rhs`. Returns `None` when some column of `rhs` is
    /// outside the column space; the solution is unique when `self` has full
    /// column rank.
    pub fn solve(&self, rhs: &Matrix<T>) -> Option<Matrix<T>> {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let aug = Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        });
        let ech = aug.rref();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(p, c)] = ech.reduced[(r, self.cols + c)].clone();
            }
        }
        Some(x)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out[(r, c)].clone() + a.clone() * rhs[(k, c)].clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows)
            .map(|r| &self.data[r * self.cols..(r + 1) * self.cols])
            .collect();
        f.debug_list().entries(rows).finish()
    }
}
