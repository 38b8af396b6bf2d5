use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Exact integer scalar usable by the matrix routines.
///
/// Implemented for every signed integer type from `num-traits`; the crate
/// uses [`num_bigint::BigInt`] wherever entry growth is possible.
pub trait IntScalar: Integer + Signed + Clone + fmt::Debug {}

impl<T: Integer + Signed + Clone + fmt::Debug> IntScalar for T {}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ColumnMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn push_row(&mut self, row: Vec<T>) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::ColumnMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.entries.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    pub(crate) fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &T, from_col: usize) {
        for c in from_col..self.cols {
            let s = self.entries[src * self.cols + c].clone();
            if !s.is_zero() {
                let d = &mut self.entries[dst * self.cols + c];
                *d = d.clone() - q.clone() * s;
            }
        }
    }

    /// col[dst] -= q * col[src]
    pub(crate) fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &T, from_row: usize) {
        for r in from_row..self.rows {
            let s = self.entries[r * self.cols + src].clone();
            if !s.is_zero() {
                let d = &mut self.entries[r * self.cols + dst];
                *d = d.clone() - q.clone() * s;
            }
        }
    }

    pub(crate) fn add_row(&mut self, dst: usize, src: usize, from_col: usize) {
        for c in from_col..self.cols {
            let s = self.entries[src * self.cols + c].clone();
            let d = &mut self.entries[dst * self.cols + c];
            *d = d.clone() + s;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let e = &mut self.entries[r * self.cols + c];
            *e = -e.clone();
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}
