//! Dense exact matrices and the linear solvers behind every law-space
//! computation.
//!
//! A `Matrix` doubles as a linear map: column j is the image of the j-th
//! basis vector. All solvers run fraction-free-ish Gaussian elimination over
//! ℚ; results are exact, and the nullspace basis is canonicalized so golden
//! tests can compare outputs byte for byte.

use crate::scalar::{int, Scalar};
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

pub type LinearOp = Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("dimension mismatch: {0}")]
    Mismatch(String),
    #[error("matrix is singular")]
    Singular,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the map sending e_j to columns[j].
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Convenience constructor from integer rows, for fixtures and tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// Matrix product; as maps, `self.mul(g)` applies g first.
    pub fn mul(&self, g: &Matrix) -> Matrix {
        assert_eq!(self.cols, g.rows, "inner dimensions");
        let mut out = Matrix::zero(self.rows, g.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..g.cols {
                    let b = g.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(Scalar::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rref(self.clone()).1.len()
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (aug, pivots) = rref(aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(r, &c)| c != r) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// f after g as maps: compose(f, g) = f·g.
pub fn compose(f: &Matrix, g: &Matrix) -> Matrix {
    f.mul(g)
}

/// [f, g] = fg - gf.
pub fn commutator(f: &Matrix, g: &Matrix) -> Matrix {
    f.mul(g).sub(&g.mul(f))
}

/// In-place reduced row echelon form. Returns the reduced matrix and the
/// pivot column of each nonzero row, in row order (strictly increasing).
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if pivot_row != row {
            for j in 0..m.cols {
                let a = m.get(row, j).clone();
                let b = m.get(pivot_row, j).clone();
                m.set(row, j, b);
                m.set(pivot_row, j, a);
            }
        }
        let inv = Scalar::one() / m.get(row, col).clone();
        for j in col..m.cols {
            let x = m.get(row, j) * &inv;
            m.set(row, j, x);
        }
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col).clone();
            for j in col..m.cols {
                let x = m.get(r, j) - &factor * m.get(row, j);
                m.set(r, j, x);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

/// Exact basis of {v : Mv = 0}, canonicalized: the basis vectors, viewed as
/// rows, are themselves in reduced echelon form with pivot positions strictly
/// increasing (pivot-first ordering). Deterministic for golden tests.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    let n = m.cols;
    let (red, pivots) = rref(m.clone());
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -red.get(r, free).clone();
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return basis;
    }
    // Canonical form: echelonize the basis itself.
    let (echelon, pivs) = rref(Matrix::from_rows(basis));
    pivs.iter()
        .enumerate()
        .map(|(r, _)| (0..n).map(|j| echelon.get(r, j).clone()).collect())
        .collect()
}

/// True when v lies in the row span of the given basis.
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let mut rows: Vec<Vec<Scalar>> = basis.to_vec();
    let base_rank = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows.clone()).rank()
    };
    rows.push(v.to_vec());
    Matrix::from_rows(rows).rank() == base_rank
}
