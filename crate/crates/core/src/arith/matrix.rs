//! Dense exact matrices and row reduction.

use serde::{Deserialize, Serialize};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over an exact field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Ok(ExactMatrix { field, rows: nrows, cols, data })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        ExactMatrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for (c, o) in out_row.iter_mut().enumerate() {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        *o += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length must match matrix rows");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.get(k, c);
                if !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &ExactMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self - c * I`.
    pub fn shift(&self, c: &Scalar) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            let v = self.get(i, i) - c;
            m.set(i, i, v);
        }
        Ok(m)
    }

    pub fn pow(&self, mut e: u64) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = Self::identity(self.field, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.data, m.rows, m.cols);
        let rank = pivots.len();
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Vec::with_capacity(n * 2 * n);
        for r in 0..n {
            aug.extend_from_slice(self.row(r));
            for c in 0..n {
                aug.push(if r == c { self.field.one() } else { self.field.zero() });
            }
        }
        let pivots = rref_in_place(&mut aug, n, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug[r * 2 * n + n + c].clone());
            }
        }
        Some(inv)
    }

    /// Basis of `{v : v * self = 0}` (row vectors).
    pub fn left_kernel(&self) -> Vec<Vec<Scalar>> {
        self.transpose().right_kernel()
    }

    /// Basis of `{x : self * x = 0}` returned as vectors.
    pub fn right_kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots, _) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![self.field.zero(); self.cols];
                x[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = -r.get(i, f);
                }
                x
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: other.rows });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(ExactMatrix { field: self.field, rows: self.rows, cols, data })
    }
}

/// Gauss-Jordan elimination on a row-major buffer; zero rows end up at the bottom.
fn rref_in_place(data: &mut [Scalar], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                data.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = data[r * cols + c].inv().expect("nonzero pivot");
        for k in c..cols {
            let v = &data[r * cols + k] * &inv;
            data[r * cols + k] = v;
        }
        let pivot_row: Vec<Scalar> = data[r * cols..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    let v = &data[i * cols + k] - &(&f * &pivot_row[k]);
                    data[i * cols + k] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
