//! Dense matrices over ℚ with canonical reductions.
//!
//! Everything downstream (cohomology dimensions, obstruction classes,
//! inducibility witnesses) reduces to the four operations here: `rref`,
//! `kernel_basis`, `solve` and `in_span`. All four return canonical values:
//! the reduced row echelon form is unique, kernel bases follow the RREF
//! free-variable pattern, and particular solutions set free variables to
//! zero. Identical inputs therefore produce bit-identical outputs.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    /// Matrix with the given columns.
    pub fn from_cols(cols: Vec<Vec<Scalar>>) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::ShapeMismatch("ragged columns".into()));
        }
        let mut m = Mat::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("add: shapes differ".into()));
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("sub: shapes differ".into()));
        }
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch(format!(
                "mul_vec: {}x{} matrix, vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out[i] += self.at(i, j) * x;
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hstack: row counts differ".into()));
        }
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.at(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack: column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Mat { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Unique reduced row echelon form and its ascending pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find a pivot in column j at or below row r
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, j).is_zero()) else {
                continue;
            };
            if p != r {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, r * m.cols + c);
                }
            }
            let inv = m.at(r, j).clone();
            for c in 0..m.cols {
                let v = m.at(r, c) / &inv;
                m.set(r, c, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, j).is_zero() {
                    continue;
                }
                let factor = m.at(i, j).clone();
                for c in 0..m.cols {
                    let v = m.at(i, c) - &factor * m.at(r, c);
                    m.set(i, c, v);
                }
            }
            pivots.push(j);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one vector per free column of the RREF, with a
    /// 1 in the free position and the negated reduced entries at the pivots.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.at(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical particular solution of `self * x = b` (free variables zero),
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "solve: right-hand side length");
        let rhs = Mat { rows: self.rows, cols: 1, entries: b.to_vec() };
        let aug = self.hstack(&rhs).expect("same row count");
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse via `rref([A | I])`; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n)).expect("same row count");
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| k != p) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.at(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Probe an affine map `x ↦ residual(x)` on `ℚⁿ`: returns the coefficient
/// matrix `A` (columns `residual(eₖ) − residual(0)`) and the constant part
/// `residual(0)`. The closure must be affine for the result to be faithful.
pub(crate) fn probe_affine(
    n: usize,
    residual: impl Fn(&[Scalar]) -> crate::error::Result<Vec<Scalar>>,
) -> crate::error::Result<(Mat, Vec<Scalar>)> {
    let r0 = residual(&vec_zeros(n))?;
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        cols.push(vec_sub(&residual(&basis_vec(n, k))?, &r0));
    }
    let a = if cols.is_empty() {
        Mat::zeros(r0.len(), 0)
    } else {
        Mat::from_cols(cols).expect("probe columns share a length")
    };
    Ok((a, r0))
}

/// Canonical solution of `residual(x) = 0` for an affine `residual`, or
/// `None` when no solution exists.
pub(crate) fn solve_affine(
    n: usize,
    residual: impl Fn(&[Scalar]) -> crate::error::Result<Vec<Scalar>>,
) -> crate::error::Result<Option<Vec<Scalar>>> {
    let (a, r0) = probe_affine(n, residual)?;
    Ok(a.solve(&vec_neg(&r0)))
}

/// Coefficients expressing `v` in the given spanning set, or `None`.
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return if v.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let m = Mat::from_cols(basis.to_vec()).expect("columns share a length");
    assert_eq!(v.len(), m.rows(), "in_span: vector length");
    m.solve(v)
}

// Small vector helpers used throughout the crate.

pub(crate) fn vec_zeros(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub(crate) fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn vec_scale(a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * k).collect()
}

/// Standard basis column.
pub(crate) fn basis_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec_zeros(dim);
    v[i] = Scalar::one();
    v
}
