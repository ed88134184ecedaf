//! Dense multilinear maps between based ℚ-vector spaces.
//!
//! A `MultiMap` with input dimensions `[d₁,…,dₙ]` and output dimension `e`
//! stores the coefficient tensor of a multilinear map `ℚ^d₁ × … × ℚ^dₙ → ℚ^e`
//! in row-major order with the output index outermost. Bracket structure
//! constants, representation actions and cochain components are all stored
//! this way, so the flattening order used by every matrix built downstream is
//! fixed here once: coefficient `(o, i₁, …, iₙ)` lives at
//! `((o·d₁ + i₁)·d₂ + i₂)·… + iₙ`.

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::scalar::Scalar;
use num::{One, Zero};

/// All multi-indices over the given dimensions, in row-major order. Empty
/// `dims` yields the single empty index; a zero dimension yields nothing.
pub(crate) fn multi_indices(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for idx in &out {
            for i in 0..d {
                let mut widened = idx.clone();
                widened.push(i);
                next.push(widened);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiMap {
    input_dims: Vec<usize>,
    out_dim: usize,
    coeffs: Vec<Scalar>,
}

impl MultiMap {
    pub fn new(input_dims: Vec<usize>, out_dim: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        let need = out_dim * input_dims.iter().product::<usize>();
        if coeffs.len() != need {
            return Err(Error::ShapeMismatch(format!(
                "map {:?} -> {} needs {} coefficients, got {}",
                input_dims,
                out_dim,
                need,
                coeffs.len()
            )));
        }
        Ok(MultiMap { input_dims, out_dim, coeffs })
    }

    pub fn zeros(input_dims: Vec<usize>, out_dim: usize) -> Self {
        let n = out_dim * input_dims.iter().product::<usize>();
        MultiMap { input_dims, out_dim, coeffs: vec![Scalar::zero(); n] }
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.input_dims
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn arity(&self) -> usize {
        self.input_dims.len()
    }

    fn index(&self, out: usize, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.input_dims.len());
        let mut acc = out;
        for (k, &i) in idx.iter().enumerate() {
            debug_assert!(i < self.input_dims[k]);
            acc = acc * self.input_dims[k] + i;
        }
        acc
    }

    pub fn get(&self, out: usize, idx: &[usize]) -> &Scalar {
        &self.coeffs[self.index(out, idx)]
    }

    pub fn set(&mut self, out: usize, idx: &[usize], v: Scalar) {
        let i = self.index(out, idx);
        self.coeffs[i] = v;
    }

    /// Multilinear evaluation at coordinate vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        if args.len() != self.input_dims.len() {
            return Err(Error::ArityMismatch {
                expected: self.input_dims.len(),
                got: args.len(),
            });
        }
        for (k, a) in args.iter().enumerate() {
            if a.len() != self.input_dims[k] {
                return Err(Error::DimMismatch(format!(
                    "argument {k} has length {}, expected {}",
                    a.len(),
                    self.input_dims[k]
                )));
            }
        }
        let mut out = vec![Scalar::zero(); self.out_dim];
        for idx in multi_indices(&self.input_dims) {
            let mut weight = Scalar::one();
            let mut vanishes = false;
            for (k, &i) in idx.iter().enumerate() {
                let c = &args[k][i];
                if c.is_zero() {
                    vanishes = true;
                    break;
                }
                weight *= c;
            }
            if vanishes {
                continue;
            }
            for (o, slot) in out.iter_mut().enumerate() {
                let c = &self.coeffs[self.index(o, &idx)];
                if !c.is_zero() {
                    *slot += c * &weight;
                }
            }
        }
        Ok(out)
    }

    /// Value on a tuple of standard basis vectors.
    pub fn eval_basis(&self, idx: &[usize]) -> Vec<Scalar> {
        (0..self.out_dim).map(|o| self.coeffs[self.index(o, idx)].clone()).collect()
    }

    /// The coefficient vector in the crate-wide flattening order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.coeffs.clone()
    }

    pub fn unflatten(input_dims: Vec<usize>, out_dim: usize, data: Vec<Scalar>) -> Result<Self> {
        MultiMap::new(input_dims, out_dim, data)
    }

    pub fn coeff_len(&self) -> usize {
        self.coeffs.len()
    }

    /// An arity-1 map as its matrix; the layouts coincide.
    pub fn as_mat(&self) -> Result<Mat> {
        if self.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, got: self.arity() });
        }
        Mat::new(self.out_dim, self.input_dims[0], self.coeffs.clone())
    }

    pub fn from_mat(m: &Mat) -> Self {
        MultiMap {
            input_dims: vec![m.cols()],
            out_dim: m.rows(),
            coeffs: m.entries().to_vec(),
        }
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &MultiMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<MultiMap> {
        if self.input_dims != other.input_dims || self.out_dim != other.out_dim {
            return Err(Error::ShapeMismatch("multimap shapes differ".into()));
        }
        Ok(MultiMap {
            input_dims: self.input_dims.clone(),
            out_dim: self.out_dim,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, k: &Scalar) -> MultiMap {
        MultiMap {
            input_dims: self.input_dims.clone(),
            out_dim: self.out_dim,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> MultiMap {
        MultiMap {
            input_dims: self.input_dims.clone(),
            out_dim: self.out_dim,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Post-compose the output with a linear map.
    pub fn compose_left(&self, m: &Mat) -> Result<MultiMap> {
        if m.cols() != self.out_dim {
            return Err(Error::ShapeMismatch(format!(
                "compose_left: map has {} columns, output dimension is {}",
                m.cols(),
                self.out_dim
            )));
        }
        let mut out = MultiMap::zeros(self.input_dims.clone(), m.rows());
        for idx in multi_indices(&self.input_dims) {
            for op in 0..m.rows() {
                let mut acc = Scalar::zero();
                for o in 0..self.out_dim {
                    let c = &self.coeffs[self.index(o, &idx)];
                    if !c.is_zero() {
                        acc += m.at(op, o) * c;
                    }
                }
                out.set(op, &idx, acc);
            }
        }
        Ok(out)
    }

    /// Pre-compose one input slot with a linear map.
    pub fn compose_input(&self, slot: usize, m: &Mat) -> Result<MultiMap> {
        if slot >= self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: slot });
        }
        if m.rows() != self.input_dims[slot] {
            return Err(Error::ShapeMismatch(format!(
                "compose_input: slot {slot} expects {} rows, got {}",
                self.input_dims[slot],
                m.rows()
            )));
        }
        let mut dims = self.input_dims.clone();
        dims[slot] = m.cols();
        let mut out = MultiMap::zeros(dims.clone(), self.out_dim);
        for jdx in multi_indices(&dims) {
            for o in 0..self.out_dim {
                let mut acc = Scalar::zero();
                let mut idx = jdx.clone();
                for i in 0..self.input_dims[slot] {
                    let w = m.at(i, jdx[slot]);
                    if w.is_zero() {
                        continue;
                    }
                    idx[slot] = i;
                    let c = &self.coeffs[self.index(o, &idx)];
                    if !c.is_zero() {
                        acc += c * w;
                    }
                }
                out.set(o, &jdx, acc);
            }
        }
        Ok(out)
    }

    /// Pre-compose every input slot, `result(a₁,…) = self(m₁a₁, m₂a₂, …)`.
    pub fn compose_inputs(&self, mats: &[&Mat]) -> Result<MultiMap> {
        if mats.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: mats.len() });
        }
        let mut cur = self.clone();
        for (slot, m) in mats.iter().enumerate() {
            cur = cur.compose_input(slot, m)?;
        }
        Ok(cur)
    }

    /// Reorder inputs: `result(a₀,…,aₙ₋₁) = self(a_{perm[0]},…,a_{perm[n−1]})`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Result<MultiMap> {
        let n = self.arity();
        if perm.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: perm.len() });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Invalid(format!("permute_inputs: bad permutation {perm:?}")));
            }
            seen[p] = true;
        }
        let mut dims = vec![0usize; n];
        for (k, &p) in perm.iter().enumerate() {
            dims[p] = self.input_dims[k];
        }
        let mut out = MultiMap::zeros(dims, self.out_dim);
        for idx in multi_indices(&self.input_dims) {
            let mut jdx = vec![0usize; n];
            for (k, &p) in perm.iter().enumerate() {
                jdx[p] = idx[k];
            }
            for o in 0..self.out_dim {
                let c = self.coeffs[self.index(o, &idx)].clone();
                out.set(o, &jdx, c);
            }
        }
        Ok(out)
    }

    /// Fix every slot but the last at the given coordinate vectors, returning
    /// the matrix that acts on the remaining slot.
    pub fn partial_mat(&self, fixed: &[&[Scalar]]) -> Result<Mat> {
        let n = self.arity();
        if n == 0 || fixed.len() != n - 1 {
            return Err(Error::ArityMismatch { expected: n.saturating_sub(1), got: fixed.len() });
        }
        for (k, a) in fixed.iter().enumerate() {
            if a.len() != self.input_dims[k] {
                return Err(Error::DimMismatch(format!(
                    "partial_mat: argument {k} has length {}, expected {}",
                    a.len(),
                    self.input_dims[k]
                )));
            }
        }
        let last = self.input_dims[n - 1];
        let mut out = Mat::zeros(self.out_dim, last);
        for idx in multi_indices(&self.input_dims[..n - 1]) {
            let mut weight = Scalar::one();
            let mut vanishes = false;
            for (k, &i) in idx.iter().enumerate() {
                let c = &fixed[k][i];
                if c.is_zero() {
                    vanishes = true;
                    break;
                }
                weight *= c;
            }
            if vanishes {
                continue;
            }
            let mut full = idx.clone();
            full.push(0);
            for j in 0..last {
                full[n - 1] = j;
                for o in 0..self.out_dim {
                    let c = &self.coeffs[self.index(o, &full)];
                    if !c.is_zero() {
                        let v = out.at(o, j) + c * &weight;
                        out.set(o, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `partial_mat` with the leading slots fixed at standard basis vectors.
    pub fn partial_mat_basis(&self, fixed: &[usize]) -> Result<Mat> {
        let n = self.arity();
        if n == 0 || fixed.len() != n - 1 {
            return Err(Error::ArityMismatch { expected: n.saturating_sub(1), got: fixed.len() });
        }
        let last = self.input_dims[n - 1];
        let mut out = Mat::zeros(self.out_dim, last);
        let mut full = fixed.to_vec();
        full.push(0);
        for j in 0..last {
            full[n - 1] = j;
            for o in 0..self.out_dim {
                out.set(o, j, self.coeffs[self.index(o, &full)].clone());
            }
        }
        Ok(out)
    }
}
