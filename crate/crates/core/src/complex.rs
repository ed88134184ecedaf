//! Two-term chain complexes `V₁ --d--> V₀` and grade-respecting linear maps.

use crate::error::{Error, Result};
use crate::mat::Mat;

/// A two-term complex: a single linear map `d : V₁ → V₀`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTermComplex {
    pub dim1: usize,
    pub dim0: usize,
    /// `dim0 × dim1` matrix of the differential.
    pub d: Mat,
}

impl TwoTermComplex {
    pub fn new(dim1: usize, dim0: usize, d: Mat) -> Result<Self> {
        let c = TwoTermComplex { dim1, dim0, d };
        validate_complex(&c)?;
        Ok(c)
    }
}

pub fn validate_complex(c: &TwoTermComplex) -> Result<()> {
    if c.d.rows() != c.dim0 || c.d.cols() != c.dim1 {
        return Err(Error::ShapeMismatch(format!(
            "differential must be {}x{}, got {}x{}",
            c.dim0,
            c.dim1,
            c.d.rows(),
            c.d.cols()
        )));
    }
    Ok(())
}

/// A pair of linear maps respecting the grading: `m0` on degree 0, `m1` on
/// degree 1. Chain-map compatibility with the differentials is a property of
/// the context, not of the container, and is checked where it matters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMap {
    pub m0: Mat,
    pub m1: Mat,
}

impl GradedMap {
    pub fn new(m0: Mat, m1: Mat) -> Self {
        GradedMap { m0, m1 }
    }

    pub fn identity(dim0: usize, dim1: usize) -> Self {
        GradedMap { m0: Mat::identity(dim0), m1: Mat::identity(dim1) }
    }

    pub fn zero(rows0: usize, cols0: usize, rows1: usize, cols1: usize) -> Self {
        GradedMap { m0: Mat::zeros(rows0, cols0), m1: Mat::zeros(rows1, cols1) }
    }

    /// `self ∘ other`, gradewise.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        Ok(GradedMap { m0: self.m0.mul(&other.m0)?, m1: self.m1.mul(&other.m1)? })
    }

    /// Whether `self` is a chain map from `src` to `dst`: `dst.d ∘ m1 = m0 ∘ src.d`.
    pub fn is_chain_map(&self, src: &TwoTermComplex, dst: &TwoTermComplex) -> Result<bool> {
        let lhs = dst.d.mul(&self.m1)?;
        let rhs = self.m0.mul(&src.d)?;
        Ok(lhs == rhs)
    }
}
