//! Small worked examples shared by the test suite, the benchmarks and the
//! documentation.
//!
//! Every fixture is tiny enough to check against the structure laws by hand,
//! and several exist to pin down exactly one behavior: a single violated
//! axiom, a nonzero second cohomology class, a homotopy that survives
//! verification. Dimension pairs are written `(dim0, dim1)`.

use crate::algebra::Leibniz2Algebra;
use crate::cochain::{Bimodule, Cochain2};
use crate::complex::TwoTermComplex;
use crate::ext::{build_extension, Extension};
use crate::mat::Mat;
use crate::multimap::MultiMap;
use crate::rep::Representation;
use crate::scalar::{int, Scalar};
use crate::xmod::{strict_to_xmod, CrossedModule, XModRep};

fn parts(dim0: usize, dim1: usize) -> (Mat, MultiMap, MultiMap, MultiMap, MultiMap) {
    (
        Mat::zeros(dim0, dim1),
        MultiMap::zeros(vec![dim0, dim0], dim0),
        MultiMap::zeros(vec![dim0, dim1], dim1),
        MultiMap::zeros(vec![dim1, dim0], dim1),
        MultiMap::zeros(vec![dim0, dim0, dim0], dim1),
    )
}

/// Dimensions `(1, 1)`, every operation zero. The abelian base case: all
/// cochains are cocycles and nothing is a coboundary.
pub fn fix_a() -> Leibniz2Algebra {
    let (d, b00, b01, b10, l3) = parts(1, 1);
    Leibniz2Algebra::new(1, 1, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(2, 0)` with `[e1, e1] = e2`: the smallest strict example
/// whose bracket is not antisymmetric.
pub fn fix_b() -> Leibniz2Algebra {
    let (d, mut b00, b01, b10, l3) = parts(2, 0);
    b00.set(1, &[0, 0], int(1));
    Leibniz2Algebra::new(2, 0, d, b00, b01, b10, l3).unwrap()
}

/// Like [`fix_b`] but with `[e1, e1] = e1`, which breaks the Leibniz
/// identity: law `(d)` fails at `(0, 0, 0)` with residual `-e1`.
pub fn fix_b_bad() -> Leibniz2Algebra {
    let (d, mut b00, b01, b10, l3) = parts(2, 0);
    b00.set(0, &[0, 0], int(1));
    Leibniz2Algebra::new(2, 0, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(1, 1)` with invertible differential `d = [1]` and zero
/// brackets. Acyclic, so its cohomology vanishes in degree 2.
pub fn fix_c() -> Leibniz2Algebra {
    let (_, b00, b01, b10, l3) = parts(1, 1);
    let d = Mat::from_rows(vec![vec![int(1)]]).unwrap();
    Leibniz2Algebra::new(1, 1, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(1, 1)` with `d(a) = x`, `[x, x] = x`, `[x, a] = [a, x] = a`
/// and homotopy `l3(x, x, x) = -a`. The smallest example where a nonzero
/// homotopy is forced by the bracket.
pub fn fix_d() -> Leibniz2Algebra {
    let (_, mut b00, mut b01, mut b10, mut l3) = parts(1, 1);
    let d = Mat::from_rows(vec![vec![int(1)]]).unwrap();
    b00.set(0, &[0, 0], int(1));
    b01.set(0, &[0, 0], int(1));
    b10.set(0, &[0, 0], int(1));
    l3.set(0, &[0, 0, 0], int(-1));
    Leibniz2Algebra::new(1, 1, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(2, 1)` with zero differential and brackets and
/// `l3(e1, e1, e1) = a`: a skeletal algebra carrying only a homotopy.
pub fn skel() -> Leibniz2Algebra {
    let (d, b00, b01, b10, mut l3) = parts(2, 1);
    l3.set(0, &[0, 0, 0], int(1));
    Leibniz2Algebra::new(2, 1, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(2, 2)` with `d(a1) = e1`, `d(a2) = 0`, zero brackets and
/// `l3(e2, e2, e2) = a2`. Differential and homotopy interact through
/// different coordinates.
pub fn mixed() -> Leibniz2Algebra {
    let (mut d, b00, b01, b10, mut l3) = parts(2, 2);
    d.set(0, 0, int(1));
    l3.set(1, &[1, 1, 1], int(1));
    Leibniz2Algebra::new(2, 2, d, b00, b01, b10, l3).unwrap()
}

/// Dimensions `(3, 0)` with `[e1, e1] = e2`: [`fix_b`] padded by a central
/// direction, used with [`bim_leib3`] for the one-space coboundary.
pub fn leib3() -> Leibniz2Algebra {
    let (d, mut b00, b01, b10, l3) = parts(3, 0);
    b00.set(1, &[0, 0], int(1));
    Leibniz2Algebra::new(3, 0, d, b00, b01, b10, l3).unwrap()
}

/// One-dimensional bimodule over [`leib3`]: `e1` acts by `1` on the left and
/// `-1` on the right, `e3` by `2` and `-2`, `e2` by zero.
pub fn bim_leib3() -> Bimodule {
    let mut left = MultiMap::zeros(vec![3, 1], 1);
    left.set(0, &[0, 0], int(1));
    left.set(0, &[2, 0], int(2));
    let mut right = MultiMap::zeros(vec![1, 3], 1);
    right.set(0, &[0, 0], int(-1));
    right.set(0, &[0, 2], int(-2));
    Bimodule { m_dim: 1, left, right }
}

/// One-dimensional bimodule over [`fix_b`]: `e1` acts by `1` on the left and
/// `-1` on the right, `e2` by zero.
pub fn bim_b() -> Bimodule {
    let mut left = MultiMap::zeros(vec![2, 1], 1);
    left.set(0, &[0, 0], int(1));
    let mut right = MultiMap::zeros(vec![1, 2], 1);
    right.set(0, &[0, 0], int(-1));
    Bimodule { m_dim: 1, left, right }
}

/// A representation of [`fix_b`] on the complex `ℚ --1--> ℚ` with nonzero
/// binary operators. All coefficients are chosen so that every
/// representation law holds exactly.
pub fn rep_b() -> Representation {
    let v = TwoTermComplex::new(1, 1, Mat::from_rows(vec![vec![int(1)]]).unwrap()).unwrap();
    let mut rep = Representation::zero(&fix_b(), v);
    for op in [&mut rep.l0_0, &mut rep.l0_1] {
        op.set(0, &[0, 0], int(1));
        op.set(0, &[1, 0], int(2));
    }
    for op in [&mut rep.r0_0, &mut rep.r0_1] {
        op.set(0, &[0, 0], int(1));
        op.set(0, &[1, 0], int(3));
    }
    rep.l2.set(0, &[0, 0, 0], int(2));
    rep.m2.set(0, &[0, 0, 0], int(3));
    rep.r2.set(0, &[0, 0, 0], int(-1));
    rep.r2.set(0, &[0, 1, 0], int(6));
    rep.r2.set(0, &[1, 0, 0], int(5));
    rep.r2.set(0, &[1, 1, 0], int(15));
    rep
}

/// The zero action of `g` on the complex `ℚ --0--> ℚ`.
pub fn trivial_rep(g: &Leibniz2Algebra) -> Representation {
    let v = TwoTermComplex::new(1, 1, Mat::zeros(1, 1)).unwrap();
    Representation::zero(g, v)
}

/// The extension of [`fix_a`] by its trivial representation twisted by the
/// cocycle with `ψ = [1]`. Its total differential is `[[0, 0], [1, 0]]`, so
/// the extension is not split-compatible with the zero cocycle; its class
/// generates a line in `H²`.
pub fn psi_extension() -> Extension {
    let g = fix_a();
    let rep = trivial_rep(&g);
    let mut c = Cochain2::zero(&g, &rep.v);
    c.psi.set(0, 0, int(1));
    build_extension(&g, &rep, &c).unwrap()
}

/// A crossed module scenario: the crossed module of [`fix_b`], the zero
/// action on the complex `ℚ --0--> ℚ`, and the cocycle `ω(e1, e1) = 1`.
pub fn xmod_case() -> (CrossedModule, XModRep, Cochain2) {
    let g = fix_b();
    let xm = strict_to_xmod(&g).unwrap();
    let v = TwoTermComplex::new(1, 1, Mat::zeros(1, 1)).unwrap();
    let rep = XModRep {
        v: v.clone(),
        l0_0: MultiMap::zeros(vec![2, 1], 1),
        l0_1: MultiMap::zeros(vec![2, 1], 1),
        r0_0: MultiMap::zeros(vec![2, 1], 1),
        r0_1: MultiMap::zeros(vec![2, 1], 1),
        l1: MultiMap::zeros(vec![0, 1], 1),
        r1: MultiMap::zeros(vec![0, 1], 1),
    };
    let mut c = Cochain2::zero(&g, &v);
    c.omega.set(0, &[0, 0], int(1));
    (xm, rep, c)
}

/// Tiny deterministic generator for test sweeps. Fixed multiplier and
/// increment; the same seed always yields the same stream, independent of
/// platform.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform-ish integer in `[lo, hi]` (inclusive).
    pub fn small_int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Scalar with a small integer value.
    pub fn scalar(&mut self, lo: i64, hi: i64) -> Scalar {
        int(self.small_int(lo, hi))
    }
}
