//! Leibniz 2-algebras: structure data, axiom checking, morphisms and
//! derivations.
//!
//! A Leibniz 2-algebra here is a two-term complex `g₁ --d--> g₀` together
//! with three bilinear brackets `b00 : g₀⊗g₀ → g₀`, `b01 : g₀⊗g₁ → g₁`,
//! `b10 : g₁⊗g₀ → g₁` and a trilinear homotopy `l₃ : g₀⊗g₀⊗g₀ → g₁`,
//! subject to the eight laws `(a)`–`(h)` checked by [`verify_algebra`].
//! No symmetry of any bracket is assumed.

use crate::complex::TwoTermComplex;
use crate::error::{Error, Result};
use crate::mat::{basis_vec, vec_add, vec_sub, Mat};
use crate::multimap::MultiMap;
use crate::scalar::Scalar;
use crate::verify::Verification;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Leibniz2Algebra {
    pub dim0: usize,
    pub dim1: usize,
    /// Differential `g₁ → g₀`, a `dim0 × dim1` matrix.
    pub d: Mat,
    /// `[x, y]` for `x, y` of degree 0.
    pub b00: MultiMap,
    /// `[x, a]` for `x` of degree 0, `a` of degree 1.
    pub b01: MultiMap,
    /// `[a, x]` for `a` of degree 1, `x` of degree 0.
    pub b10: MultiMap,
    /// Trilinear homotopy `l₃(x, y, z)` of degree 1.
    pub l3: MultiMap,
}

impl Leibniz2Algebra {
    pub fn new(
        dim0: usize,
        dim1: usize,
        d: Mat,
        b00: MultiMap,
        b01: MultiMap,
        b10: MultiMap,
        l3: MultiMap,
    ) -> Result<Self> {
        let g = Leibniz2Algebra { dim0, dim1, d, b00, b01, b10, l3 };
        g.validate()?;
        Ok(g)
    }

    /// Shape consistency of all structure data.
    pub fn validate(&self) -> Result<()> {
        let (d0, d1) = (self.dim0, self.dim1);
        if self.d.rows() != d0 || self.d.cols() != d1 {
            return Err(Error::ShapeMismatch(format!(
                "d must be {}x{}, got {}x{}",
                d0,
                d1,
                self.d.rows(),
                self.d.cols()
            )));
        }
        let expect = [
            ("b00", &self.b00, vec![d0, d0], d0),
            ("b01", &self.b01, vec![d0, d1], d1),
            ("b10", &self.b10, vec![d1, d0], d1),
            ("l3", &self.l3, vec![d0, d0, d0], d1),
        ];
        for (name, map, dims, out) in expect {
            if map.input_dims() != dims.as_slice() || map.out_dim() != out {
                return Err(Error::ShapeMismatch(format!(
                    "{name} must be {:?} -> {}, got {:?} -> {}",
                    dims,
                    out,
                    map.input_dims(),
                    map.out_dim()
                )));
            }
        }
        Ok(())
    }

    /// The underlying two-term complex.
    pub fn complex(&self) -> TwoTermComplex {
        TwoTermComplex { dim1: self.dim1, dim0: self.dim0, d: self.d.clone() }
    }

    pub fn dv(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.d.mul_vec(a).expect("degree-1 vector")
    }

    pub fn b00v(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.b00.eval(&[x, y]).expect("degree-0 arguments")
    }

    pub fn b01v(&self, x: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.b01.eval(&[x, a]).expect("degree (0,1) arguments")
    }

    pub fn b10v(&self, a: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.b10.eval(&[a, x]).expect("degree (1,0) arguments")
    }

    pub fn l3v(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.l3.eval(&[x, y, z]).expect("degree-0 arguments")
    }
}

/// Whether the homotopy vanishes identically, i.e. the algebra is strict.
pub fn is_strict(g: &Leibniz2Algebra) -> bool {
    g.l3.is_zero()
}

/// Check the eight structure laws on every basis tuple.
///
/// Residual orientations: `(a)`–`(c)` are left side minus right side of the
/// displayed equation, `(d)`–`(g)` are the iterated-bracket side minus the
/// `d`/`l₃` side, `(h)` is the displayed ten-term sum itself.
pub fn verify_algebra(g: &Leibniz2Algebra) -> Result<Verification> {
    g.validate()?;
    let (d0, d1) = (g.dim0, g.dim1);
    let e0 = |i: usize| basis_vec(d0, i);
    let e1 = |i: usize| basis_vec(d1, i);
    let mut v = Verification::new();

    // (a) d[x,a] = [x,da]
    for i in 0..d0 {
        for j in 0..d1 {
            let lhs = g.dv(&g.b01.eval_basis(&[i, j]));
            let rhs = g.b00v(&e0(i), &g.d.col(j));
            v.check("(a)", &[i, j], vec_sub(&lhs, &rhs));
        }
    }
    // (b) d[a,x] = [da,x]
    for j in 0..d1 {
        for i in 0..d0 {
            let lhs = g.dv(&g.b10.eval_basis(&[j, i]));
            let rhs = g.b00v(&g.d.col(j), &e0(i));
            v.check("(b)", &[j, i], vec_sub(&lhs, &rhs));
        }
    }
    // (c) [da,b] = [a,db]
    for j in 0..d1 {
        for k in 0..d1 {
            let lhs = g.b01v(&g.d.col(j), &e1(k));
            let rhs = g.b10v(&e1(j), &g.d.col(k));
            v.check("(c)", &[j, k], vec_sub(&lhs, &rhs));
        }
    }
    // (d) [x,[y,z]] - [[x,y],z] - [y,[x,z]] = d l3(x,y,z)
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let (x, y, z) = (e0(i), e0(j), e0(k));
                let mut r = g.b00v(&x, &g.b00.eval_basis(&[j, k]));
                r = vec_sub(&r, &g.b00v(&g.b00.eval_basis(&[i, j]), &z));
                r = vec_sub(&r, &g.b00v(&y, &g.b00.eval_basis(&[i, k])));
                r = vec_sub(&r, &g.dv(&g.l3.eval_basis(&[i, j, k])));
                v.check("(d)", &[i, j, k], r);
            }
        }
    }
    // (e) [x,[y,a]] - [[x,y],a] - [y,[x,a]] = l3(x,y,da)
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d1 {
                let (x, y, a) = (e0(i), e0(j), e1(k));
                let mut r = g.b01v(&x, &g.b01.eval_basis(&[j, k]));
                r = vec_sub(&r, &g.b01v(&g.b00.eval_basis(&[i, j]), &a));
                r = vec_sub(&r, &g.b01v(&y, &g.b01.eval_basis(&[i, k])));
                r = vec_sub(&r, &g.l3v(&x, &y, &g.d.col(k)));
                v.check("(e)", &[i, j, k], r);
            }
        }
    }
    // (f) [x,[a,y]] - [[x,a],y] - [a,[x,y]] = l3(x,da,y)
    for i in 0..d0 {
        for j in 0..d1 {
            for k in 0..d0 {
                let (x, a, y) = (e0(i), e1(j), e0(k));
                let mut r = g.b01v(&x, &g.b10.eval_basis(&[j, k]));
                r = vec_sub(&r, &g.b10v(&g.b01.eval_basis(&[i, j]), &y));
                r = vec_sub(&r, &g.b10v(&a, &g.b00.eval_basis(&[i, k])));
                r = vec_sub(&r, &g.l3v(&x, &g.d.col(j), &y));
                v.check("(f)", &[i, j, k], r);
            }
        }
    }
    // (g) [a,[x,y]] - [[a,x],y] - [x,[a,y]] = l3(da,x,y)
    for j in 0..d1 {
        for i in 0..d0 {
            for k in 0..d0 {
                let (a, x, y) = (e1(j), e0(i), e0(k));
                let mut r = g.b10v(&a, &g.b00.eval_basis(&[i, k]));
                r = vec_sub(&r, &g.b10v(&g.b10.eval_basis(&[j, i]), &y));
                r = vec_sub(&r, &g.b01v(&x, &g.b10.eval_basis(&[j, k])));
                r = vec_sub(&r, &g.l3v(&g.d.col(j), &x, &y));
                v.check("(g)", &[j, i, k], r);
            }
        }
    }
    // (h) coherence of l3 with the brackets on four degree-0 inputs
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                for l in 0..d0 {
                    let (x, y, z, t) = (e0(i), e0(j), e0(k), e0(l));
                    let mut r = g.b01v(&x, &g.l3.eval_basis(&[j, k, l]));
                    r = vec_sub(&r, &g.b01v(&y, &g.l3.eval_basis(&[i, k, l])));
                    r = vec_add(&r, &g.b01v(&z, &g.l3.eval_basis(&[i, j, l])));
                    r = vec_add(&r, &g.b10v(&g.l3.eval_basis(&[i, j, k]), &t));
                    r = vec_sub(&r, &g.l3v(&g.b00.eval_basis(&[i, j]), &z, &t));
                    r = vec_sub(&r, &g.l3v(&y, &g.b00.eval_basis(&[i, k]), &t));
                    r = vec_sub(&r, &g.l3v(&y, &z, &g.b00.eval_basis(&[i, l])));
                    r = vec_add(&r, &g.l3v(&x, &g.b00.eval_basis(&[j, k]), &t));
                    r = vec_add(&r, &g.l3v(&x, &z, &g.b00.eval_basis(&[j, l])));
                    r = vec_sub(&r, &g.l3v(&x, &y, &g.b00.eval_basis(&[k, l])));
                    v.check("(h)", &[i, j, k, l], r);
                }
            }
        }
    }
    Ok(v)
}

/// Morphism data between Leibniz 2-algebras: linear pieces `f0`, `f1` and a
/// bilinear homotopy `f2 : g₀⊗g₀ → g₁'`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hom2 {
    pub f0: Mat,
    pub f1: Mat,
    pub f2: MultiMap,
}

impl Hom2 {
    pub fn f0v(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.f0.mul_vec(x).expect("degree-0 vector")
    }

    pub fn f1v(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.f1.mul_vec(a).expect("degree-1 vector")
    }

    pub fn f2v(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.f2.eval(&[x, y]).expect("degree-0 arguments")
    }
}

/// The identity morphism of `g`.
pub fn identity_hom(g: &Leibniz2Algebra) -> Hom2 {
    Hom2 {
        f0: Mat::identity(g.dim0),
        f1: Mat::identity(g.dim1),
        f2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
    }
}

fn hom_shapes(src: &Leibniz2Algebra, dst: &Leibniz2Algebra, h: &Hom2) -> Result<()> {
    if h.f0.rows() != dst.dim0 || h.f0.cols() != src.dim0 {
        return Err(Error::ShapeMismatch(format!(
            "f0 must be {}x{}, got {}x{}",
            dst.dim0,
            src.dim0,
            h.f0.rows(),
            h.f0.cols()
        )));
    }
    if h.f1.rows() != dst.dim1 || h.f1.cols() != src.dim1 {
        return Err(Error::ShapeMismatch(format!(
            "f1 must be {}x{}, got {}x{}",
            dst.dim1,
            src.dim1,
            h.f1.rows(),
            h.f1.cols()
        )));
    }
    if h.f2.input_dims() != [src.dim0, src.dim0] || h.f2.out_dim() != dst.dim1 {
        return Err(Error::ShapeMismatch(format!(
            "f2 must be [{}, {}] -> {}, got {:?} -> {}",
            src.dim0,
            src.dim0,
            dst.dim1,
            h.f2.input_dims(),
            h.f2.out_dim()
        )));
    }
    Ok(())
}

/// Full residual tables of the morphism laws, split so callers can treat the
/// `(m)` family separately. Every basis tuple appears, zero residual or not.
pub(crate) struct HomResiduals {
    pub items_il: Vec<(&'static str, Vec<usize>, Vec<Scalar>)>,
    pub items_m: Vec<(&'static str, Vec<usize>, Vec<Scalar>)>,
}

impl HomResiduals {
    pub fn flat_il(&self) -> Vec<Scalar> {
        self.items_il.iter().flat_map(|(_, _, r)| r.iter().cloned()).collect()
    }

    pub fn flat_all(&self) -> Vec<Scalar> {
        let mut out = self.flat_il();
        out.extend(self.items_m.iter().flat_map(|(_, _, r)| r.iter().cloned()));
        out
    }
}

pub(crate) fn hom_residuals(
    src: &Leibniz2Algebra,
    dst: &Leibniz2Algebra,
    h: &Hom2,
) -> Result<HomResiduals> {
    src.validate()?;
    dst.validate()?;
    hom_shapes(src, dst, h)?;
    let (d0, d1) = (src.dim0, src.dim1);
    let mut il = Vec::new();
    let mut m = Vec::new();

    // (i) F0 d = d' F1
    let diff = h.f0.mul(&src.d)?.sub(&dst.d.mul(&h.f1)?)?;
    for j in 0..d1 {
        il.push(("(i)", vec![j], diff.col(j)));
    }
    // (j) F0[x,y] - [F0 x, F0 y]' = d' F2(x,y)
    for i in 0..d0 {
        for j in 0..d0 {
            let mut r = h.f0v(&src.b00.eval_basis(&[i, j]));
            r = vec_sub(&r, &dst.b00v(&h.f0.col(i), &h.f0.col(j)));
            r = vec_sub(&r, &dst.dv(&h.f2.eval_basis(&[i, j])));
            il.push(("(j)", vec![i, j], r));
        }
    }
    // (k) F1[x,a] - [F0 x, F1 a]' = F2(x, da)
    for i in 0..d0 {
        for j in 0..d1 {
            let mut r = h.f1v(&src.b01.eval_basis(&[i, j]));
            r = vec_sub(&r, &dst.b01v(&h.f0.col(i), &h.f1.col(j)));
            r = vec_sub(&r, &h.f2v(&basis_vec(d0, i), &src.d.col(j)));
            il.push(("(k)", vec![i, j], r));
        }
    }
    // (l) F1[a,x] - [F1 a, F0 x]' = F2(da, x)
    for j in 0..d1 {
        for i in 0..d0 {
            let mut r = h.f1v(&src.b10.eval_basis(&[j, i]));
            r = vec_sub(&r, &dst.b10v(&h.f1.col(j), &h.f0.col(i)));
            r = vec_sub(&r, &h.f2v(&src.d.col(j), &basis_vec(d0, i)));
            il.push(("(l)", vec![j, i], r));
        }
    }
    // (m) F1 l3 - l3'(F0,F0,F0) matches the six F2 correction terms
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let (x, y, z) = (basis_vec(d0, i), basis_vec(d0, j), basis_vec(d0, k));
                let mut r = h.f1v(&src.l3.eval_basis(&[i, j, k]));
                r = vec_sub(&r, &dst.l3v(&h.f0.col(i), &h.f0.col(j), &h.f0.col(k)));
                r = vec_sub(&r, &h.f2v(&x, &src.b00.eval_basis(&[j, k])));
                r = vec_add(&r, &h.f2v(&src.b00.eval_basis(&[i, j]), &z));
                r = vec_add(&r, &h.f2v(&y, &src.b00.eval_basis(&[i, k])));
                r = vec_sub(&r, &dst.b01v(&h.f0.col(i), &h.f2.eval_basis(&[j, k])));
                r = vec_add(&r, &dst.b10v(&h.f2.eval_basis(&[i, j]), &h.f0.col(k)));
                r = vec_add(&r, &dst.b01v(&h.f0.col(j), &h.f2.eval_basis(&[i, k])));
                m.push(("(m)", vec![i, j, k], r));
            }
        }
    }
    Ok(HomResiduals { items_il: il, items_m: m })
}

/// Check the five morphism laws `(i)`–`(m)` of `h : src → dst` on every basis
/// tuple. Residuals are left side minus right side of each displayed law.
pub fn verify_hom(src: &Leibniz2Algebra, dst: &Leibniz2Algebra, h: &Hom2) -> Result<Verification> {
    let res = hom_residuals(src, dst, h)?;
    let mut v = Verification::new();
    for (law, at, r) in res.items_il.into_iter().chain(res.items_m) {
        v.check(law, &at, r);
    }
    Ok(v)
}

/// Composite `outer ∘ inner`. The homotopy of the composite is
/// `outer.f2 ∘ (inner.f0 × inner.f0) + outer.f1 ∘ inner.f2`.
pub fn compose_hom(outer: &Hom2, inner: &Hom2) -> Result<Hom2> {
    let f0 = outer.f0.mul(&inner.f0)?;
    let f1 = outer.f1.mul(&inner.f1)?;
    let f2 = outer
        .f2
        .compose_inputs(&[&inner.f0, &inner.f0])?
        .add(&inner.f2.compose_left(&outer.f1)?)?;
    Ok(Hom2 { f0, f1, f2 })
}

/// Inverse morphism data of `h` when `f0`, `f1` are invertible:
/// `(f0⁻¹, f1⁻¹, −f1⁻¹ ∘ f2 ∘ (f0⁻¹ × f0⁻¹))`.
pub fn invert_hom(h: &Hom2) -> Result<Hom2> {
    let f0 = h.f0.inverse().ok_or(Error::NotInvertible)?;
    let f1 = h.f1.inverse().ok_or(Error::NotInvertible)?;
    let f2 = h.f2.compose_inputs(&[&f0, &f0])?.compose_left(&f1)?.neg();
    Ok(Hom2 { f0, f1, f2 })
}

/// Derivation data on a Leibniz 2-algebra: linear pieces `d0`, `d1` and a
/// bilinear homotopy `d2 : g₀⊗g₀ → g₁`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation2 {
    pub d0: Mat,
    pub d1: Mat,
    pub d2: MultiMap,
}

impl Derivation2 {
    pub fn zero(g: &Leibniz2Algebra) -> Self {
        Derivation2 {
            d0: Mat::zeros(g.dim0, g.dim0),
            d1: Mat::zeros(g.dim1, g.dim1),
            d2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
        }
    }

    pub fn add(&self, other: &Derivation2) -> Result<Derivation2> {
        Ok(Derivation2 {
            d0: self.d0.add(&other.d0)?,
            d1: self.d1.add(&other.d1)?,
            d2: self.d2.add(&other.d2)?,
        })
    }
}

fn derivation_shapes(g: &Leibniz2Algebra, der: &Derivation2) -> Result<()> {
    if der.d0.rows() != g.dim0 || der.d0.cols() != g.dim0 {
        return Err(Error::ShapeMismatch("derivation degree-0 part has wrong shape".into()));
    }
    if der.d1.rows() != g.dim1 || der.d1.cols() != g.dim1 {
        return Err(Error::ShapeMismatch("derivation degree-1 part has wrong shape".into()));
    }
    if der.d2.input_dims() != [g.dim0, g.dim0] || der.d2.out_dim() != g.dim1 {
        return Err(Error::ShapeMismatch("derivation homotopy has wrong shape".into()));
    }
    Ok(())
}

/// Full residual table of the derivation laws; every basis tuple appears.
/// All laws are linear in the derivation data.
pub(crate) fn der_residuals(
    g: &Leibniz2Algebra,
    der: &Derivation2,
) -> Result<Vec<(&'static str, Vec<usize>, Vec<Scalar>)>> {
    g.validate()?;
    derivation_shapes(g, der)?;
    let (d0, d1) = (g.dim0, g.dim1);
    let mut v: Vec<(&'static str, Vec<usize>, Vec<Scalar>)> = Vec::new();

    // (chain) D0 d = d D1
    let diff = der.d0.mul(&g.d)?.sub(&g.d.mul(&der.d1)?)?;
    for j in 0..d1 {
        v.push(("(chain)", vec![j], diff.col(j)));
    }
    let ap0 = |x: &[Scalar]| der.d0.mul_vec(x).expect("degree-0 vector");
    let ap1 = |a: &[Scalar]| der.d1.mul_vec(a).expect("degree-1 vector");
    // (n) D0[x,y] - [D0 x, y] - [x, D0 y] = d D2(x,y)
    for i in 0..d0 {
        for j in 0..d0 {
            let (x, y) = (basis_vec(d0, i), basis_vec(d0, j));
            let mut r = ap0(&g.b00.eval_basis(&[i, j]));
            r = vec_sub(&r, &g.b00v(&der.d0.col(i), &y));
            r = vec_sub(&r, &g.b00v(&x, &der.d0.col(j)));
            r = vec_sub(&r, &g.dv(&der.d2.eval_basis(&[i, j])));
            v.push(("(n)", vec![i, j], r));
        }
    }
    // (o) D1[x,a] - [D0 x, a] - [x, D1 a] = D2(x, da)
    for i in 0..d0 {
        for j in 0..d1 {
            let (x, a) = (basis_vec(d0, i), basis_vec(d1, j));
            let mut r = ap1(&g.b01.eval_basis(&[i, j]));
            r = vec_sub(&r, &g.b01v(&der.d0.col(i), &a));
            r = vec_sub(&r, &g.b01v(&x, &der.d1.col(j)));
            r = vec_sub(&r, &der.d2.eval(&[&x, &g.d.col(j)])?);
            v.push(("(o)", vec![i, j], r));
        }
    }
    // (p) D1[a,x] - [D1 a, x] - [a, D0 x] = D2(da, x)
    for j in 0..d1 {
        for i in 0..d0 {
            let (a, x) = (basis_vec(d1, j), basis_vec(d0, i));
            let mut r = ap1(&g.b10.eval_basis(&[j, i]));
            r = vec_sub(&r, &g.b10v(&der.d1.col(j), &x));
            r = vec_sub(&r, &g.b10v(&a, &der.d0.col(i)));
            r = vec_sub(&r, &der.d2.eval(&[&g.d.col(j), &x])?);
            v.push(("(p)", vec![j, i], r));
        }
    }
    // (q) derivation rule for l3 with six D2 correction terms
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let (x, y, z) = (basis_vec(d0, i), basis_vec(d0, j), basis_vec(d0, k));
                let mut r = ap1(&g.l3.eval_basis(&[i, j, k]));
                r = vec_sub(&r, &g.l3v(&der.d0.col(i), &y, &z));
                r = vec_sub(&r, &g.l3v(&x, &der.d0.col(j), &z));
                r = vec_sub(&r, &g.l3v(&x, &y, &der.d0.col(k)));
                r = vec_sub(&r, &der.d2.eval(&[&x, &g.b00.eval_basis(&[j, k])])?);
                r = vec_add(&r, &der.d2.eval(&[&g.b00.eval_basis(&[i, j]), &z])?);
                r = vec_add(&r, &der.d2.eval(&[&y, &g.b00.eval_basis(&[i, k])])?);
                r = vec_sub(&r, &g.b01v(&x, &der.d2.eval_basis(&[j, k])));
                r = vec_add(&r, &g.b10v(&der.d2.eval_basis(&[i, j]), &z));
                r = vec_add(&r, &g.b01v(&y, &der.d2.eval_basis(&[i, k])));
                v.push(("(q)", vec![i, j, k], r));
            }
        }
    }
    Ok(v)
}

/// Check the derivation laws `(chain)` and `(n)`–`(q)` on every basis tuple.
/// Residuals are left side minus right side of each law.
pub fn verify_derivation(g: &Leibniz2Algebra, der: &Derivation2) -> Result<Verification> {
    let mut v = Verification::new();
    for (law, at, r) in der_residuals(g, der)? {
        v.check(law, &at, r);
    }
    Ok(v)
}
