//! Representations of a Leibniz 2-algebra on a two-term complex.
//!
//! A representation consists of six unary action families and three binary
//! homotopies, all stored with the module argument in the last slot:
//!
//! * `l0_0, r0_0 : g₀ → End(V₀)` and `l0_1, r0_1 : g₀ → End(V₁)`, the two
//!   grades of the left and right degree-0 actions,
//! * `l1, r1 : g₁ → Hom(V₀, V₁)`,
//! * `l2, m2, r2 : g₀⊗g₀ → Hom(V₀, V₁)`.
//!
//! [`verify_representation`] checks eleven coherence laws `rep(2)`–`rep(12)`
//! plus the requirement that each degree-0 action commutes with the
//! differentials. Equations `(2)`–`(4)` compare operators on both grades of
//! `V`; a `V0`/`V1` tag in the law label says which grade a violation lives
//! in. The bracket role exercised by each law is tagged `LLM`, `MLL`, `LML`
//! or `l3`.

use crate::algebra::Leibniz2Algebra;
use crate::complex::TwoTermComplex;
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::multimap::MultiMap;
use crate::scalar::Scalar;
use crate::verify::Verification;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub v: TwoTermComplex,
    pub l0_0: MultiMap,
    pub l0_1: MultiMap,
    pub r0_0: MultiMap,
    pub r0_1: MultiMap,
    pub l1: MultiMap,
    pub r1: MultiMap,
    pub l2: MultiMap,
    pub m2: MultiMap,
    pub r2: MultiMap,
}

impl Representation {
    /// The zero action on `v`; valid for every algebra.
    pub fn zero(g: &Leibniz2Algebra, v: TwoTermComplex) -> Self {
        let (v0, v1) = (v.dim0, v.dim1);
        Representation {
            v,
            l0_0: MultiMap::zeros(vec![g.dim0, v0], v0),
            l0_1: MultiMap::zeros(vec![g.dim0, v1], v1),
            r0_0: MultiMap::zeros(vec![g.dim0, v0], v0),
            r0_1: MultiMap::zeros(vec![g.dim0, v1], v1),
            l1: MultiMap::zeros(vec![g.dim1, v0], v1),
            r1: MultiMap::zeros(vec![g.dim1, v0], v1),
            l2: MultiMap::zeros(vec![g.dim0, g.dim0, v0], v1),
            m2: MultiMap::zeros(vec![g.dim0, g.dim0, v0], v1),
            r2: MultiMap::zeros(vec![g.dim0, g.dim0, v0], v1),
        }
    }

    pub fn validate(&self, g: &Leibniz2Algebra) -> Result<()> {
        crate::complex::validate_complex(&self.v)?;
        let (v0, v1) = (self.v.dim0, self.v.dim1);
        let expect = [
            ("l0_0", &self.l0_0, vec![g.dim0, v0], v0),
            ("l0_1", &self.l0_1, vec![g.dim0, v1], v1),
            ("r0_0", &self.r0_0, vec![g.dim0, v0], v0),
            ("r0_1", &self.r0_1, vec![g.dim0, v1], v1),
            ("l1", &self.l1, vec![g.dim1, v0], v1),
            ("r1", &self.r1, vec![g.dim1, v0], v1),
            ("l2", &self.l2, vec![g.dim0, g.dim0, v0], v1),
            ("m2", &self.m2, vec![g.dim0, g.dim0, v0], v1),
            ("r2", &self.r2, vec![g.dim0, g.dim0, v0], v1),
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

    // Operator matrices at vector-valued algebra arguments.

    pub fn l0_0m(&self, x: &[Scalar]) -> Mat {
        self.l0_0.partial_mat(&[x]).expect("degree-0 argument")
    }

    pub fn l0_1m(&self, x: &[Scalar]) -> Mat {
        self.l0_1.partial_mat(&[x]).expect("degree-0 argument")
    }

    pub fn r0_0m(&self, x: &[Scalar]) -> Mat {
        self.r0_0.partial_mat(&[x]).expect("degree-0 argument")
    }

    pub fn r0_1m(&self, x: &[Scalar]) -> Mat {
        self.r0_1.partial_mat(&[x]).expect("degree-0 argument")
    }

    pub fn l1m(&self, a: &[Scalar]) -> Mat {
        self.l1.partial_mat(&[a]).expect("degree-1 argument")
    }

    pub fn r1m(&self, a: &[Scalar]) -> Mat {
        self.r1.partial_mat(&[a]).expect("degree-1 argument")
    }

    pub fn l2m(&self, x: &[Scalar], y: &[Scalar]) -> Mat {
        self.l2.partial_mat(&[x, y]).expect("degree-0 arguments")
    }

    pub fn m2m(&self, x: &[Scalar], y: &[Scalar]) -> Mat {
        self.m2.partial_mat(&[x, y]).expect("degree-0 arguments")
    }

    pub fn r2m(&self, x: &[Scalar], y: &[Scalar]) -> Mat {
        self.r2.partial_mat(&[x, y]).expect("degree-0 arguments")
    }
}

/// An element of `End⁰_∂(V)`: a pair of endomorphisms, one per grade.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EndV {
    pub x0: Mat,
    pub x1: Mat,
}

impl EndV {
    /// Membership in `End⁰_∂`: the pair commutes with the differential.
    pub fn in_end0(&self, v: &TwoTermComplex) -> Result<bool> {
        Ok(self.x0.mul(&v.d)? == v.d.mul(&self.x1)?)
    }
}

/// `δA = (∂∘A, A∘∂)` for `A : V₀ → V₁`.
pub fn endv_delta(v: &TwoTermComplex, a: &Mat) -> Result<EndV> {
    if a.rows() != v.dim1 || a.cols() != v.dim0 {
        return Err(Error::ShapeMismatch(format!(
            "delta argument must be {}x{}, got {}x{}",
            v.dim1,
            v.dim0,
            a.rows(),
            a.cols()
        )));
    }
    Ok(EndV { x0: v.d.mul(a)?, x1: a.mul(&v.d)? })
}

/// `[X, A]_C = X₁∘A − A∘X₀` for `X ∈ End⁰_∂(V)` and `A : V₀ → V₁`.
pub fn endv_bracket(x: &EndV, a: &Mat) -> Result<Mat> {
    x.x1.mul(a)?.sub(&a.mul(&x.x0)?)
}

fn check_cols(v: &mut Verification, law: &str, at: &[usize], diff: &Mat) {
    for m in 0..diff.cols() {
        let mut full = at.to_vec();
        full.push(m);
        v.check(law, &full, diff.col(m));
    }
}

/// Check all representation laws of `rep` over `g` on every basis tuple.
pub fn verify_representation(g: &Leibniz2Algebra, rep: &Representation) -> Result<Verification> {
    g.validate()?;
    rep.validate(g)?;
    let (d0, d1) = (g.dim0, g.dim1);
    let dv = &rep.v.d;
    let mut v = Verification::new();

    // basis operator matrices
    let x0: Vec<Mat> = (0..d0).map(|i| rep.l0_0.partial_mat_basis(&[i]).unwrap()).collect();
    let x1: Vec<Mat> = (0..d0).map(|i| rep.l0_1.partial_mat_basis(&[i]).unwrap()).collect();
    let y0: Vec<Mat> = (0..d0).map(|i| rep.r0_0.partial_mat_basis(&[i]).unwrap()).collect();
    let y1: Vec<Mat> = (0..d0).map(|i| rep.r0_1.partial_mat_basis(&[i]).unwrap()).collect();
    let lw: Vec<Mat> = (0..d1).map(|j| rep.l1.partial_mat_basis(&[j]).unwrap()).collect();
    let rw: Vec<Mat> = (0..d1).map(|j| rep.r1.partial_mat_basis(&[j]).unwrap()).collect();

    // degree-0 actions must commute with the differentials
    for i in 0..d0 {
        let dl = x0[i].mul(dv)?.sub(&dv.mul(&x1[i])?)?;
        check_cols(&mut v, "end0(l0)", &[i], &dl);
        let dr = y0[i].mul(dv)?.sub(&dv.mul(&y1[i])?)?;
        check_cols(&mut v, "end0(r0)", &[i], &dr);
    }

    let comm = |a: &Mat, b: &Mat| -> Result<Mat> { a.mul(b)?.sub(&b.mul(a)?) };

    // rep(2)-rep(4): operator laws on a pair of degree-0 inputs
    for i in 0..d0 {
        for j in 0..d0 {
            let bxy = g.b00.eval_basis(&[i, j]);
            let l2ij = rep.l2.partial_mat_basis(&[i, j])?;
            let m2ij = rep.m2.partial_mat_basis(&[i, j])?;
            let r2ij = rep.r2.partial_mat_basis(&[i, j])?;

            let diff = rep.l0_0.partial_mat(&[&bxy])?.sub(&comm(&x0[i], &x0[j])?)?.sub(&dv.mul(&l2ij)?)?;
            check_cols(&mut v, "rep(2)[LLM,V0]", &[i, j], &diff);
            let diff = rep.l0_1.partial_mat(&[&bxy])?.sub(&comm(&x1[i], &x1[j])?)?.sub(&l2ij.mul(dv)?)?;
            check_cols(&mut v, "rep(2)[LLM,V1]", &[i, j], &diff);

            let diff = rep.r0_0.partial_mat(&[&bxy])?.sub(&comm(&x0[i], &y0[j])?)?.sub(&dv.mul(&m2ij)?)?;
            check_cols(&mut v, "rep(3)[MLL,V0]", &[i, j], &diff);
            let diff = rep.r0_1.partial_mat(&[&bxy])?.sub(&comm(&x1[i], &y1[j])?)?.sub(&m2ij.mul(dv)?)?;
            check_cols(&mut v, "rep(3)[MLL,V1]", &[i, j], &diff);

            let diff = rep
                .r0_0
                .partial_mat(&[&bxy])?
                .sub(&x0[i].mul(&y0[j])?)?
                .sub(&y0[j].mul(&y0[i])?)?
                .add(&dv.mul(&r2ij)?)?;
            check_cols(&mut v, "rep(4)[LML,V0]", &[i, j], &diff);
            let diff = rep
                .r0_1
                .partial_mat(&[&bxy])?
                .sub(&x1[i].mul(&y1[j])?)?
                .sub(&y1[j].mul(&y1[i])?)?
                .add(&r2ij.mul(dv)?)?;
            check_cols(&mut v, "rep(4)[LML,V1]", &[i, j], &diff);
        }
    }

    // rep(5)-rep(7): one degree-0 and one degree-1 input, bracket [x,a]
    for i in 0..d0 {
        for j in 0..d1 {
            let bxa = g.b01.eval_basis(&[i, j]);
            let da = g.d.col(j);
            let xi = crate::mat::basis_vec(d0, i);

            let diff = rep
                .l1
                .partial_mat(&[&bxa])?
                .sub(&x1[i].mul(&lw[j])?.sub(&lw[j].mul(&x0[i])?)?)?
                .sub(&rep.l2.partial_mat(&[&xi, &da])?)?;
            check_cols(&mut v, "rep(5)[LLM]", &[i, j], &diff);

            let diff = rep
                .r1
                .partial_mat(&[&bxa])?
                .sub(&x1[i].mul(&rw[j])?.sub(&rw[j].mul(&x0[i])?)?)?
                .sub(&rep.m2.partial_mat(&[&xi, &da])?)?;
            check_cols(&mut v, "rep(6)[MLL]", &[i, j], &diff);

            let diff = rep
                .r1
                .partial_mat(&[&bxa])?
                .sub(&x1[i].mul(&rw[j])?)?
                .sub(&rw[j].mul(&y0[i])?)?
                .add(&rep.r2.partial_mat(&[&xi, &da])?)?;
            check_cols(&mut v, "rep(7)[LML]", &[i, j], &diff);
        }
    }

    // rep(8)-rep(10): bracket [a,x]
    for j in 0..d1 {
        for i in 0..d0 {
            let bax = g.b10.eval_basis(&[j, i]);
            let da = g.d.col(j);
            let xi = crate::mat::basis_vec(d0, i);

            let diff = rep
                .l1
                .partial_mat(&[&bax])?
                .sub(&lw[j].mul(&x0[i])?.sub(&x1[i].mul(&lw[j])?)?)?
                .sub(&rep.l2.partial_mat(&[&da, &xi])?)?;
            check_cols(&mut v, "rep(8)[LLM]", &[j, i], &diff);

            let diff = rep
                .r1
                .partial_mat(&[&bax])?
                .sub(&lw[j].mul(&y0[i])?.sub(&y1[i].mul(&lw[j])?)?)?
                .sub(&rep.m2.partial_mat(&[&da, &xi])?)?;
            check_cols(&mut v, "rep(9)[MLL]", &[j, i], &diff);

            let diff = rep
                .r1
                .partial_mat(&[&bax])?
                .sub(&lw[j].mul(&y0[i])?)?
                .sub(&y1[i].mul(&rw[j])?)?
                .add(&rep.r2.partial_mat(&[&da, &xi])?)?;
            check_cols(&mut v, "rep(10)[LML]", &[j, i], &diff);
        }
    }

    // rep(11), rep(12): compatibility of the binary homotopies with l3
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let ei = crate::mat::basis_vec(d0, i);
                let ej = crate::mat::basis_vec(d0, j);
                let ek = crate::mat::basis_vec(d0, k);
                let bjk = g.b00.eval_basis(&[j, k]);
                let bij = g.b00.eval_basis(&[i, j]);
                let bik = g.b00.eval_basis(&[i, k]);
                let l3ijk = g.l3.eval_basis(&[i, j, k]);

                let l2jk = rep.l2.partial_mat_basis(&[j, k])?;
                let l2ij = rep.l2.partial_mat_basis(&[i, j])?;
                let l2ik = rep.l2.partial_mat_basis(&[i, k])?;
                let diff = x1[i]
                    .mul(&l2jk)?
                    .sub(&l2jk.mul(&x0[i])?)?
                    .sub(&l2ij.mul(&x0[k])?.sub(&x1[k].mul(&l2ij)?)?)?
                    .sub(&x1[j].mul(&l2ik)?.sub(&l2ik.mul(&x0[j])?)?)?
                    .add(&rep.l2.partial_mat(&[&ei, &bjk])?)?
                    .sub(&rep.l2.partial_mat(&[&bij, &ek])?)?
                    .sub(&rep.l2.partial_mat(&[&ej, &bik])?)?
                    .sub(&rep.l1.partial_mat(&[&l3ijk])?)?;
                check_cols(&mut v, "rep(11)[l3]", &[i, j, k], &diff);

                let m2jk = rep.m2.partial_mat_basis(&[j, k])?;
                let m2ik = rep.m2.partial_mat_basis(&[i, k])?;
                let diff = rep
                    .m2
                    .partial_mat(&[&ei, &bjk])?
                    .sub(&rep.m2.partial_mat(&[&bij, &ek])?)?
                    .sub(&rep.m2.partial_mat(&[&ej, &bik])?)?
                    .add(&x1[i].mul(&m2jk)?.sub(&m2jk.mul(&x0[i])?)?)?
                    .sub(&l2ij.mul(&y0[k])?.sub(&y1[k].mul(&l2ij)?)?)?
                    .sub(&x1[j].mul(&m2ik)?.sub(&m2ik.mul(&x0[j])?)?)?
                    .sub(&rep.r1.partial_mat(&[&l3ijk])?)?;
                check_cols(&mut v, "rep(12)[l3]", &[i, j, k], &diff);
            }
        }
    }
    Ok(v)
}

/// The adjoint representation of `g` on its own underlying complex.
pub fn adjoint_rep(g: &Leibniz2Algebra) -> Result<Representation> {
    g.validate()?;
    Ok(Representation {
        v: g.complex(),
        l0_0: g.b00.clone(),
        l0_1: g.b01.clone(),
        r0_0: g.b00.permute_inputs(&[1, 0])?,
        r0_1: g.b10.permute_inputs(&[1, 0])?,
        l1: g.b10.clone(),
        r1: g.b01.permute_inputs(&[1, 0])?,
        l2: g.l3.neg(),
        m2: g.l3.permute_inputs(&[0, 2, 1])?.neg(),
        r2: g.l3.permute_inputs(&[2, 0, 1])?.neg(),
    })
}
