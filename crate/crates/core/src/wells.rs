//! Inducibility of automorphism and derivation pairs on abelian extensions.
//!
//! Fix an extension `V >--i--> ĝ --p-->> g`. A pair `(β, α)` of an
//! automorphism `β` of the fiber complex and an automorphism `α` of the base
//! is *inducible* when some automorphism `F` of `ĝ` preserves the fiber,
//! restricts to `β` and projects to `α`. [`aut_induce`] decides this by
//! solving an affine system over a degree-1 cochain, and independently
//! computes the obstruction: the class of `T(c) − c` in second cohomology,
//! where `c` is the extracted cocycle and `T` twists it by the pair
//! ([`wells_aut`]). The pair is inducible exactly when that class vanishes.
//! [`der_induce`] and [`wells_der`] are the derivation analogues, where the
//! obstruction is the class of a difference cochain `Ψ(c)` and no
//! invertibility is involved. [`f_lambda`] and [`d_lambda`] realize degree-1
//! cocycles as automorphisms and derivations projecting to the identity and
//! zero pairs; [`exactness_report`] spot-checks the resulting exact sequence
//! on caller-supplied samples.

use crate::algebra::{
    compose_hom, der_residuals, hom_residuals, identity_hom, invert_hom, verify_derivation,
    verify_hom, Derivation2, Hom2, Leibniz2Algebra,
};
use crate::cochain::{class_representative, d1_apply, Cochain1, Cochain2};
use crate::complex::TwoTermComplex;
use crate::error::{Error, Result};
use crate::ext::{
    extract_cocycle, find_splitting, induced_rep, two_fiber_l3_vanishes, Extension, Splitting,
};
use crate::mat::{basis_vec, solve_affine, vec_add, vec_is_zero, vec_neg, Mat};
use crate::multimap::MultiMap;
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::verify::{Verification, Violation};

/// An automorphism pair: `beta0`, `beta1` act on the fiber complex, `alpha`
/// on the base algebra. All three layers must be invertible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutPair {
    pub beta0: Mat,
    pub beta1: Mat,
    pub alpha: Hom2,
}

impl AutPair {
    pub fn identity(g: &Leibniz2Algebra, v: &TwoTermComplex) -> Self {
        AutPair {
            beta0: Mat::identity(v.dim0),
            beta1: Mat::identity(v.dim1),
            alpha: identity_hom(g),
        }
    }

    /// Componentwise composite `self ∘ other`.
    pub fn compose(&self, other: &AutPair) -> Result<AutPair> {
        Ok(AutPair {
            beta0: self.beta0.mul(&other.beta0)?,
            beta1: self.beta1.mul(&other.beta1)?,
            alpha: compose_hom(&self.alpha, &other.alpha)?,
        })
    }
}

/// A derivation pair: `beta0`, `beta1` are chain endomorphisms of the fiber
/// complex, `alpha` is a derivation of the base. Nothing need be invertible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerPair {
    pub beta0: Mat,
    pub beta1: Mat,
    pub alpha: Derivation2,
}

impl DerPair {
    pub fn zero(g: &Leibniz2Algebra, v: &TwoTermComplex) -> Self {
        DerPair {
            beta0: Mat::zeros(v.dim0, v.dim0),
            beta1: Mat::zeros(v.dim1, v.dim1),
            alpha: Derivation2::zero(g),
        }
    }

    pub fn add(&self, other: &DerPair) -> Result<DerPair> {
        Ok(DerPair {
            beta0: self.beta0.add(&other.beta0)?,
            beta1: self.beta1.add(&other.beta1)?,
            alpha: self.alpha.add(&other.alpha)?,
        })
    }
}

fn beta_shapes(v: &TwoTermComplex, beta0: &Mat, beta1: &Mat) -> Result<()> {
    if beta0.rows() != v.dim0 || beta0.cols() != v.dim0 {
        return Err(Error::ShapeMismatch(format!(
            "fiber degree-0 map must be {0}x{0}, got {1}x{2}",
            v.dim0,
            beta0.rows(),
            beta0.cols()
        )));
    }
    if beta1.rows() != v.dim1 || beta1.cols() != v.dim1 {
        return Err(Error::ShapeMismatch(format!(
            "fiber degree-1 map must be {0}x{0}, got {1}x{2}",
            v.dim1,
            beta1.rows(),
            beta1.cols()
        )));
    }
    if beta0.mul(&v.d)? != v.d.mul(beta1)? {
        return Err(Error::Invalid("fiber map does not commute with the differential".into()));
    }
    Ok(())
}

fn validate_aut_pair(g: &Leibniz2Algebra, v: &TwoTermComplex, pair: &AutPair) -> Result<()> {
    beta_shapes(v, &pair.beta0, &pair.beta1)?;
    if !pair.beta0.is_invertible() || !pair.beta1.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if !pair.alpha.f0.is_invertible() || !pair.alpha.f1.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if !verify_hom(g, g, &pair.alpha)?.is_ok() {
        return Err(Error::Invalid("base component is not an endomorphism".into()));
    }
    Ok(())
}

fn validate_der_pair(g: &Leibniz2Algebra, v: &TwoTermComplex, pair: &DerPair) -> Result<()> {
    beta_shapes(v, &pair.beta0, &pair.beta1)?;
    if !verify_derivation(g, &pair.alpha)?.is_ok() {
        return Err(Error::Invalid("base component is not a derivation".into()));
    }
    Ok(())
}

/// Compatibility conditions `COC6`..`COC14` of an automorphism pair with a
/// representation: conjugation by `β` must intertwine every action operator
/// with its `α`-twist, the binary operators picking up `α`'s homotopy.
pub fn aut_compatible(
    g: &Leibniz2Algebra,
    rep: &Representation,
    pair: &AutPair,
) -> Result<Verification> {
    rep.validate(g)?;
    validate_aut_pair(g, &rep.v, pair)?;
    let ib0 = pair.beta0.inverse().ok_or(Error::NotInvertible)?;
    let ib1 = pair.beta1.inverse().ok_or(Error::NotInvertible)?;
    let mut v = Verification::new();
    for i in 0..g.dim0 {
        let x = basis_vec(g.dim0, i);
        let ax = pair.alpha.f0.col(i);
        let r = pair.beta0.mul(&rep.l0_0m(&x))?.mul(&ib0)?.sub(&rep.l0_0m(&ax))?;
        v.check("COC6", &[i], r.entries().to_vec());
        let r = pair.beta0.mul(&rep.r0_0m(&x))?.mul(&ib0)?.sub(&rep.r0_0m(&ax))?;
        v.check("COC7", &[i], r.entries().to_vec());
        let r = pair.beta1.mul(&rep.l0_1m(&x))?.mul(&ib1)?.sub(&rep.l0_1m(&ax))?;
        v.check("COC8", &[i], r.entries().to_vec());
        let r = pair.beta1.mul(&rep.r0_1m(&x))?.mul(&ib1)?.sub(&rep.r0_1m(&ax))?;
        v.check("COC9", &[i], r.entries().to_vec());
    }
    for j in 0..g.dim1 {
        let a = basis_vec(g.dim1, j);
        let aa = pair.alpha.f1.col(j);
        let r = pair.beta1.mul(&rep.r1m(&a))?.mul(&ib0)?.sub(&rep.r1m(&aa))?;
        v.check("COC10", &[j], r.entries().to_vec());
        let r = pair.beta1.mul(&rep.l1m(&a))?.mul(&ib0)?.sub(&rep.l1m(&aa))?;
        v.check("COC11", &[j], r.entries().to_vec());
    }
    for i in 0..g.dim0 {
        for j in 0..g.dim0 {
            let x = basis_vec(g.dim0, i);
            let y = basis_vec(g.dim0, j);
            let ax = pair.alpha.f0.col(i);
            let ay = pair.alpha.f0.col(j);
            let a2 = pair.alpha.f2.eval_basis(&[i, j]);
            let r = rep
                .l2m(&ax, &ay)
                .add(&rep.l1m(&a2))?
                .sub(&pair.beta1.mul(&rep.l2m(&x, &y))?.mul(&ib0)?)?;
            v.check("COC12", &[i, j], r.entries().to_vec());
            let r = rep
                .r2m(&ax, &ay)
                .sub(&rep.r1m(&a2))?
                .sub(&pair.beta1.mul(&rep.r2m(&x, &y))?.mul(&ib0)?)?;
            v.check("COC13", &[i, j], r.entries().to_vec());
            let r = rep
                .m2m(&ax, &ay)
                .add(&rep.r1m(&a2))?
                .sub(&pair.beta1.mul(&rep.m2m(&x, &y))?.mul(&ib0)?)?;
            v.check("COC14", &[i, j], r.entries().to_vec());
        }
    }
    Ok(v)
}

/// Compatibility conditions `COCY6`..`COCY14` of a derivation pair with a
/// representation: the commutator of `β` with every action operator must be
/// the `α`-derivative of that operator.
pub fn der_compatible(
    g: &Leibniz2Algebra,
    rep: &Representation,
    pair: &DerPair,
) -> Result<Verification> {
    rep.validate(g)?;
    validate_der_pair(g, &rep.v, pair)?;
    let mut v = Verification::new();
    for i in 0..g.dim0 {
        let x = basis_vec(g.dim0, i);
        let ax = pair.alpha.d0.col(i);
        let r = pair
            .beta0
            .mul(&rep.l0_0m(&x))?
            .sub(&rep.l0_0m(&ax))?
            .sub(&rep.l0_0m(&x).mul(&pair.beta0)?)?;
        v.check("COCY6", &[i], r.entries().to_vec());
        let r = pair
            .beta0
            .mul(&rep.r0_0m(&x))?
            .sub(&rep.r0_0m(&ax))?
            .sub(&rep.r0_0m(&x).mul(&pair.beta0)?)?;
        v.check("COCY7", &[i], r.entries().to_vec());
        let r = pair
            .beta1
            .mul(&rep.l0_1m(&x))?
            .sub(&rep.l0_1m(&ax))?
            .sub(&rep.l0_1m(&x).mul(&pair.beta1)?)?;
        v.check("COCY8", &[i], r.entries().to_vec());
        let r = pair
            .beta1
            .mul(&rep.r0_1m(&x))?
            .sub(&rep.r0_1m(&ax))?
            .sub(&rep.r0_1m(&x).mul(&pair.beta1)?)?;
        v.check("COCY9", &[i], r.entries().to_vec());
    }
    for j in 0..g.dim1 {
        let a = basis_vec(g.dim1, j);
        let aa = pair.alpha.d1.col(j);
        let r = pair
            .beta1
            .mul(&rep.l1m(&a))?
            .sub(&rep.l1m(&aa))?
            .sub(&rep.l1m(&a).mul(&pair.beta0)?)?;
        v.check("COCY10", &[j], r.entries().to_vec());
        let r = pair
            .beta1
            .mul(&rep.r1m(&a))?
            .sub(&rep.r1m(&aa))?
            .sub(&rep.r1m(&a).mul(&pair.beta0)?)?;
        v.check("COCY11", &[j], r.entries().to_vec());
    }
    for i in 0..g.dim0 {
        for j in 0..g.dim0 {
            let x = basis_vec(g.dim0, i);
            let y = basis_vec(g.dim0, j);
            let ax = pair.alpha.d0.col(i);
            let ay = pair.alpha.d0.col(j);
            let a2 = pair.alpha.d2.eval_basis(&[i, j]);
            let r = pair
                .beta1
                .mul(&rep.l2m(&x, &y))?
                .sub(&rep.l2m(&ax, &y))?
                .sub(&rep.l2m(&x, &ay))?
                .sub(&rep.l2m(&x, &y).mul(&pair.beta0)?)?
                .sub(&rep.l1m(&a2))?;
            v.check("COCY12", &[i, j], r.entries().to_vec());
            let r = pair
                .beta1
                .mul(&rep.r2m(&x, &y))?
                .sub(&rep.r2m(&ax, &y))?
                .sub(&rep.r2m(&x, &ay))?
                .sub(&rep.r2m(&x, &y).mul(&pair.beta0)?)?
                .add(&rep.r1m(&a2))?;
            v.check("COCY13", &[i, j], r.entries().to_vec());
            let r = pair
                .beta1
                .mul(&rep.m2m(&x, &y))?
                .sub(&rep.m2m(&ax, &y))?
                .sub(&rep.m2m(&x, &ay))?
                .sub(&rep.m2m(&x, &y).mul(&pair.beta0)?)?
                .sub(&rep.r1m(&a2))?;
            v.check("COCY14", &[i, j], r.entries().to_vec());
        }
    }
    Ok(v)
}

/// `(m0, m1)` of the lift candidate: the pair acting through the splitting
/// and retraction, plus a fiber-valued cochain `λ` twisting the section.
fn candidate_linear(
    e: &Extension,
    s: &Splitting,
    a0: &Mat,
    a1: &Mat,
    b0: &Mat,
    b1: &Mat,
    lam: &Cochain1,
) -> Result<(Mat, Mat)> {
    let pi0 = Mat::identity(e.hat.dim0).sub(&s.s0.mul(&e.p.m0)?)?;
    let m0 = s
        .s0
        .mul(a0)?
        .mul(&e.p.m0)?
        .add(&e.i.m0.mul(&lam.phi0)?.mul(&e.p.m0)?)?
        .add(&e.i.m0.mul(b0)?.mul(&e.q().m0)?.mul(&pi0)?)?;
    let pi1 = Mat::identity(e.hat.dim1).sub(&s.s1.mul(&e.p.m1)?)?;
    let m1 = s
        .s1
        .mul(a1)?
        .mul(&e.p.m1)?
        .add(&e.i.m1.mul(&lam.phi1)?.mul(&e.p.m1)?)?
        .add(&e.i.m1.mul(b1)?.mul(&e.q().m1)?.mul(&pi1)?)?;
    Ok((m0, m1))
}

fn candidate_homotopy(
    e: &Extension,
    s: &Splitting,
    a2: &MultiMap,
    chi: &MultiMap,
) -> Result<MultiMap> {
    a2.compose_inputs(&[&e.p.m0, &e.p.m0])?
        .compose_left(&s.s1)?
        .add(&chi.compose_inputs(&[&e.p.m0, &e.p.m0])?.compose_left(&e.i.m1)?)
}

pub(crate) fn aut_candidate(
    e: &Extension,
    s: &Splitting,
    pair: &AutPair,
    lam: &Cochain1,
) -> Result<Hom2> {
    let (f0, f1) = candidate_linear(
        e,
        s,
        &pair.alpha.f0,
        &pair.alpha.f1,
        &pair.beta0,
        &pair.beta1,
        lam,
    )?;
    let f2 = candidate_homotopy(e, s, &pair.alpha.f2, &lam.chi)?;
    Ok(Hom2 { f0, f1, f2 })
}

pub(crate) fn der_candidate(
    e: &Extension,
    s: &Splitting,
    pair: &DerPair,
    lam: &Cochain1,
) -> Result<Derivation2> {
    let (d0, d1) = candidate_linear(
        e,
        s,
        &pair.alpha.d0,
        &pair.alpha.d1,
        &pair.beta0,
        &pair.beta1,
        lam,
    )?;
    let d2 = candidate_homotopy(e, s, &pair.alpha.d2, &lam.chi)?;
    Ok(Derivation2 { d0, d1, d2 })
}

/// Restrict and project a fiber-preserving automorphism of the total algebra
/// to the pair it induces on fiber and base.
pub fn project_aut(e: &Extension, f: &Hom2) -> Result<AutPair> {
    if !verify_hom(&e.hat, &e.hat, f)?.is_ok() {
        return Err(Error::Invalid("map is not an endomorphism of the total algebra".into()));
    }
    if !f.f0.is_invertible() || !f.f1.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let fi0 = f.f0.mul(&e.i.m0)?;
    let fi1 = f.f1.mul(&e.i.m1)?;
    if e.i.m0.mul(&e.q().m0.mul(&fi0)?)? != fi0 {
        return Err(Error::FiberNotPreserved("degree-0 image of the fiber escapes it".into()));
    }
    if e.i.m1.mul(&e.q().m1.mul(&fi1)?)? != fi1 {
        return Err(Error::FiberNotPreserved("degree-1 image of the fiber escapes it".into()));
    }
    let s = find_splitting(e)?;
    let pair = AutPair {
        beta0: e.q().m0.mul(&fi0)?,
        beta1: e.q().m1.mul(&fi1)?,
        alpha: Hom2 {
            f0: e.p.m0.mul(&f.f0)?.mul(&s.s0)?,
            f1: e.p.m1.mul(&f.f1)?.mul(&s.s1)?,
            f2: f.f2.compose_inputs(&[&s.s0, &s.s0])?.compose_left(&e.p.m1)?,
        },
    };
    validate_aut_pair(&e.base, &e.fiber, &pair)?;
    Ok(pair)
}

/// Restrict and project a fiber-preserving derivation of the total algebra
/// to the pair it induces on fiber and base.
pub fn project_der(e: &Extension, der: &Derivation2) -> Result<DerPair> {
    if !verify_derivation(&e.hat, der)?.is_ok() {
        return Err(Error::Invalid("map is not a derivation of the total algebra".into()));
    }
    let di0 = der.d0.mul(&e.i.m0)?;
    let di1 = der.d1.mul(&e.i.m1)?;
    if e.i.m0.mul(&e.q().m0.mul(&di0)?)? != di0 {
        return Err(Error::FiberNotPreserved("degree-0 image of the fiber escapes it".into()));
    }
    if e.i.m1.mul(&e.q().m1.mul(&di1)?)? != di1 {
        return Err(Error::FiberNotPreserved("degree-1 image of the fiber escapes it".into()));
    }
    let s = find_splitting(e)?;
    let pair = DerPair {
        beta0: e.q().m0.mul(&di0)?,
        beta1: e.q().m1.mul(&di1)?,
        alpha: Derivation2 {
            d0: e.p.m0.mul(&der.d0)?.mul(&s.s0)?,
            d1: e.p.m1.mul(&der.d1)?.mul(&s.s1)?,
            d2: der.d2.compose_inputs(&[&s.s0, &s.s0])?.compose_left(&e.p.m1)?,
        },
    };
    validate_der_pair(&e.base, &e.fiber, &pair)?;
    Ok(pair)
}

/// Obstruction class of an automorphism pair: the canonical representative
/// of `[T(c) − c]`, where `T(c)` pulls every component of `c` back along the
/// inverse of `α` and pushes forward along `β`. Zero exactly when the pair
/// is inducible on the extension `c` classifies. Errors with
/// [`Error::IncompatiblePair`] when the compatibility conditions fail.
pub fn wells_aut(
    g: &Leibniz2Algebra,
    rep: &Representation,
    c: &Cochain2,
    pair: &AutPair,
) -> Result<Vec<Scalar>> {
    c.validate(g, &rep.v)?;
    let compat = aut_compatible(g, rep, pair)?;
    if let Some(first) = compat.violations.first() {
        return Err(Error::IncompatiblePair(format!("{} fails at {:?}", first.law, first.at)));
    }
    let inv = invert_hom(&pair.alpha)?;
    let tc = Cochain2 {
        psi: pair.beta0.mul(&c.psi)?.mul(&inv.f1)?,
        omega: c.omega.compose_inputs(&[&inv.f0, &inv.f0])?.compose_left(&pair.beta0)?,
        mu: c.mu.compose_inputs(&[&inv.f0, &inv.f1])?.compose_left(&pair.beta1)?,
        nu: c.nu.compose_inputs(&[&inv.f1, &inv.f0])?.compose_left(&pair.beta1)?,
        theta: c
            .theta
            .compose_inputs(&[&inv.f0, &inv.f0, &inv.f0])?
            .compose_left(&pair.beta1)?,
    };
    class_representative(g, rep, &tc.sub(c)?.flatten())
}

/// Obstruction class of a derivation pair: the canonical representative of
/// `[Ψ(c)]`, where `Ψ(c)` is the `(β, α)`-derivative of every component of
/// `c`. Zero exactly when the pair is inducible on the extension `c`
/// classifies. Errors with [`Error::IncompatiblePair`] when the
/// compatibility conditions fail.
pub fn wells_der(
    g: &Leibniz2Algebra,
    rep: &Representation,
    c: &Cochain2,
    pair: &DerPair,
) -> Result<Vec<Scalar>> {
    c.validate(g, &rep.v)?;
    let compat = der_compatible(g, rep, pair)?;
    if let Some(first) = compat.violations.first() {
        return Err(Error::IncompatiblePair(format!("{} fails at {:?}", first.law, first.at)));
    }
    let a0 = &pair.alpha.d0;
    let a1 = &pair.alpha.d1;
    let a2 = &pair.alpha.d2;
    let psi = pair.beta0.mul(&c.psi)?.sub(&c.psi.mul(a1)?)?;
    let omega = c
        .omega
        .compose_left(&pair.beta0)?
        .sub(&c.omega.compose_input(0, a0)?)?
        .sub(&c.omega.compose_input(1, a0)?)?
        .sub(&a2.compose_left(&c.psi)?)?;
    let mu = c
        .mu
        .compose_left(&pair.beta1)?
        .sub(&c.mu.compose_input(0, a0)?)?
        .sub(&c.mu.compose_input(1, a1)?)?;
    let nu = c
        .nu
        .compose_left(&pair.beta1)?
        .sub(&c.nu.compose_input(0, a1)?)?
        .sub(&c.nu.compose_input(1, a0)?)?;
    let mut theta = c
        .theta
        .compose_left(&pair.beta1)?
        .sub(&c.theta.compose_input(0, a0)?)?
        .sub(&c.theta.compose_input(1, a0)?)?
        .sub(&c.theta.compose_input(2, a0)?)?;
    // correction terms mixing the binary components with alpha's homotopy:
    // -mu(x, a2(y,z)) + nu(a2(x,y), z) + mu(y, a2(x,z))
    let n0 = g.dim0;
    let mut mixed = MultiMap::zeros(vec![n0, n0, n0], rep.v.dim1);
    for i in 0..n0 {
        for j in 0..n0 {
            for k in 0..n0 {
                let ex = basis_vec(n0, i);
                let ey = basis_vec(n0, j);
                let ez = basis_vec(n0, k);
                let mut val = vec_neg(&c.mu.eval(&[&ex, &a2.eval_basis(&[j, k])])?);
                val = vec_add(&val, &c.nu.eval(&[&a2.eval_basis(&[i, j]), &ez])?);
                val = vec_add(&val, &c.mu.eval(&[&ey, &a2.eval_basis(&[i, k])])?);
                for (o, x) in val.iter().enumerate() {
                    mixed.set(o, &[i, j, k], x.clone());
                }
            }
        }
    }
    theta = theta.add(&mixed)?;
    let row = Cochain2 { psi, omega, mu, nu, theta };
    class_representative(g, rep, &row.flatten())
}

/// Outcome of an inducibility decision. When the pair is incompatible with
/// the induced representation only `violations` is populated. When it is
/// compatible the obstruction class is always computed, and `witness` and
/// `induced` are present exactly when the class vanishes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WellsReport<M> {
    pub compatible: bool,
    pub violations: Vec<Violation>,
    pub obstruction_class: Option<Vec<Scalar>>,
    pub witness: Option<Cochain1>,
    pub induced: Option<M>,
}

/// Decide whether an automorphism pair lifts to the total algebra of an
/// extension; return the verified lift and the degree-1 cochain realizing it
/// when one exists, together with the independently computed obstruction
/// class.
pub fn aut_induce(e: &Extension, pair: &AutPair) -> Result<WellsReport<Hom2>> {
    validate_aut_pair(&e.base, &e.fiber, pair)?;
    let rep = induced_rep(e)?;
    let s = find_splitting(e)?;
    let c = extract_cocycle(e, &s)?;
    let compat = aut_compatible(&e.base, &rep, pair)?;
    if !compat.is_ok() {
        return Ok(WellsReport {
            compatible: false,
            violations: compat.violations,
            obstruction_class: None,
            witness: None,
            induced: None,
        });
    }
    let class = wells_aut(&e.base, &rep, &c, pair)?;
    let guard = two_fiber_l3_vanishes(e)?;
    let n = Cochain1::dim(&e.base, &e.fiber);
    let residual = |flat: &[Scalar]| -> Result<Vec<Scalar>> {
        let lam = Cochain1::unflatten(&e.base, &e.fiber, flat)?;
        let h = aut_candidate(e, &s, pair, &lam)?;
        let res = hom_residuals(&e.hat, &e.hat, &h)?;
        Ok(if guard { res.flat_all() } else { res.flat_il() })
    };
    let Some(sol) = solve_affine(n, residual)? else {
        return Ok(WellsReport {
            compatible: true,
            violations: Vec::new(),
            obstruction_class: Some(class),
            witness: None,
            induced: None,
        });
    };
    let lam = Cochain1::unflatten(&e.base, &e.fiber, &sol)?;
    let h = aut_candidate(e, &s, pair, &lam)?;
    if !verify_hom(&e.hat, &e.hat, &h)?.is_ok() {
        if !guard {
            return Err(Error::Invalid(
                "homotopy is nonzero on two fiber arguments; inducibility is undecided".into(),
            ));
        }
        return Err(Error::Invalid("lift candidate failed verification".into()));
    }
    if !h.f0.is_invertible() || !h.f1.is_invertible() {
        return Err(Error::Invalid("lift candidate is not invertible".into()));
    }
    if project_aut(e, &h)? != *pair {
        return Err(Error::Invalid("lift does not project back to the given pair".into()));
    }
    Ok(WellsReport {
        compatible: true,
        violations: Vec::new(),
        obstruction_class: Some(class),
        witness: Some(lam),
        induced: Some(h),
    })
}

/// Decide whether a derivation pair lifts to the total algebra of an
/// extension. The solved system is linear in the lift, so no structural
/// guard is needed; the report mirrors [`aut_induce`].
pub fn der_induce(e: &Extension, pair: &DerPair) -> Result<WellsReport<Derivation2>> {
    validate_der_pair(&e.base, &e.fiber, pair)?;
    let rep = induced_rep(e)?;
    let s = find_splitting(e)?;
    let c = extract_cocycle(e, &s)?;
    let compat = der_compatible(&e.base, &rep, pair)?;
    if !compat.is_ok() {
        return Ok(WellsReport {
            compatible: false,
            violations: compat.violations,
            obstruction_class: None,
            witness: None,
            induced: None,
        });
    }
    let class = wells_der(&e.base, &rep, &c, pair)?;
    let n = Cochain1::dim(&e.base, &e.fiber);
    let residual = |flat: &[Scalar]| -> Result<Vec<Scalar>> {
        let lam = Cochain1::unflatten(&e.base, &e.fiber, flat)?;
        let d = der_candidate(e, &s, pair, &lam)?;
        Ok(der_residuals(&e.hat, &d)?
            .into_iter()
            .flat_map(|(_, _, r)| r)
            .collect())
    };
    let Some(sol) = solve_affine(n, residual)? else {
        return Ok(WellsReport {
            compatible: true,
            violations: Vec::new(),
            obstruction_class: Some(class),
            witness: None,
            induced: None,
        });
    };
    let lam = Cochain1::unflatten(&e.base, &e.fiber, &sol)?;
    let d = der_candidate(e, &s, pair, &lam)?;
    if !verify_derivation(&e.hat, &d)?.is_ok() {
        return Err(Error::Invalid("lift candidate failed verification".into()));
    }
    if project_der(e, &d)? != *pair {
        return Err(Error::Invalid("lift does not project back to the given pair".into()));
    }
    Ok(WellsReport {
        compatible: true,
        violations: Vec::new(),
        obstruction_class: Some(class),
        witness: Some(lam),
        induced: Some(d),
    })
}

/// Automorphism of the total algebra attached to a degree-1 cocycle:
/// identity plus the fiber-valued twist `i λ p`. Projects to the identity
/// pair. Errors with [`Error::NotOneCocycle`] if `λ` is not a cocycle.
pub fn f_lambda(e: &Extension, lam: &Cochain1) -> Result<Hom2> {
    lam.validate(&e.base, &e.fiber)?;
    let rep = induced_rep(e)?;
    if !d1_apply(&e.base, &rep, lam)?.is_zero() {
        return Err(Error::NotOneCocycle(
            "cochain is not a degree-1 cocycle for the induced representation".into(),
        ));
    }
    let f0 = Mat::identity(e.hat.dim0).add(&e.i.m0.mul(&lam.phi0)?.mul(&e.p.m0)?)?;
    let f1 = Mat::identity(e.hat.dim1).add(&e.i.m1.mul(&lam.phi1)?.mul(&e.p.m1)?)?;
    let f2 = lam.chi.compose_inputs(&[&e.p.m0, &e.p.m0])?.compose_left(&e.i.m1)?;
    Ok(Hom2 { f0, f1, f2 })
}

/// Derivation of the total algebra attached to a degree-1 cocycle: the
/// fiber-valued twist `i λ p` alone. Projects to the zero pair. Errors with
/// [`Error::NotOneCocycle`] if `λ` is not a cocycle.
pub fn d_lambda(e: &Extension, lam: &Cochain1) -> Result<Derivation2> {
    lam.validate(&e.base, &e.fiber)?;
    let rep = induced_rep(e)?;
    if !d1_apply(&e.base, &rep, lam)?.is_zero() {
        return Err(Error::NotOneCocycle(
            "cochain is not a degree-1 cocycle for the induced representation".into(),
        ));
    }
    let d0 = e.i.m0.mul(&lam.phi0)?.mul(&e.p.m0)?;
    let d1 = e.i.m1.mul(&lam.phi1)?.mul(&e.p.m1)?;
    let d2 = lam.chi.compose_inputs(&[&e.p.m0, &e.p.m0])?.compose_left(&e.i.m1)?;
    Ok(Derivation2 { d0, d1, d2 })
}

/// Sample inputs for [`exactness_report`]: degree-1 cocycles, automorphisms
/// of the total algebra, and pairs to test inducibility on.
#[derive(Clone, Debug, Default)]
pub struct ExactnessSamples {
    pub lambdas: Vec<Cochain1>,
    pub autos: Vec<Hom2>,
    pub pairs: Vec<AutPair>,
}

/// Spot-check of the exact sequence relating degree-1 cocycles,
/// fiber-preserving automorphisms, pairs and the second cohomology
/// obstruction, on the given samples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactnessReport {
    /// Distinct sample cocycles give distinct automorphisms, and only the
    /// zero cocycle gives the identity.
    pub lambda_map_injective: bool,
    /// Cocycle-built automorphisms project to the identity pair, and every
    /// sample automorphism projecting to the identity pair is recovered as
    /// `f_lambda` of its extracted cocycle.
    pub kernel_matches_image: bool,
    /// Pairs obtained by projecting sample automorphisms have vanishing
    /// obstruction class.
    pub projected_classes_vanish: bool,
    /// For compatible sample pairs, the class vanishes exactly when the lift
    /// exists.
    pub class_decides_inducibility: bool,
}

impl ExactnessReport {
    pub fn all_hold(&self) -> bool {
        self.lambda_map_injective
            && self.kernel_matches_image
            && self.projected_classes_vanish
            && self.class_decides_inducibility
    }
}

pub fn exactness_report(e: &Extension, samples: &ExactnessSamples) -> Result<ExactnessReport> {
    let rep = induced_rep(e)?;
    let s = find_splitting(e)?;
    let c = extract_cocycle(e, &s)?;
    let homs: Vec<Hom2> =
        samples.lambdas.iter().map(|l| f_lambda(e, l)).collect::<Result<_>>()?;

    let mut injective = true;
    for i in 0..homs.len() {
        for j in (i + 1)..homs.len() {
            if samples.lambdas[i] != samples.lambdas[j] && homs[i] == homs[j] {
                injective = false;
            }
        }
    }
    let idh = identity_hom(&e.hat);
    for (l, h) in samples.lambdas.iter().zip(&homs) {
        if *h == idh && !l.is_zero() {
            injective = false;
        }
    }

    let idpair = AutPair::identity(&e.base, &e.fiber);
    let mut kernel = true;
    for h in &homs {
        if project_aut(e, h)? != idpair {
            kernel = false;
        }
    }
    for f in homs.iter().chain(&samples.autos) {
        if project_aut(e, f)? != idpair {
            continue;
        }
        let lam = Cochain1 {
            phi0: e.q().m0.mul(&f.f0.sub(&Mat::identity(e.hat.dim0))?)?.mul(&s.s0)?,
            phi1: e.q().m1.mul(&f.f1.sub(&Mat::identity(e.hat.dim1))?)?.mul(&s.s1)?,
            chi: f.f2.compose_inputs(&[&s.s0, &s.s0])?.compose_left(&e.q().m1)?,
        };
        match f_lambda(e, &lam) {
            Ok(rebuilt) if rebuilt == *f => {}
            _ => kernel = false,
        }
    }

    let mut vanish = true;
    for f in homs.iter().chain(&samples.autos) {
        let pr = project_aut(e, f)?;
        match wells_aut(&e.base, &rep, &c, &pr) {
            Ok(class) if vec_is_zero(&class) => {}
            _ => vanish = false,
        }
    }

    let mut decides = true;
    for pair in &samples.pairs {
        let report = aut_induce(e, pair)?;
        if !report.compatible {
            continue;
        }
        let zero = report
            .obstruction_class
            .as_ref()
            .map(|v| vec_is_zero(v))
            .unwrap_or(false);
        if zero != report.induced.is_some() {
            decides = false;
        }
    }

    Ok(ExactnessReport {
        lambda_map_injective: injective,
        kernel_matches_image: kernel,
        projected_classes_vanish: vanish,
        class_decides_inducibility: decides,
    })
}
