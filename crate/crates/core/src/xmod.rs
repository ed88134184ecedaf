//! Crossed modules of Leibniz algebras and their inducibility theory.
//!
//! A crossed module is a Leibniz algebra `p0`, a vector space `p1` with two
//! `p0`-actions, and an equivariant map `f : p1 → p0` satisfying the Peiffer
//! identity. Crossed modules are exactly the strict Leibniz 2-algebras
//! ([`xmod_to_strict`], [`strict_to_xmod`]), and every construction here is
//! cross-checked against that dictionary: [`xmod_semidirect`] matches the
//! untwisted extension of the strict image, and the inducibility solvers
//! [`xmod_aut_induce`], [`xmod_der_induce`] solve the direct strict systems
//! `CRO1`..`CRO4` and `RCOCY1`..`RCOCY4`, whose solutions are the strict
//! lifts (no homotopy correction is available in the strict world).

use crate::algebra::{verify_hom, Derivation2, Hom2, Leibniz2Algebra};
use crate::cochain::Cochain2;
use crate::complex::TwoTermComplex;
use crate::error::{Error, Result};
use crate::ext::{build_extension, find_splitting, Extension};
use crate::mat::{basis_vec, solve_affine, vec_add, vec_sub, Mat};
use crate::multimap::MultiMap;
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::verify::Verification;
use crate::wells::{
    aut_candidate, aut_compatible, der_candidate, der_compatible, project_aut, project_der,
    wells_aut, wells_der, AutPair, DerPair, WellsReport,
};

/// A crossed module of Leibniz algebras. The degree-0 dimension is the row
/// count of `f`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossedModule {
    /// Leibniz bracket on `p0`.
    pub p0_bracket: MultiMap,
    pub p1_dim: usize,
    /// Left action `p0 ⊗ p1 → p1`.
    pub left: MultiMap,
    /// Right action `p1 ⊗ p0 → p1`.
    pub right: MultiMap,
    /// Equivariant structure map `p1 → p0`.
    pub f: Mat,
}

impl CrossedModule {
    pub fn p0_dim(&self) -> usize {
        self.f.rows()
    }

    pub fn validate(&self) -> Result<()> {
        let p0 = self.p0_dim();
        let p1 = self.p1_dim;
        if self.f.cols() != p1 {
            return Err(Error::ShapeMismatch(format!(
                "structure map must have {p1} columns, got {}",
                self.f.cols()
            )));
        }
        let shapes: [(&str, &MultiMap, &[usize], usize); 3] = [
            ("p0 bracket", &self.p0_bracket, &[p0, p0], p0),
            ("left action", &self.left, &[p0, p1], p1),
            ("right action", &self.right, &[p1, p0], p1),
        ];
        for (name, m, dims, out) in shapes {
            if m.input_dims() != dims || m.out_dim() != out {
                return Err(Error::ShapeMismatch(format!(
                    "{name} must map {dims:?} to {out}, got {:?} to {}",
                    m.input_dims(),
                    m.out_dim()
                )));
            }
        }
        Ok(())
    }
}

/// Check the crossed module laws on every basis tuple: the Leibniz identity
/// on `p0`, the three action laws `LLM`, `LML`, `MLL`, equivariance of `f`
/// (`crossed01a`, `crossed01b`) and the Peiffer identity (`crossed02`).
/// These are precisely the structure axioms of the strict image, so this
/// succeeds exactly when [`xmod_to_strict`] yields a valid algebra.
pub fn verify_xmod(xm: &CrossedModule) -> Result<Verification> {
    xm.validate()?;
    let p0 = xm.p0_dim();
    let p1 = xm.p1_dim;
    let br = |x: &[Scalar], y: &[Scalar]| xm.p0_bracket.eval(&[x, y]).expect("bracket");
    let lf = |x: &[Scalar], a: &[Scalar]| xm.left.eval(&[x, a]).expect("left action");
    let rg = |a: &[Scalar], x: &[Scalar]| xm.right.eval(&[a, x]).expect("right action");
    let mut v = Verification::new();
    for i in 0..p0 {
        let x = basis_vec(p0, i);
        for j in 0..p0 {
            let y = basis_vec(p0, j);
            for k in 0..p0 {
                let z = basis_vec(p0, k);
                let mut r = br(&x, &br(&y, &z));
                r = vec_sub(&r, &br(&br(&x, &y), &z));
                r = vec_sub(&r, &br(&y, &br(&x, &z)));
                v.check("leibniz", &[i, j, k], r);
            }
            for u in 0..p1 {
                let a = basis_vec(p1, u);
                let mut r = lf(&br(&x, &y), &a);
                r = vec_sub(&r, &lf(&x, &lf(&y, &a)));
                r = vec_add(&r, &lf(&y, &lf(&x, &a)));
                v.check("LLM", &[i, j, u], r);
                let mut r = rg(&a, &br(&x, &y));
                r = vec_sub(&r, &rg(&rg(&a, &x), &y));
                r = vec_sub(&r, &lf(&x, &rg(&a, &y)));
                v.check("LML", &[u, i, j], r);
                let mut r = rg(&a, &br(&x, &y));
                r = vec_sub(&r, &lf(&x, &rg(&a, &y)));
                r = vec_add(&r, &rg(&lf(&x, &a), &y));
                v.check("MLL", &[u, i, j], r);
            }
        }
        for u in 0..p1 {
            let a = basis_vec(p1, u);
            let r = vec_sub(&xm.f.mul_vec(&lf(&x, &a))?, &br(&x, &xm.f.col(u)));
            v.check("crossed01a", &[i, u], r);
            let r = vec_sub(&xm.f.mul_vec(&rg(&a, &x))?, &br(&xm.f.col(u), &x));
            v.check("crossed01b", &[u, i], r);
        }
    }
    for u in 0..p1 {
        let a = basis_vec(p1, u);
        for w in 0..p1 {
            let b = basis_vec(p1, w);
            let r = vec_sub(&lf(&xm.f.col(u), &b), &rg(&a, &xm.f.col(w)));
            v.check("crossed02", &[u, w], r);
        }
    }
    Ok(v)
}

/// The strict Leibniz 2-algebra with `d = f`, brackets given by the bracket
/// and the two actions, and zero homotopy. Only shapes are checked; the
/// structure axioms of the result coincide with the crossed module laws.
pub fn xmod_to_strict(xm: &CrossedModule) -> Result<Leibniz2Algebra> {
    xm.validate()?;
    let p0 = xm.p0_dim();
    Leibniz2Algebra::new(
        p0,
        xm.p1_dim,
        xm.f.clone(),
        xm.p0_bracket.clone(),
        xm.left.clone(),
        xm.right.clone(),
        MultiMap::zeros(vec![p0, p0, p0], xm.p1_dim),
    )
}

/// The crossed module of a strict algebra. Errors with [`Error::NotStrict`]
/// when the homotopy is nonzero.
pub fn strict_to_xmod(g: &Leibniz2Algebra) -> Result<CrossedModule> {
    g.validate()?;
    if !crate::algebra::is_strict(g) {
        return Err(Error::NotStrict);
    }
    Ok(CrossedModule {
        p0_bracket: g.b00.clone(),
        p1_dim: g.dim1,
        left: g.b01.clone(),
        right: g.b10.clone(),
        f: g.d.clone(),
    })
}

/// Representation data of a crossed module on a two-term complex: the six
/// unary action operators. The binary operators of the general theory pair
/// with the homotopy and vanish in the strict world.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XModRep {
    pub v: TwoTermComplex,
    pub l0_0: MultiMap,
    pub l0_1: MultiMap,
    pub r0_0: MultiMap,
    pub r0_1: MultiMap,
    pub l1: MultiMap,
    pub r1: MultiMap,
}

impl XModRep {
    /// The corresponding representation of the strict image, with zero
    /// binary operators.
    pub fn to_representation(&self) -> Representation {
        let d0 = self.l0_0.input_dims()[0];
        let (v0, v1) = (self.v.dim0, self.v.dim1);
        Representation {
            v: self.v.clone(),
            l0_0: self.l0_0.clone(),
            l0_1: self.l0_1.clone(),
            r0_0: self.r0_0.clone(),
            r0_1: self.r0_1.clone(),
            l1: self.l1.clone(),
            r1: self.r1.clone(),
            l2: MultiMap::zeros(vec![d0, d0, v0], v1),
            m2: MultiMap::zeros(vec![d0, d0, v0], v1),
            r2: MultiMap::zeros(vec![d0, d0, v0], v1),
        }
    }

    /// Strip a representation whose binary operators vanish back to crossed
    /// module representation data.
    pub fn from_representation(rep: &Representation) -> Result<XModRep> {
        if !rep.l2.is_zero() || !rep.m2.is_zero() || !rep.r2.is_zero() {
            return Err(Error::Invalid(
                "representation has nonzero binary operators".into(),
            ));
        }
        Ok(XModRep {
            v: rep.v.clone(),
            l0_0: rep.l0_0.clone(),
            l0_1: rep.l0_1.clone(),
            r0_0: rep.r0_0.clone(),
            r0_1: rep.r0_1.clone(),
            l1: rep.l1.clone(),
            r1: rep.r1.clone(),
        })
    }
}

/// Semidirect product crossed module of a crossed module and a
/// representation: block sums of the structure maps with the action filling
/// the mixed blocks. Equals the strict image round trip of the untwisted
/// extension.
pub fn xmod_semidirect(xm: &CrossedModule, rep: &XModRep) -> Result<CrossedModule> {
    xm.validate()?;
    let p0 = xm.p0_dim();
    let p1 = xm.p1_dim;
    let (v0, v1) = (rep.v.dim0, rep.v.dim1);
    let (h0, h1) = (p0 + v0, p1 + v1);

    let mut fh = Mat::zeros(h0, h1);
    for r in 0..p0 {
        for c in 0..p1 {
            fh.set(r, c, xm.f.at(r, c).clone());
        }
    }
    for r in 0..v0 {
        for c in 0..v1 {
            fh.set(p0 + r, p1 + c, rep.v.d.at(r, c).clone());
        }
    }

    let fill = |map: &mut MultiMap, off: usize, idx: &[usize], val: Vec<Scalar>| {
        for (o, x) in val.iter().enumerate() {
            map.set(off + o, idx, x.clone());
        }
    };

    let mut br = MultiMap::zeros(vec![h0, h0], h0);
    for i in 0..h0 {
        for j in 0..h0 {
            match (i < p0, j < p0) {
                (true, true) => fill(&mut br, 0, &[i, j], xm.p0_bracket.eval_basis(&[i, j])),
                (true, false) => fill(&mut br, p0, &[i, j], rep.l0_0.eval_basis(&[i, j - p0])),
                (false, true) => fill(&mut br, p0, &[i, j], rep.r0_0.eval_basis(&[j, i - p0])),
                (false, false) => {}
            }
        }
    }

    let mut left = MultiMap::zeros(vec![h0, h1], h1);
    for i in 0..h0 {
        for k in 0..h1 {
            match (i < p0, k < p1) {
                (true, true) => fill(&mut left, 0, &[i, k], xm.left.eval_basis(&[i, k])),
                (true, false) => fill(&mut left, p1, &[i, k], rep.l0_1.eval_basis(&[i, k - p1])),
                (false, true) => fill(&mut left, p1, &[i, k], rep.r1.eval_basis(&[k, i - p0])),
                (false, false) => {}
            }
        }
    }

    let mut right = MultiMap::zeros(vec![h1, h0], h1);
    for k in 0..h1 {
        for i in 0..h0 {
            match (k < p1, i < p0) {
                (true, true) => fill(&mut right, 0, &[k, i], xm.right.eval_basis(&[k, i])),
                (true, false) => fill(&mut right, p1, &[k, i], rep.l1.eval_basis(&[k, i - p0])),
                (false, true) => fill(&mut right, p1, &[k, i], rep.r0_1.eval_basis(&[i, k - p1])),
                (false, false) => {}
            }
        }
    }

    Ok(CrossedModule { p0_bracket: br, p1_dim: h1, left, right, f: fh })
}

/// A pair of strict automorphisms or derivations: `beta0`, `beta1` act on
/// the representation complex, `alpha0`, `alpha1` on the crossed module.
/// There is no homotopy component; crossed module morphisms are strict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XModPair {
    pub beta0: Mat,
    pub beta1: Mat,
    pub alpha0: Mat,
    pub alpha1: Mat,
}

fn strict_context(xm: &CrossedModule, rep: &XModRep) -> Result<(Leibniz2Algebra, Representation)> {
    let ver = verify_xmod(xm)?;
    if let Some(first) = ver.violations.first() {
        return Err(Error::Invalid(format!(
            "crossed module law {} fails at {:?}",
            first.law, first.at
        )));
    }
    let g = xmod_to_strict(xm)?;
    let r = rep.to_representation();
    r.validate(&g)?;
    Ok((g, r))
}

fn xmod_cocycle(g: &Leibniz2Algebra, v: &TwoTermComplex, c: &Cochain2) -> Result<()> {
    c.validate(g, v)?;
    if !c.theta.is_zero() {
        return Err(Error::Invalid(
            "homotopy component of a crossed module cocycle must vanish".into(),
        ));
    }
    Ok(())
}

fn aut_pair_to_strict(g: &Leibniz2Algebra, pair: &XModPair) -> AutPair {
    AutPair {
        beta0: pair.beta0.clone(),
        beta1: pair.beta1.clone(),
        alpha: Hom2 {
            f0: pair.alpha0.clone(),
            f1: pair.alpha1.clone(),
            f2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
        },
    }
}

fn der_pair_to_strict(g: &Leibniz2Algebra, pair: &XModPair) -> DerPair {
    DerPair {
        beta0: pair.beta0.clone(),
        beta1: pair.beta1.clone(),
        alpha: Derivation2 {
            d0: pair.alpha0.clone(),
            d1: pair.alpha1.clone(),
            d2: MultiMap::zeros(vec![g.dim0, g.dim0], g.dim1),
        },
    }
}

const CRO_LABELS: [(&str, &str); 6] = [
    ("COC6", "CRO5"),
    ("COC7", "CRO6"),
    ("COC8", "CRO7"),
    ("COC9", "CRO8"),
    ("COC10", "CRO9"),
    ("COC11", "CRO10"),
];

const RCOCY_LABELS: [(&str, &str); 6] = [
    ("COCY6", "RCOCY5"),
    ("COCY7", "RCOCY6"),
    ("COCY8", "RCOCY7"),
    ("COCY9", "RCOCY8"),
    ("COCY10", "RCOCY9"),
    ("COCY11", "RCOCY10"),
];

fn relabel(mut v: Verification, map: &[(&str, &str)]) -> Verification {
    for viol in &mut v.violations {
        if let Some((_, to)) = map.iter().find(|(from, _)| *from == viol.law) {
            viol.law = (*to).to_string();
        }
    }
    v
}

/// Obstruction class of a strict automorphism pair on the extension a
/// crossed module cocycle classifies; the strict Wells class of the pair
/// with zero homotopy component.
pub fn xmod_wells_aut(
    xm: &CrossedModule,
    rep: &XModRep,
    c: &Cochain2,
    pair: &XModPair,
) -> Result<Vec<Scalar>> {
    let (g, rep2) = strict_context(xm, rep)?;
    xmod_cocycle(&g, &rep.v, c)?;
    let spair = aut_pair_to_strict(&g, pair);
    let compat = relabel(aut_compatible(&g, &rep2, &spair)?, &CRO_LABELS);
    if let Some(first) = compat.violations.first() {
        return Err(Error::IncompatiblePair(format!("{} fails at {:?}", first.law, first.at)));
    }
    wells_aut(&g, &rep2, c, &spair)
}

/// Obstruction class of a strict derivation pair, as in [`xmod_wells_aut`].
pub fn xmod_wells_der(
    xm: &CrossedModule,
    rep: &XModRep,
    c: &Cochain2,
    pair: &XModPair,
) -> Result<Vec<Scalar>> {
    let (g, rep2) = strict_context(xm, rep)?;
    xmod_cocycle(&g, &rep.v, c)?;
    let spair = der_pair_to_strict(&g, pair);
    let compat = relabel(der_compatible(&g, &rep2, &spair)?, &RCOCY_LABELS);
    if let Some(first) = compat.violations.first() {
        return Err(Error::IncompatiblePair(format!("{} fails at {:?}", first.law, first.at)));
    }
    wells_der(&g, &rep2, c, &spair)
}

struct XModSystem {
    e: Extension,
    g: Leibniz2Algebra,
    rep2: Representation,
    n: usize,
}

fn xmod_setup(xm: &CrossedModule, rep: &XModRep, c: &Cochain2) -> Result<XModSystem> {
    let (g, rep2) = strict_context(xm, rep)?;
    xmod_cocycle(&g, &rep.v, c)?;
    let e = build_extension(&g, &rep2, c)?;
    let n = rep.v.dim0 * g.dim0 + rep.v.dim1 * g.dim1;
    Ok(XModSystem { e, g, rep2, n })
}

fn split_lambda(
    v: &TwoTermComplex,
    g: &Leibniz2Algebra,
    flat: &[Scalar],
) -> Result<(Mat, Mat)> {
    let cut = v.dim0 * g.dim0;
    let l0 = Mat::new(v.dim0, g.dim0, flat[..cut].to_vec())?;
    let l1 = Mat::new(v.dim1, g.dim1, flat[cut..].to_vec())?;
    Ok((l0, l1))
}

/// Residual rows `CRO1`..`CRO4` of the strict automorphism lift twisted by
/// `(λ0, λ1)`. These are the fiber components of the morphism laws of the
/// lift candidate at section arguments; solving them to zero is exactly
/// strict inducibility.
fn cro_rows(
    xm: &CrossedModule,
    rep: &XModRep,
    rep2: &Representation,
    c: &Cochain2,
    pair: &XModPair,
    l0: &Mat,
    l1: &Mat,
) -> Result<Vec<Scalar>> {
    let p0 = xm.p0_dim();
    let p1 = xm.p1_dim;
    let phi = &rep.v.d;
    let mut out = Vec::new();
    // CRO1: b0 psi(a) - psi(a1 a) - phi l1(a) + l0(f a)
    for j in 0..p1 {
        let mut r = vec_sub(
            &pair.beta0.mul_vec(&c.psi.col(j))?,
            &c.psi.mul_vec(&pair.alpha1.col(j))?,
        );
        r = vec_sub(&r, &phi.mul_vec(&l1.col(j))?);
        r = vec_add(&r, &l0.mul_vec(&xm.f.col(j))?);
        out.extend(r);
    }
    // CRO2: b0 w(x,y) - w(a0 x, a0 y) - l0_0(a0 x) l0(y) - r0_0(a0 y) l0(x) + l0([x,y])
    for i in 0..p0 {
        for j in 0..p0 {
            let ax = pair.alpha0.col(i);
            let ay = pair.alpha0.col(j);
            let mut r = pair.beta0.mul_vec(&c.omega.eval_basis(&[i, j]))?;
            r = vec_sub(&r, &c.omega.eval(&[&ax, &ay])?);
            r = vec_sub(&r, &rep2.l0_0m(&ax).mul_vec(&l0.col(j))?);
            r = vec_sub(&r, &rep2.r0_0m(&ay).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l0.mul_vec(&xm.p0_bracket.eval_basis(&[i, j]))?);
            out.extend(r);
        }
    }
    // CRO3: b1 mu(x,a) - mu(a0 x, a1 a) - l0_1(a0 x) l1(a) - r1(a1 a) l0(x) + l1([x,a])
    for i in 0..p0 {
        for j in 0..p1 {
            let ax = pair.alpha0.col(i);
            let aa = pair.alpha1.col(j);
            let mut r = pair.beta1.mul_vec(&c.mu.eval_basis(&[i, j]))?;
            r = vec_sub(&r, &c.mu.eval(&[&ax, &aa])?);
            r = vec_sub(&r, &rep2.l0_1m(&ax).mul_vec(&l1.col(j))?);
            r = vec_sub(&r, &rep2.r1m(&aa).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l1.mul_vec(&xm.left.eval_basis(&[i, j]))?);
            out.extend(r);
        }
    }
    // CRO4: b1 nu(a,x) - nu(a1 a, a0 x) - r0_1(a0 x) l1(a) - l1(a1 a) l0(x) + l1([a,x])
    for j in 0..p1 {
        for i in 0..p0 {
            let ax = pair.alpha0.col(i);
            let aa = pair.alpha1.col(j);
            let mut r = pair.beta1.mul_vec(&c.nu.eval_basis(&[j, i]))?;
            r = vec_sub(&r, &c.nu.eval(&[&aa, &ax])?);
            r = vec_sub(&r, &rep2.r0_1m(&ax).mul_vec(&l1.col(j))?);
            r = vec_sub(&r, &rep2.l1m(&aa).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l1.mul_vec(&xm.right.eval_basis(&[j, i]))?);
            out.extend(r);
        }
    }
    Ok(out)
}

/// Residual rows `RCOCY1`..`RCOCY4` of the strict derivation lift twisted by
/// `(λ0, λ1)`; the derivation-law analogue of [`cro_rows`].
fn rcocy_rows(
    xm: &CrossedModule,
    rep: &XModRep,
    rep2: &Representation,
    c: &Cochain2,
    pair: &XModPair,
    l0: &Mat,
    l1: &Mat,
) -> Result<Vec<Scalar>> {
    let p0 = xm.p0_dim();
    let p1 = xm.p1_dim;
    let phi = &rep.v.d;
    let mut out = Vec::new();
    // RCOCY1: b0 psi(a) - psi(a1 a) - phi l1(a) + l0(f a)
    for j in 0..p1 {
        let mut r = vec_sub(
            &pair.beta0.mul_vec(&c.psi.col(j))?,
            &c.psi.mul_vec(&pair.alpha1.col(j))?,
        );
        r = vec_sub(&r, &phi.mul_vec(&l1.col(j))?);
        r = vec_add(&r, &l0.mul_vec(&xm.f.col(j))?);
        out.extend(r);
    }
    // RCOCY2: b0 w(x,y) - w(a0 x, y) - w(x, a0 y) - l0_0(x) l0(y) - r0_0(y) l0(x) + l0([x,y])
    for i in 0..p0 {
        for j in 0..p0 {
            let x = basis_vec(p0, i);
            let y = basis_vec(p0, j);
            let ax = pair.alpha0.col(i);
            let ay = pair.alpha0.col(j);
            let mut r = pair.beta0.mul_vec(&c.omega.eval_basis(&[i, j]))?;
            r = vec_sub(&r, &c.omega.eval(&[&ax, &y])?);
            r = vec_sub(&r, &c.omega.eval(&[&x, &ay])?);
            r = vec_sub(&r, &rep2.l0_0m(&x).mul_vec(&l0.col(j))?);
            r = vec_sub(&r, &rep2.r0_0m(&y).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l0.mul_vec(&xm.p0_bracket.eval_basis(&[i, j]))?);
            out.extend(r);
        }
    }
    // RCOCY3: b1 mu(x,a) - mu(a0 x, a) - mu(x, a1 a) - l0_1(x) l1(a) - r1(a) l0(x) + l1([x,a])
    for i in 0..p0 {
        for j in 0..p1 {
            let x = basis_vec(p0, i);
            let a = basis_vec(p1, j);
            let ax = pair.alpha0.col(i);
            let aa = pair.alpha1.col(j);
            let mut r = pair.beta1.mul_vec(&c.mu.eval_basis(&[i, j]))?;
            r = vec_sub(&r, &c.mu.eval(&[&ax, &a])?);
            r = vec_sub(&r, &c.mu.eval(&[&x, &aa])?);
            r = vec_sub(&r, &rep2.l0_1m(&x).mul_vec(&l1.col(j))?);
            r = vec_sub(&r, &rep2.r1m(&a).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l1.mul_vec(&xm.left.eval_basis(&[i, j]))?);
            out.extend(r);
        }
    }
    // RCOCY4: b1 nu(a,x) - nu(a1 a, x) - nu(a, a0 x) - r0_1(x) l1(a) - l1(a) l0(x) + l1([a,x])
    for j in 0..p1 {
        for i in 0..p0 {
            let x = basis_vec(p0, i);
            let a = basis_vec(p1, j);
            let ax = pair.alpha0.col(i);
            let aa = pair.alpha1.col(j);
            let mut r = pair.beta1.mul_vec(&c.nu.eval_basis(&[j, i]))?;
            r = vec_sub(&r, &c.nu.eval(&[&aa, &x])?);
            r = vec_sub(&r, &c.nu.eval(&[&a, &ax])?);
            r = vec_sub(&r, &rep2.r0_1m(&x).mul_vec(&l1.col(j))?);
            r = vec_sub(&r, &rep2.l1m(&a).mul_vec(&l0.col(i))?);
            r = vec_add(&r, &l1.mul_vec(&xm.right.eval_basis(&[j, i]))?);
            out.extend(r);
        }
    }
    Ok(out)
}

fn lambda_cochain(
    g: &Leibniz2Algebra,
    v: &TwoTermComplex,
    l0: Mat,
    l1: Mat,
) -> crate::cochain::Cochain1 {
    crate::cochain::Cochain1 {
        phi0: l0,
        phi1: l1,
        chi: MultiMap::zeros(vec![g.dim0, g.dim0], v.dim1),
    }
}

/// Decide whether a strict automorphism pair lifts to the extension crossed
/// module classified by `c`, by solving `CRO1`..`CRO4` after checking the
/// compatibility conditions `CRO5`..`CRO10`. The obstruction class is the
/// strict Wells class; the witness, when present, is the strict lift's
/// twisting cochain (no homotopy component).
pub fn xmod_aut_induce(
    xm: &CrossedModule,
    rep: &XModRep,
    c: &Cochain2,
    pair: &XModPair,
) -> Result<WellsReport<Hom2>> {
    let sys = xmod_setup(xm, rep, c)?;
    let spair = aut_pair_to_strict(&sys.g, pair);
    let compat = relabel(aut_compatible(&sys.g, &sys.rep2, &spair)?, &CRO_LABELS);
    if !compat.is_ok() {
        return Ok(WellsReport {
            compatible: false,
            violations: compat.violations,
            obstruction_class: None,
            witness: None,
            induced: None,
        });
    }
    let class = wells_aut(&sys.g, &sys.rep2, c, &spair)?;
    let residual = |flat: &[Scalar]| -> Result<Vec<Scalar>> {
        let (l0, l1) = split_lambda(&rep.v, &sys.g, flat)?;
        cro_rows(xm, rep, &sys.rep2, c, pair, &l0, &l1)
    };
    let Some(sol) = solve_affine(sys.n, residual)? else {
        return Ok(WellsReport {
            compatible: true,
            violations: Vec::new(),
            obstruction_class: Some(class),
            witness: None,
            induced: None,
        });
    };
    let (l0, l1) = split_lambda(&rep.v, &sys.g, &sol)?;
    let lam = lambda_cochain(&sys.g, &rep.v, l0, l1);
    let s = find_splitting(&sys.e)?;
    let h = aut_candidate(&sys.e, &s, &spair, &lam)?;
    if !verify_hom(&sys.e.hat, &sys.e.hat, &h)?.is_ok() {
        return Err(Error::Invalid("strict lift candidate failed verification".into()));
    }
    if !h.f0.is_invertible() || !h.f1.is_invertible() {
        return Err(Error::Invalid("strict lift candidate is not invertible".into()));
    }
    if project_aut(&sys.e, &h)? != spair {
        return Err(Error::Invalid("strict lift does not project back to the given pair".into()));
    }
    Ok(WellsReport {
        compatible: true,
        violations: Vec::new(),
        obstruction_class: Some(class),
        witness: Some(lam),
        induced: Some(h),
    })
}

/// Decide whether a strict derivation pair lifts, by solving
/// `RCOCY1`..`RCOCY4` after the compatibility conditions `RCOCY5`..`RCOCY10`;
/// the derivation analogue of [`xmod_aut_induce`].
pub fn xmod_der_induce(
    xm: &CrossedModule,
    rep: &XModRep,
    c: &Cochain2,
    pair: &XModPair,
) -> Result<WellsReport<Derivation2>> {
    let sys = xmod_setup(xm, rep, c)?;
    let spair = der_pair_to_strict(&sys.g, pair);
    let compat = relabel(der_compatible(&sys.g, &sys.rep2, &spair)?, &RCOCY_LABELS);
    if !compat.is_ok() {
        return Ok(WellsReport {
            compatible: false,
            violations: compat.violations,
            obstruction_class: None,
            witness: None,
            induced: None,
        });
    }
    let class = wells_der(&sys.g, &sys.rep2, c, &spair)?;
    let residual = |flat: &[Scalar]| -> Result<Vec<Scalar>> {
        let (l0, l1) = split_lambda(&rep.v, &sys.g, flat)?;
        rcocy_rows(xm, rep, &sys.rep2, c, pair, &l0, &l1)
    };
    let Some(sol) = solve_affine(sys.n, residual)? else {
        return Ok(WellsReport {
            compatible: true,
            violations: Vec::new(),
            obstruction_class: Some(class),
            witness: None,
            induced: None,
        });
    };
    let (l0, l1) = split_lambda(&rep.v, &sys.g, &sol)?;
    let lam = lambda_cochain(&sys.g, &rep.v, l0, l1);
    let s = find_splitting(&sys.e)?;
    let d = der_candidate(&sys.e, &s, &spair, &lam)?;
    if !crate::algebra::verify_derivation(&sys.e.hat, &d)?.is_ok() {
        return Err(Error::Invalid("strict lift candidate failed verification".into()));
    }
    if project_der(&sys.e, &d)? != spair {
        return Err(Error::Invalid("strict lift does not project back to the given pair".into()));
    }
    Ok(WellsReport {
        compatible: true,
        violations: Vec::new(),
        obstruction_class: Some(class),
        witness: Some(lam),
        induced: Some(d),
    })
}
