//! Abelian extensions of Leibniz 2-algebras.
//!
//! An [`Extension`] packages a short exact sequence of two-term complexes
//! `V >--i--> ĝ --p-->> g` where `ĝ` and `g` carry algebra structure, `p` is
//! a strict morphism and the image of `i` is an abelian ideal (all brackets
//! and the homotopy vanish on it). [`build_extension`] constructs `ĝ` from a
//! degree-2 cocycle, [`extract_cocycle`] recovers a cocycle from an
//! extension and a splitting, and [`extensions_equivalent`] decides whether
//! two extensions over the same base and fiber are isomorphic under maps
//! commuting with `i` and `p`.

use crate::algebra::{hom_residuals, verify_hom, Hom2, Leibniz2Algebra};
use crate::cochain::{is_cocycle2, Cochain1, Cochain2};
use crate::complex::{validate_complex, GradedMap, TwoTermComplex};
use crate::error::{Error, Result};
use crate::mat::{basis_vec, solve_affine, vec_is_zero, Mat};
use crate::multimap::MultiMap;
use crate::rep::Representation;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Extension {
    pub hat: Leibniz2Algebra,
    pub base: Leibniz2Algebra,
    pub fiber: TwoTermComplex,
    /// Inclusion of the fiber, gradewise injective.
    pub i: GradedMap,
    /// Projection onto the base, gradewise surjective, a strict morphism.
    pub p: GradedMap,
    q: GradedMap,
}

/// Linear retraction `q` with `q ∘ inc = id`, canonical in the inclusion:
/// complete `inc` by unit columns at the non-pivot coordinates of
/// `rref(incᵀ)` and take the top rows of the inverse.
fn retraction(inc: &Mat) -> Result<Mat> {
    let k = inc.cols();
    let n = inc.rows();
    let (_, pivots) = inc.transpose().rref();
    if pivots.len() != k {
        return Err(Error::InvalidExtension("fiber inclusion is not injective".into()));
    }
    let mut m = inc.clone();
    for c in 0..n {
        if !pivots.contains(&c) {
            m = m.hstack(&Mat::new(n, 1, basis_vec(n, c))?)?;
        }
    }
    let inv = m
        .inverse()
        .ok_or_else(|| Error::InvalidExtension("cannot complete fiber inclusion".into()))?;
    let mut q = Mat::zeros(k, n);
    for r in 0..k {
        for c in 0..n {
            q.set(r, c, inv.at(r, c).clone());
        }
    }
    Ok(q)
}

impl Extension {
    pub fn new(
        hat: Leibniz2Algebra,
        base: Leibniz2Algebra,
        fiber: TwoTermComplex,
        i: GradedMap,
        p: GradedMap,
    ) -> Result<Self> {
        validate_extension(&hat, &base, &fiber, &i, &p)?;
        let q = GradedMap { m0: retraction(&i.m0)?, m1: retraction(&i.m1)? };
        Ok(Extension { hat, base, fiber, i, p, q })
    }

    /// The canonical linear retraction of the fiber inclusion.
    pub fn q(&self) -> &GradedMap {
        &self.q
    }

    /// Fiber coordinates of a degree-0 value known to lie in the fiber.
    pub(crate) fn q0v(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let fq = self.q.m0.mul_vec(v)?;
        if self.i.m0.mul_vec(&fq)? != v {
            return Err(Error::FiberEscape("degree-0 value is not in the fiber".into()));
        }
        Ok(fq)
    }

    /// Fiber coordinates of a degree-1 value known to lie in the fiber.
    pub(crate) fn q1v(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let fq = self.q.m1.mul_vec(v)?;
        if self.i.m1.mul_vec(&fq)? != v {
            return Err(Error::FiberEscape("degree-1 value is not in the fiber".into()));
        }
        Ok(fq)
    }
}

fn validate_extension(
    hat: &Leibniz2Algebra,
    base: &Leibniz2Algebra,
    fiber: &TwoTermComplex,
    i: &GradedMap,
    p: &GradedMap,
) -> Result<()> {
    hat.validate()?;
    base.validate()?;
    if !crate::algebra::verify_algebra(hat)?.is_ok() {
        return Err(Error::InvalidExtension("total algebra fails the structure laws".into()));
    }
    if !crate::algebra::verify_algebra(base)?.is_ok() {
        return Err(Error::InvalidExtension("base algebra fails the structure laws".into()));
    }
    validate_complex(fiber)?;
    let shapes = [
        ("i degree 0", &i.m0, hat.dim0, fiber.dim0),
        ("i degree 1", &i.m1, hat.dim1, fiber.dim1),
        ("p degree 0", &p.m0, base.dim0, hat.dim0),
        ("p degree 1", &p.m1, base.dim1, hat.dim1),
    ];
    for (name, m, rows, cols) in shapes {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::InvalidExtension(format!(
                "{name} must be {rows}x{cols}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    // chain squares
    if hat.d.mul(&i.m1)? != i.m0.mul(&fiber.d)? {
        return Err(Error::InvalidExtension("inclusion is not a chain map".into()));
    }
    if base.d.mul(&p.m1)? != p.m0.mul(&hat.d)? {
        return Err(Error::InvalidExtension("projection is not a chain map".into()));
    }
    // exactness: p ∘ i = 0, full ranks, dimension counts
    if !p.m0.mul(&i.m0)?.is_zero() || !p.m1.mul(&i.m1)?.is_zero() {
        return Err(Error::InvalidExtension("projection does not kill the fiber".into()));
    }
    if i.m0.rank() != fiber.dim0 || i.m1.rank() != fiber.dim1 {
        return Err(Error::InvalidExtension("fiber inclusion is not injective".into()));
    }
    if p.m0.rank() != base.dim0 || p.m1.rank() != base.dim1 {
        return Err(Error::InvalidExtension("projection is not surjective".into()));
    }
    if fiber.dim0 + base.dim0 != hat.dim0 || fiber.dim1 + base.dim1 != hat.dim1 {
        return Err(Error::InvalidExtension("dimensions are not exact".into()));
    }
    // the fiber is abelian
    for u in 0..fiber.dim0 {
        for w in 0..fiber.dim0 {
            if !vec_is_zero(&hat.b00v(&i.m0.col(u), &i.m0.col(w))) {
                return Err(Error::InvalidExtension("fiber is not abelian in b00".into()));
            }
            for t in 0..fiber.dim0 {
                if !vec_is_zero(&hat.l3v(&i.m0.col(u), &i.m0.col(w), &i.m0.col(t))) {
                    return Err(Error::InvalidExtension("homotopy is nonzero on the fiber".into()));
                }
            }
        }
    }
    for u in 0..fiber.dim0 {
        for w in 0..fiber.dim1 {
            if !vec_is_zero(&hat.b01v(&i.m0.col(u), &i.m1.col(w))) {
                return Err(Error::InvalidExtension("fiber is not abelian in b01".into()));
            }
            if !vec_is_zero(&hat.b10v(&i.m1.col(w), &i.m0.col(u))) {
                return Err(Error::InvalidExtension("fiber is not abelian in b10".into()));
            }
        }
    }
    // the projection is a strict morphism
    for i0 in 0..hat.dim0 {
        for j0 in 0..hat.dim0 {
            let lhs = p.m0.mul_vec(&hat.b00.eval_basis(&[i0, j0]))?;
            let rhs = base.b00v(&p.m0.col(i0), &p.m0.col(j0));
            if lhs != rhs {
                return Err(Error::InvalidExtension("projection is not a morphism on b00".into()));
            }
            for k0 in 0..hat.dim0 {
                let lhs = p.m1.mul_vec(&hat.l3.eval_basis(&[i0, j0, k0]))?;
                let rhs = base.l3v(&p.m0.col(i0), &p.m0.col(j0), &p.m0.col(k0));
                if lhs != rhs {
                    return Err(Error::InvalidExtension(
                        "projection is not a morphism on l3".into(),
                    ));
                }
            }
        }
        for j1 in 0..hat.dim1 {
            let lhs = p.m1.mul_vec(&hat.b01.eval_basis(&[i0, j1]))?;
            let rhs = base.b01v(&p.m0.col(i0), &p.m1.col(j1));
            if lhs != rhs {
                return Err(Error::InvalidExtension("projection is not a morphism on b01".into()));
            }
            let lhs = p.m1.mul_vec(&hat.b10.eval_basis(&[j1, i0]))?;
            let rhs = base.b10v(&p.m1.col(j1), &p.m0.col(i0));
            if lhs != rhs {
                return Err(Error::InvalidExtension("projection is not a morphism on b10".into()));
            }
        }
    }
    Ok(())
}

/// A gradewise linear section of the projection: `p ∘ s = id`. It need not
/// respect differentials or brackets; the cocycle measures that failure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Splitting {
    pub s0: Mat,
    pub s1: Mat,
}

impl Splitting {
    pub fn validate(&self, e: &Extension) -> Result<()> {
        if self.s0.rows() != e.hat.dim0 || self.s0.cols() != e.base.dim0 {
            return Err(Error::ShapeMismatch("splitting degree-0 shape".into()));
        }
        if self.s1.rows() != e.hat.dim1 || self.s1.cols() != e.base.dim1 {
            return Err(Error::ShapeMismatch("splitting degree-1 shape".into()));
        }
        if e.p.m0.mul(&self.s0)? != Mat::identity(e.base.dim0)
            || e.p.m1.mul(&self.s1)? != Mat::identity(e.base.dim1)
        {
            return Err(Error::Invalid("splitting is not a section of the projection".into()));
        }
        Ok(())
    }
}

fn section(p: &Mat) -> Result<Mat> {
    let mut cols = Vec::with_capacity(p.rows());
    for k in 0..p.rows() {
        let col = p
            .solve(&basis_vec(p.rows(), k))
            .ok_or_else(|| Error::InvalidExtension("projection is not surjective".into()))?;
        cols.push(col);
    }
    if cols.is_empty() {
        return Ok(Mat::zeros(p.cols(), 0));
    }
    Mat::from_cols(cols)
}

/// The canonical linear section of the projection (per-column canonical
/// solves, free coordinates zero).
pub fn find_splitting(e: &Extension) -> Result<Splitting> {
    Ok(Splitting { s0: section(&e.p.m0)?, s1: section(&e.p.m1)? })
}

/// The degree-2 cocycle of an extension with respect to a splitting `σ`:
/// `ψ(a) = q(d̂σ₁a − σ₀da)`, `ω(x,y) = q([σx,σy] − σ[x,y])`, likewise `μ`,
/// `ν` for the mixed brackets and `θ` for the homotopy.
pub fn extract_cocycle(e: &Extension, s: &Splitting) -> Result<Cochain2> {
    s.validate(e)?;
    let base = &e.base;
    let (b0, b1) = (base.dim0, base.dim1);
    let mut out = Cochain2::zero(base, &e.fiber);

    for j in 0..b1 {
        let val = crate::mat::vec_sub(
            &e.hat.dv(&s.s1.col(j)),
            &s.s0.mul_vec(&base.d.col(j))?,
        );
        let fq = e.q0v(&val)?;
        for (o, x) in fq.iter().enumerate() {
            out.psi.set(o, j, x.clone());
        }
    }
    for i in 0..b0 {
        for j in 0..b0 {
            let val = crate::mat::vec_sub(
                &e.hat.b00v(&s.s0.col(i), &s.s0.col(j)),
                &s.s0.mul_vec(&base.b00.eval_basis(&[i, j]))?,
            );
            let fq = e.q0v(&val)?;
            for (o, x) in fq.iter().enumerate() {
                out.omega.set(o, &[i, j], x.clone());
            }
        }
    }
    for i in 0..b0 {
        for j in 0..b1 {
            let val = crate::mat::vec_sub(
                &e.hat.b01v(&s.s0.col(i), &s.s1.col(j)),
                &s.s1.mul_vec(&base.b01.eval_basis(&[i, j]))?,
            );
            let fq = e.q1v(&val)?;
            for (o, x) in fq.iter().enumerate() {
                out.mu.set(o, &[i, j], x.clone());
            }
        }
    }
    for j in 0..b1 {
        for i in 0..b0 {
            let val = crate::mat::vec_sub(
                &e.hat.b10v(&s.s1.col(j), &s.s0.col(i)),
                &s.s1.mul_vec(&base.b10.eval_basis(&[j, i]))?,
            );
            let fq = e.q1v(&val)?;
            for (o, x) in fq.iter().enumerate() {
                out.nu.set(o, &[j, i], x.clone());
            }
        }
    }
    for i in 0..b0 {
        for j in 0..b0 {
            for k in 0..b0 {
                let val = crate::mat::vec_sub(
                    &e.hat.l3v(&s.s0.col(i), &s.s0.col(j), &s.s0.col(k)),
                    &s.s1.mul_vec(&base.l3.eval_basis(&[i, j, k]))?,
                );
                let fq = e.q1v(&val)?;
                for (o, x) in fq.iter().enumerate() {
                    out.theta.set(o, &[i, j, k], x.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The representation of the base on the fiber induced by bracketing with
/// lifts. Uses the canonical splitting; the fiber being abelian makes the
/// unary actions independent of that choice.
pub fn induced_rep(e: &Extension) -> Result<Representation> {
    let s = find_splitting(e)?;
    let base = &e.base;
    let (b0, b1) = (base.dim0, base.dim1);
    let (v0, v1) = (e.fiber.dim0, e.fiber.dim1);
    let mut rep = Representation::zero(base, e.fiber.clone());

    let fill = |map: &mut MultiMap, idx: &[usize], val: Vec<Scalar>| {
        for (o, x) in val.iter().enumerate() {
            map.set(o, idx, x.clone());
        }
    };
    for i in 0..b0 {
        let sx = s.s0.col(i);
        for m in 0..v0 {
            let iu = e.i.m0.col(m);
            fill(&mut rep.l0_0, &[i, m], e.q0v(&e.hat.b00v(&sx, &iu))?);
            fill(&mut rep.r0_0, &[i, m], e.q0v(&e.hat.b00v(&iu, &sx))?);
        }
        for m in 0..v1 {
            let im = e.i.m1.col(m);
            fill(&mut rep.l0_1, &[i, m], e.q1v(&e.hat.b01v(&sx, &im))?);
            fill(&mut rep.r0_1, &[i, m], e.q1v(&e.hat.b10v(&im, &sx))?);
        }
    }
    for j in 0..b1 {
        let sa = s.s1.col(j);
        for m in 0..v0 {
            let iu = e.i.m0.col(m);
            fill(&mut rep.l1, &[j, m], e.q1v(&e.hat.b10v(&sa, &iu))?);
            fill(&mut rep.r1, &[j, m], e.q1v(&e.hat.b01v(&iu, &sa))?);
        }
    }
    for i in 0..b0 {
        for j in 0..b0 {
            let (sx, sy) = (s.s0.col(i), s.s0.col(j));
            for m in 0..v0 {
                let iu = e.i.m0.col(m);
                fill(
                    &mut rep.l2,
                    &[i, j, m],
                    crate::mat::vec_neg(&e.q1v(&e.hat.l3v(&sx, &sy, &iu))?),
                );
                fill(
                    &mut rep.m2,
                    &[i, j, m],
                    crate::mat::vec_neg(&e.q1v(&e.hat.l3v(&sx, &iu, &sy))?),
                );
                fill(
                    &mut rep.r2,
                    &[i, j, m],
                    crate::mat::vec_neg(&e.q1v(&e.hat.l3v(&iu, &sx, &sy))?),
                );
            }
        }
    }
    Ok(rep)
}

/// Build the extension `base ⊕ V` twisted by a degree-2 cocycle. Base
/// coordinates come first, fiber coordinates second; the inclusion and
/// projection are the block maps, so the canonical splitting is the block
/// inclusion of the base.
pub fn build_extension(
    base: &Leibniz2Algebra,
    rep: &Representation,
    c: &Cochain2,
) -> Result<Extension> {
    base.validate()?;
    rep.validate(base)?;
    if !crate::rep::verify_representation(base, rep)?.is_ok() {
        return Err(Error::Invalid("representation laws fail on the given coefficients".into()));
    }
    let report = is_cocycle2(base, rep, c)?;
    if !report.is_cocycle {
        let first = &report.violations[0];
        return Err(Error::NotCocycle(format!(
            "{} fails at {:?}",
            first.law, first.at
        )));
    }
    let (b0, b1) = (base.dim0, base.dim1);
    let (v0, v1) = (rep.v.dim0, rep.v.dim1);
    let (h0, h1) = (b0 + v0, b1 + v1);

    let mut dh = Mat::zeros(h0, h1);
    for r in 0..b0 {
        for cc in 0..b1 {
            dh.set(r, cc, base.d.at(r, cc).clone());
        }
    }
    for r in 0..v0 {
        for cc in 0..b1 {
            dh.set(b0 + r, cc, c.psi.at(r, cc).clone());
        }
    }
    for r in 0..v0 {
        for cc in 0..v1 {
            dh.set(b0 + r, b1 + cc, rep.v.d.at(r, cc).clone());
        }
    }

    let mut b00 = MultiMap::zeros(vec![h0, h0], h0);
    for i in 0..h0 {
        for j in 0..h0 {
            match (i < b0, j < b0) {
                (true, true) => {
                    let bv = base.b00.eval_basis(&[i, j]);
                    for (o, x) in bv.iter().enumerate() {
                        b00.set(o, &[i, j], x.clone());
                    }
                    let fv = c.omega.eval_basis(&[i, j]);
                    for (o, x) in fv.iter().enumerate() {
                        b00.set(b0 + o, &[i, j], x.clone());
                    }
                }
                (true, false) => {
                    let fv = rep.l0_0.eval_basis(&[i, j - b0]);
                    for (o, x) in fv.iter().enumerate() {
                        b00.set(b0 + o, &[i, j], x.clone());
                    }
                }
                (false, true) => {
                    let fv = rep.r0_0.eval_basis(&[j, i - b0]);
                    for (o, x) in fv.iter().enumerate() {
                        b00.set(b0 + o, &[i, j], x.clone());
                    }
                }
                (false, false) => {}
            }
        }
    }

    let mut b01 = MultiMap::zeros(vec![h0, h1], h1);
    for i in 0..h0 {
        for k in 0..h1 {
            match (i < b0, k < b1) {
                (true, true) => {
                    let bv = base.b01.eval_basis(&[i, k]);
                    for (o, x) in bv.iter().enumerate() {
                        b01.set(o, &[i, k], x.clone());
                    }
                    let fv = c.mu.eval_basis(&[i, k]);
                    for (o, x) in fv.iter().enumerate() {
                        b01.set(b1 + o, &[i, k], x.clone());
                    }
                }
                (true, false) => {
                    let fv = rep.l0_1.eval_basis(&[i, k - b1]);
                    for (o, x) in fv.iter().enumerate() {
                        b01.set(b1 + o, &[i, k], x.clone());
                    }
                }
                (false, true) => {
                    let fv = rep.r1.eval_basis(&[k, i - b0]);
                    for (o, x) in fv.iter().enumerate() {
                        b01.set(b1 + o, &[i, k], x.clone());
                    }
                }
                (false, false) => {}
            }
        }
    }

    let mut b10 = MultiMap::zeros(vec![h1, h0], h1);
    for k in 0..h1 {
        for i in 0..h0 {
            match (k < b1, i < b0) {
                (true, true) => {
                    let bv = base.b10.eval_basis(&[k, i]);
                    for (o, x) in bv.iter().enumerate() {
                        b10.set(o, &[k, i], x.clone());
                    }
                    let fv = c.nu.eval_basis(&[k, i]);
                    for (o, x) in fv.iter().enumerate() {
                        b10.set(b1 + o, &[k, i], x.clone());
                    }
                }
                (true, false) => {
                    let fv = rep.l1.eval_basis(&[k, i - b0]);
                    for (o, x) in fv.iter().enumerate() {
                        b10.set(b1 + o, &[k, i], x.clone());
                    }
                }
                (false, true) => {
                    let fv = rep.r0_1.eval_basis(&[i, k - b1]);
                    for (o, x) in fv.iter().enumerate() {
                        b10.set(b1 + o, &[k, i], x.clone());
                    }
                }
                (false, false) => {}
            }
        }
    }

    let mut l3 = MultiMap::zeros(vec![h0, h0, h0], h1);
    for i in 0..h0 {
        for j in 0..h0 {
            for k in 0..h0 {
                match (i < b0, j < b0, k < b0) {
                    (true, true, true) => {
                        let bv = base.l3.eval_basis(&[i, j, k]);
                        for (o, x) in bv.iter().enumerate() {
                            l3.set(o, &[i, j, k], x.clone());
                        }
                        let fv = c.theta.eval_basis(&[i, j, k]);
                        for (o, x) in fv.iter().enumerate() {
                            l3.set(b1 + o, &[i, j, k], x.clone());
                        }
                    }
                    (true, true, false) => {
                        let fv = rep.l2.eval_basis(&[i, j, k - b0]);
                        for (o, x) in fv.iter().enumerate() {
                            l3.set(b1 + o, &[i, j, k], -x);
                        }
                    }
                    (true, false, true) => {
                        let fv = rep.m2.eval_basis(&[i, k, j - b0]);
                        for (o, x) in fv.iter().enumerate() {
                            l3.set(b1 + o, &[i, j, k], -x);
                        }
                    }
                    (false, true, true) => {
                        let fv = rep.r2.eval_basis(&[j, k, i - b0]);
                        for (o, x) in fv.iter().enumerate() {
                            l3.set(b1 + o, &[i, j, k], -x);
                        }
                    }
                    _ => {}
                }
            }
        }
    }

    let hat = Leibniz2Algebra::new(h0, h1, dh, b00, b01, b10, l3)?;
    let mut i0 = Mat::zeros(h0, v0);
    for r in 0..v0 {
        i0.set(b0 + r, r, crate::scalar::int(1));
    }
    let mut i1 = Mat::zeros(h1, v1);
    for r in 0..v1 {
        i1.set(b1 + r, r, crate::scalar::int(1));
    }
    let mut p0 = Mat::zeros(b0, h0);
    for r in 0..b0 {
        p0.set(r, r, crate::scalar::int(1));
    }
    let mut p1 = Mat::zeros(b1, h1);
    for r in 0..b1 {
        p1.set(r, r, crate::scalar::int(1));
    }
    Extension::new(
        hat,
        base.clone(),
        rep.v.clone(),
        GradedMap { m0: i0, m1: i1 },
        GradedMap { m0: p0, m1: p1 },
    )
}

/// Whether the homotopy of the total algebra vanishes whenever at least two
/// arguments lie in the fiber. True for every extension produced by
/// [`build_extension`]; the equivalence and inducibility solvers need it to
/// keep their systems affine.
pub(crate) fn two_fiber_l3_vanishes(e: &Extension) -> Result<bool> {
    let v0 = e.fiber.dim0;
    let h0 = e.hat.dim0;
    for u in 0..v0 {
        for w in 0..v0 {
            let iu = e.i.m0.col(u);
            let iw = e.i.m0.col(w);
            for h in 0..h0 {
                let eh = basis_vec(h0, h);
                if !vec_is_zero(&e.hat.l3.eval(&[&iu, &iw, &eh])?)
                    || !vec_is_zero(&e.hat.l3.eval(&[&iu, &eh, &iw])?)
                    || !vec_is_zero(&e.hat.l3.eval(&[&eh, &iu, &iw])?)
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Morphism candidate over a degree-1 cochain `λ` on the base with fiber
/// values: identity on fiber and base, `λ` twisting the complement.
fn equivalence_candidate(
    ea: &Extension,
    eb: &Extension,
    sa: &Splitting,
    sb: &Splitting,
    lam: &Cochain1,
) -> Result<Hom2> {
    let pi0 = Mat::identity(ea.hat.dim0).sub(&sa.s0.mul(&ea.p.m0)?)?;
    let f0 = sb
        .s0
        .mul(&ea.p.m0)?
        .add(&eb.i.m0.mul(&lam.phi0)?.mul(&ea.p.m0)?)?
        .add(&eb.i.m0.mul(&ea.q.m0)?.mul(&pi0)?)?;
    let pi1 = Mat::identity(ea.hat.dim1).sub(&sa.s1.mul(&ea.p.m1)?)?;
    let f1 = sb
        .s1
        .mul(&ea.p.m1)?
        .add(&eb.i.m1.mul(&lam.phi1)?.mul(&ea.p.m1)?)?
        .add(&eb.i.m1.mul(&ea.q.m1)?.mul(&pi1)?)?;
    let f2 = lam.chi.compose_inputs(&[&ea.p.m0, &ea.p.m0])?.compose_left(&eb.i.m1)?;
    Ok(Hom2 { f0, f1, f2 })
}

/// Decide whether two extensions over the same base and fiber are
/// equivalent, returning a verified isomorphism `F` with `F ∘ i = i'` and
/// `p' ∘ F = p` when they are.
pub fn extensions_equivalent(ea: &Extension, eb: &Extension) -> Result<Option<Hom2>> {
    if ea.base != eb.base {
        return Err(Error::Invalid("extensions have different bases".into()));
    }
    if ea.fiber != eb.fiber {
        return Err(Error::Invalid("extensions have different fibers".into()));
    }
    let sa = find_splitting(ea)?;
    let sb = find_splitting(eb)?;
    let n = Cochain1::dim(&ea.base, &ea.fiber);
    let guard = two_fiber_l3_vanishes(eb)?;

    let residual = |flat: &[Scalar]| -> Result<Vec<Scalar>> {
        let lam = Cochain1::unflatten(&ea.base, &ea.fiber, flat)?;
        let h = equivalence_candidate(ea, eb, &sa, &sb, &lam)?;
        let res = hom_residuals(&ea.hat, &eb.hat, &h)?;
        Ok(if guard { res.flat_all() } else { res.flat_il() })
    };
    let Some(sol) = solve_affine(n, residual)? else {
        return Ok(None);
    };
    let lam = Cochain1::unflatten(&ea.base, &ea.fiber, &sol)?;
    let h = equivalence_candidate(ea, eb, &sa, &sb, &lam)?;
    if verify_hom(&ea.hat, &eb.hat, &h)?.is_ok() {
        return Ok(Some(h));
    }
    if !guard {
        return Err(Error::Invalid(
            "homotopy is nonzero on two fiber arguments; equivalence is undecided".into(),
        ));
    }
    Err(Error::Invalid("equivalence candidate failed verification".into()))
}
