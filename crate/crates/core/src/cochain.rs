//! Low-degree cochain complex of a Leibniz 2-algebra with coefficients in a
//! representation, plus the classical one-space coboundary for comparison.
//!
//! Degree-1 cochains have components `(λ₀, λ₁, λ₂)`, degree-2 cochains
//! `(ψ, ω, μ, ν, θ)` and degree-3 cochains eight components split by input
//! grades. The degree-2 coboundary conditions carry the intrinsic labels
//! `coc01`–`coc08`. Every cochain bundle flattens to a single coordinate
//! vector (components in declared field order, each laid out output-major),
//! which is the basis used by [`d1_matrix`], [`d2_matrix`] and
//! [`cohomology`].

use crate::algebra::Leibniz2Algebra;
use crate::complex::TwoTermComplex;
use crate::error::{Error, Result};
use crate::mat::{basis_vec, vec_add, vec_scale, vec_sub, Mat};
use crate::multimap::{multi_indices, MultiMap};
use crate::rep::Representation;
use crate::scalar::Scalar;
use crate::verify::{Verification, Violation};
use num::Zero;

fn set_vec(map: &mut MultiMap, idx: &[usize], val: &[Scalar]) {
    for (o, x) in val.iter().enumerate() {
        map.set(o, idx, x.clone());
    }
}

fn take(data: &[Scalar], pos: &mut usize, n: usize) -> Result<Vec<Scalar>> {
    if *pos + n > data.len() {
        return Err(Error::DimMismatch("flattened cochain too short".into()));
    }
    let out = data[*pos..*pos + n].to_vec();
    *pos += n;
    Ok(out)
}

/// Degree-1 cochain: `λ₀ : g₀ → V₀`, `λ₁ : g₁ → V₁`, `λ₂ : g₀⊗g₀ → V₁`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain1 {
    pub phi0: Mat,
    pub phi1: Mat,
    pub chi: MultiMap,
}

impl Cochain1 {
    pub fn zero(g: &Leibniz2Algebra, v: &TwoTermComplex) -> Self {
        Cochain1 {
            phi0: Mat::zeros(v.dim0, g.dim0),
            phi1: Mat::zeros(v.dim1, g.dim1),
            chi: MultiMap::zeros(vec![g.dim0, g.dim0], v.dim1),
        }
    }

    pub fn validate(&self, g: &Leibniz2Algebra, v: &TwoTermComplex) -> Result<()> {
        if self.phi0.rows() != v.dim0 || self.phi0.cols() != g.dim0 {
            return Err(Error::ShapeMismatch("cochain1 degree-0 component shape".into()));
        }
        if self.phi1.rows() != v.dim1 || self.phi1.cols() != g.dim1 {
            return Err(Error::ShapeMismatch("cochain1 degree-1 component shape".into()));
        }
        if self.chi.input_dims() != [g.dim0, g.dim0] || self.chi.out_dim() != v.dim1 {
            return Err(Error::ShapeMismatch("cochain1 bilinear component shape".into()));
        }
        Ok(())
    }

    pub fn dim(g: &Leibniz2Algebra, v: &TwoTermComplex) -> usize {
        v.dim0 * g.dim0 + v.dim1 * g.dim1 + v.dim1 * g.dim0 * g.dim0
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.phi0.entries().to_vec();
        out.extend_from_slice(self.phi1.entries());
        out.extend(self.chi.flatten());
        out
    }

    pub fn unflatten(g: &Leibniz2Algebra, v: &TwoTermComplex, data: &[Scalar]) -> Result<Self> {
        if data.len() != Self::dim(g, v) {
            return Err(Error::DimMismatch(format!(
                "cochain1 needs {} coordinates, got {}",
                Self::dim(g, v),
                data.len()
            )));
        }
        let mut pos = 0;
        let phi0 = Mat::new(v.dim0, g.dim0, take(data, &mut pos, v.dim0 * g.dim0)?)?;
        let phi1 = Mat::new(v.dim1, g.dim1, take(data, &mut pos, v.dim1 * g.dim1)?)?;
        let chi = MultiMap::new(
            vec![g.dim0, g.dim0],
            v.dim1,
            take(data, &mut pos, v.dim1 * g.dim0 * g.dim0)?,
        )?;
        Ok(Cochain1 { phi0, phi1, chi })
    }

    pub fn add(&self, other: &Cochain1) -> Result<Cochain1> {
        Ok(Cochain1 {
            phi0: self.phi0.add(&other.phi0)?,
            phi1: self.phi1.add(&other.phi1)?,
            chi: self.chi.add(&other.chi)?,
        })
    }

    pub fn sub(&self, other: &Cochain1) -> Result<Cochain1> {
        Ok(Cochain1 {
            phi0: self.phi0.sub(&other.phi0)?,
            phi1: self.phi1.sub(&other.phi1)?,
            chi: self.chi.sub(&other.chi)?,
        })
    }

    pub fn neg(&self) -> Cochain1 {
        Cochain1 { phi0: self.phi0.neg(), phi1: self.phi1.neg(), chi: self.chi.neg() }
    }

    pub fn is_zero(&self) -> bool {
        self.phi0.is_zero() && self.phi1.is_zero() && self.chi.is_zero()
    }
}

/// Degree-2 cochain: `ψ : g₁ → V₀`, `ω : g₀⊗g₀ → V₀`, `μ : g₀⊗g₁ → V₁`,
/// `ν : g₁⊗g₀ → V₁`, `θ : g₀⊗g₀⊗g₀ → V₁`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain2 {
    pub psi: Mat,
    pub omega: MultiMap,
    pub mu: MultiMap,
    pub nu: MultiMap,
    pub theta: MultiMap,
}

impl Cochain2 {
    pub fn zero(g: &Leibniz2Algebra, v: &TwoTermComplex) -> Self {
        Cochain2 {
            psi: Mat::zeros(v.dim0, g.dim1),
            omega: MultiMap::zeros(vec![g.dim0, g.dim0], v.dim0),
            mu: MultiMap::zeros(vec![g.dim0, g.dim1], v.dim1),
            nu: MultiMap::zeros(vec![g.dim1, g.dim0], v.dim1),
            theta: MultiMap::zeros(vec![g.dim0, g.dim0, g.dim0], v.dim1),
        }
    }

    pub fn validate(&self, g: &Leibniz2Algebra, v: &TwoTermComplex) -> Result<()> {
        if self.psi.rows() != v.dim0 || self.psi.cols() != g.dim1 {
            return Err(Error::ShapeMismatch("cochain2 psi shape".into()));
        }
        let expect = [
            ("omega", &self.omega, vec![g.dim0, g.dim0], v.dim0),
            ("mu", &self.mu, vec![g.dim0, g.dim1], v.dim1),
            ("nu", &self.nu, vec![g.dim1, g.dim0], v.dim1),
            ("theta", &self.theta, vec![g.dim0, g.dim0, g.dim0], v.dim1),
        ];
        for (name, map, dims, out) in expect {
            if map.input_dims() != dims.as_slice() || map.out_dim() != out {
                return Err(Error::ShapeMismatch(format!("cochain2 {name} shape")));
            }
        }
        Ok(())
    }

    pub fn dim(g: &Leibniz2Algebra, v: &TwoTermComplex) -> usize {
        v.dim0 * g.dim1
            + v.dim0 * g.dim0 * g.dim0
            + v.dim1 * g.dim0 * g.dim1
            + v.dim1 * g.dim1 * g.dim0
            + v.dim1 * g.dim0 * g.dim0 * g.dim0
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.psi.entries().to_vec();
        out.extend(self.omega.flatten());
        out.extend(self.mu.flatten());
        out.extend(self.nu.flatten());
        out.extend(self.theta.flatten());
        out
    }

    pub fn unflatten(g: &Leibniz2Algebra, v: &TwoTermComplex, data: &[Scalar]) -> Result<Self> {
        if data.len() != Self::dim(g, v) {
            return Err(Error::DimMismatch(format!(
                "cochain2 needs {} coordinates, got {}",
                Self::dim(g, v),
                data.len()
            )));
        }
        let (d0, d1) = (g.dim0, g.dim1);
        let (v0, v1) = (v.dim0, v.dim1);
        let mut pos = 0;
        let psi = Mat::new(v0, d1, take(data, &mut pos, v0 * d1)?)?;
        let omega = MultiMap::new(vec![d0, d0], v0, take(data, &mut pos, v0 * d0 * d0)?)?;
        let mu = MultiMap::new(vec![d0, d1], v1, take(data, &mut pos, v1 * d0 * d1)?)?;
        let nu = MultiMap::new(vec![d1, d0], v1, take(data, &mut pos, v1 * d1 * d0)?)?;
        let theta = MultiMap::new(vec![d0, d0, d0], v1, take(data, &mut pos, v1 * d0 * d0 * d0)?)?;
        Ok(Cochain2 { psi, omega, mu, nu, theta })
    }

    pub fn add(&self, other: &Cochain2) -> Result<Cochain2> {
        Ok(Cochain2 {
            psi: self.psi.add(&other.psi)?,
            omega: self.omega.add(&other.omega)?,
            mu: self.mu.add(&other.mu)?,
            nu: self.nu.add(&other.nu)?,
            theta: self.theta.add(&other.theta)?,
        })
    }

    pub fn sub(&self, other: &Cochain2) -> Result<Cochain2> {
        Ok(Cochain2 {
            psi: self.psi.sub(&other.psi)?,
            omega: self.omega.sub(&other.omega)?,
            mu: self.mu.sub(&other.mu)?,
            nu: self.nu.sub(&other.nu)?,
            theta: self.theta.sub(&other.theta)?,
        })
    }

    pub fn neg(&self) -> Cochain2 {
        Cochain2 {
            psi: self.psi.neg(),
            omega: self.omega.neg(),
            mu: self.mu.neg(),
            nu: self.nu.neg(),
            theta: self.theta.neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.psi.is_zero()
            && self.omega.is_zero()
            && self.mu.is_zero()
            && self.nu.is_zero()
            && self.theta.is_zero()
    }
}

/// Degree-3 cochain, one component per input-grade pattern. Component
/// `c3_11 : g₁⊗g₁ → V₁` receives `coc03`; `c3_01`, `c3_10` (valued in `V₀`)
/// receive `coc01`, `coc02`; `c3_000 : g₀³ → V₀` receives `coc04`;
/// `c3_001`, `c3_010`, `c3_100` (valued in `V₁`) receive `coc05`–`coc07`;
/// `c3_0000 : g₀⁴ → V₁` receives `coc08`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain3 {
    pub c3_11: MultiMap,
    pub c3_01: MultiMap,
    pub c3_10: MultiMap,
    pub c3_000: MultiMap,
    pub c3_001: MultiMap,
    pub c3_010: MultiMap,
    pub c3_100: MultiMap,
    pub c3_0000: MultiMap,
}

impl Cochain3 {
    pub fn zero(g: &Leibniz2Algebra, v: &TwoTermComplex) -> Self {
        let (d0, d1) = (g.dim0, g.dim1);
        let (v0, v1) = (v.dim0, v.dim1);
        Cochain3 {
            c3_11: MultiMap::zeros(vec![d1, d1], v1),
            c3_01: MultiMap::zeros(vec![d0, d1], v0),
            c3_10: MultiMap::zeros(vec![d1, d0], v0),
            c3_000: MultiMap::zeros(vec![d0, d0, d0], v0),
            c3_001: MultiMap::zeros(vec![d0, d0, d1], v1),
            c3_010: MultiMap::zeros(vec![d0, d1, d0], v1),
            c3_100: MultiMap::zeros(vec![d1, d0, d0], v1),
            c3_0000: MultiMap::zeros(vec![d0, d0, d0, d0], v1),
        }
    }

    pub fn dim(g: &Leibniz2Algebra, v: &TwoTermComplex) -> usize {
        let (d0, d1) = (g.dim0, g.dim1);
        let (v0, v1) = (v.dim0, v.dim1);
        v1 * d1 * d1
            + v0 * d0 * d1
            + v0 * d1 * d0
            + v0 * d0 * d0 * d0
            + v1 * d0 * d0 * d1
            + v1 * d0 * d1 * d0
            + v1 * d1 * d0 * d0
            + v1 * d0 * d0 * d0 * d0
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = self.c3_11.flatten();
        out.extend(self.c3_01.flatten());
        out.extend(self.c3_10.flatten());
        out.extend(self.c3_000.flatten());
        out.extend(self.c3_001.flatten());
        out.extend(self.c3_010.flatten());
        out.extend(self.c3_100.flatten());
        out.extend(self.c3_0000.flatten());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c3_11.is_zero()
            && self.c3_01.is_zero()
            && self.c3_10.is_zero()
            && self.c3_000.is_zero()
            && self.c3_001.is_zero()
            && self.c3_010.is_zero()
            && self.c3_100.is_zero()
            && self.c3_0000.is_zero()
    }
}

/// Degree-1 coboundary `(λ₀, λ₁, λ₂) ↦ (ψ, ω, μ, ν, θ)`.
pub fn d1_apply(g: &Leibniz2Algebra, rep: &Representation, c: &Cochain1) -> Result<Cochain2> {
    g.validate()?;
    rep.validate(g)?;
    c.validate(g, &rep.v)?;
    let (d0, d1) = (g.dim0, g.dim1);
    let vd = &rep.v.d;
    let mut out = Cochain2::zero(g, &rep.v);

    // ψ(a) = ∂λ₁(a) − λ₀(d a)
    out.psi = vd.mul(&c.phi1)?.sub(&c.phi0.mul(&g.d)?)?;

    // ω(x,y) = l0_0(x)λ₀(y) + r0_0(y)λ₀(x) − λ₀[x,y] + ∂λ₂(x,y)
    for i in 0..d0 {
        for j in 0..d0 {
            let (ei, ej) = (basis_vec(d0, i), basis_vec(d0, j));
            let mut val = rep.l0_0.eval(&[&ei, &c.phi0.col(j)])?;
            val = vec_add(&val, &rep.r0_0.eval(&[&ej, &c.phi0.col(i)])?);
            val = vec_sub(&val, &c.phi0.mul_vec(&g.b00.eval_basis(&[i, j]))?);
            val = vec_add(&val, &vd.mul_vec(&c.chi.eval_basis(&[i, j]))?);
            set_vec(&mut out.omega, &[i, j], &val);
        }
    }
    // μ(x,a) = l0_1(x)λ₁(a) + r1(a)λ₀(x) − λ₁[x,a] + λ₂(x, d a)
    for i in 0..d0 {
        for j in 0..d1 {
            let ei = basis_vec(d0, i);
            let fj = basis_vec(d1, j);
            let mut val = rep.l0_1.eval(&[&ei, &c.phi1.col(j)])?;
            val = vec_add(&val, &rep.r1.eval(&[&fj, &c.phi0.col(i)])?);
            val = vec_sub(&val, &c.phi1.mul_vec(&g.b01.eval_basis(&[i, j]))?);
            val = vec_add(&val, &c.chi.eval(&[&ei, &g.d.col(j)])?);
            set_vec(&mut out.mu, &[i, j], &val);
        }
    }
    // ν(a,x) = l1(a)λ₀(x) + r0_1(x)λ₁(a) − λ₁[a,x] + λ₂(d a, x)
    for j in 0..d1 {
        for i in 0..d0 {
            let ei = basis_vec(d0, i);
            let fj = basis_vec(d1, j);
            let mut val = rep.l1.eval(&[&fj, &c.phi0.col(i)])?;
            val = vec_add(&val, &rep.r0_1.eval(&[&ei, &c.phi1.col(j)])?);
            val = vec_sub(&val, &c.phi1.mul_vec(&g.b10.eval_basis(&[j, i]))?);
            val = vec_add(&val, &c.chi.eval(&[&g.d.col(j), &ei])?);
            set_vec(&mut out.nu, &[j, i], &val);
        }
    }
    // θ(x,y,z) = l0_1(x)λ₂(y,z) − r0_1(z)λ₂(x,y) − l0_1(y)λ₂(x,z) − λ₁(l₃(x,y,z))
    //          − l2(x,y)λ₀(z) − m2(x,z)λ₀(y) − r2(y,z)λ₀(x)
    //          + λ₂(x,[y,z]) − λ₂([x,y],z) − λ₂(y,[x,z])
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let (ei, ej, ek) = (basis_vec(d0, i), basis_vec(d0, j), basis_vec(d0, k));
                let mut val = rep.l0_1.eval(&[&ei, &c.chi.eval_basis(&[j, k])])?;
                val = vec_sub(&val, &rep.r0_1.eval(&[&ek, &c.chi.eval_basis(&[i, j])])?);
                val = vec_sub(&val, &rep.l0_1.eval(&[&ej, &c.chi.eval_basis(&[i, k])])?);
                val = vec_sub(&val, &c.phi1.mul_vec(&g.l3.eval_basis(&[i, j, k]))?);
                val = vec_sub(&val, &rep.l2.eval(&[&ei, &ej, &c.phi0.col(k)])?);
                val = vec_sub(&val, &rep.m2.eval(&[&ei, &ek, &c.phi0.col(j)])?);
                val = vec_sub(&val, &rep.r2.eval(&[&ej, &ek, &c.phi0.col(i)])?);
                val = vec_add(&val, &c.chi.eval(&[&ei, &g.b00.eval_basis(&[j, k])])?);
                val = vec_sub(&val, &c.chi.eval(&[&g.b00.eval_basis(&[i, j]), &ek])?);
                val = vec_sub(&val, &c.chi.eval(&[&ej, &g.b00.eval_basis(&[i, k])])?);
                set_vec(&mut out.theta, &[i, j, k], &val);
            }
        }
    }
    Ok(out)
}

/// Degree-2 coboundary `(ψ, ω, μ, ν, θ) ↦ (coc01, …, coc08)`.
pub fn d2_apply(g: &Leibniz2Algebra, rep: &Representation, c: &Cochain2) -> Result<Cochain3> {
    g.validate()?;
    rep.validate(g)?;
    c.validate(g, &rep.v)?;
    let (d0, d1) = (g.dim0, g.dim1);
    let vd = &rep.v.d;
    let mut out = Cochain3::zero(g, &rep.v);

    // coc01(x,a) = l0_0(x)ψ(a) − ψ[x,a] + ω(x, d a) − ∂μ(x,a)
    for i in 0..d0 {
        for j in 0..d1 {
            let ei = basis_vec(d0, i);
            let mut val = rep.l0_0.eval(&[&ei, &c.psi.col(j)])?;
            val = vec_sub(&val, &c.psi.mul_vec(&g.b01.eval_basis(&[i, j]))?);
            val = vec_add(&val, &c.omega.eval(&[&ei, &g.d.col(j)])?);
            val = vec_sub(&val, &vd.mul_vec(&c.mu.eval_basis(&[i, j]))?);
            set_vec(&mut out.c3_01, &[i, j], &val);
        }
    }
    // coc02(a,x) = r0_0(x)ψ(a) − ψ[a,x] + ω(d a, x) − ∂ν(a,x)
    for j in 0..d1 {
        for i in 0..d0 {
            let ei = basis_vec(d0, i);
            let mut val = rep.r0_0.eval(&[&ei, &c.psi.col(j)])?;
            val = vec_sub(&val, &c.psi.mul_vec(&g.b10.eval_basis(&[j, i]))?);
            val = vec_add(&val, &c.omega.eval(&[&g.d.col(j), &ei])?);
            val = vec_sub(&val, &vd.mul_vec(&c.nu.eval_basis(&[j, i]))?);
            set_vec(&mut out.c3_10, &[j, i], &val);
        }
    }
    // coc03(a,b) = l1(a)ψ(b) + ν(a, d b) − r1(b)ψ(a) − μ(d a, b)
    for j in 0..d1 {
        for k in 0..d1 {
            let fj = basis_vec(d1, j);
            let fk = basis_vec(d1, k);
            let mut val = rep.l1.eval(&[&fj, &c.psi.col(k)])?;
            val = vec_add(&val, &c.nu.eval(&[&fj, &g.d.col(k)])?);
            val = vec_sub(&val, &rep.r1.eval(&[&fk, &c.psi.col(j)])?);
            val = vec_sub(&val, &c.mu.eval(&[&g.d.col(j), &fk])?);
            set_vec(&mut out.c3_11, &[j, k], &val);
        }
    }
    // coc04(x,y,z) = l0_0(x)ω(y,z) − r0_0(z)ω(x,y) − l0_0(y)ω(x,z)
    //             + ω(x,[y,z]) − ω([x,y],z) − ω(y,[x,z]) − ∂θ(x,y,z) − ψ(l₃(x,y,z))
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let (ei, ej, ek) = (basis_vec(d0, i), basis_vec(d0, j), basis_vec(d0, k));
                let mut val = rep.l0_0.eval(&[&ei, &c.omega.eval_basis(&[j, k])])?;
                val = vec_sub(&val, &rep.r0_0.eval(&[&ek, &c.omega.eval_basis(&[i, j])])?);
                val = vec_sub(&val, &rep.l0_0.eval(&[&ej, &c.omega.eval_basis(&[i, k])])?);
                val = vec_add(&val, &c.omega.eval(&[&ei, &g.b00.eval_basis(&[j, k])])?);
                val = vec_sub(&val, &c.omega.eval(&[&g.b00.eval_basis(&[i, j]), &ek])?);
                val = vec_sub(&val, &c.omega.eval(&[&ej, &g.b00.eval_basis(&[i, k])])?);
                val = vec_sub(&val, &vd.mul_vec(&c.theta.eval_basis(&[i, j, k]))?);
                val = vec_sub(&val, &c.psi.mul_vec(&g.l3.eval_basis(&[i, j, k]))?);
                set_vec(&mut out.c3_000, &[i, j, k], &val);
            }
        }
    }
    // coc05(x,y,a) = l0_1(x)μ(y,a) − r1(a)ω(x,y) − l0_1(y)μ(x,a)
    //             + μ(x,[y,a]) − μ([x,y],a) − μ(y,[x,a]) − θ(x,y,d a) + l2(x,y)ψ(a)
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d1 {
                let (ei, ej) = (basis_vec(d0, i), basis_vec(d0, j));
                let fk = basis_vec(d1, k);
                let mut val = rep.l0_1.eval(&[&ei, &c.mu.eval_basis(&[j, k])])?;
                val = vec_sub(&val, &rep.r1.eval(&[&fk, &c.omega.eval_basis(&[i, j])])?);
                val = vec_sub(&val, &rep.l0_1.eval(&[&ej, &c.mu.eval_basis(&[i, k])])?);
                val = vec_add(&val, &c.mu.eval(&[&ei, &g.b01.eval_basis(&[j, k])])?);
                val = vec_sub(&val, &c.mu.eval(&[&g.b00.eval_basis(&[i, j]), &fk])?);
                val = vec_sub(&val, &c.mu.eval(&[&ej, &g.b01.eval_basis(&[i, k])])?);
                val = vec_sub(&val, &c.theta.eval(&[&ei, &ej, &g.d.col(k)])?);
                val = vec_add(&val, &rep.l2.eval(&[&ei, &ej, &c.psi.col(k)])?);
                set_vec(&mut out.c3_001, &[i, j, k], &val);
            }
        }
    }
    // coc06(x,a,y) = l0_1(x)ν(a,y) − r0_1(y)μ(x,a) − l1(a)ω(x,y)
    //             + μ(x,[a,y]) − ν([x,a],y) − ν(a,[x,y]) − θ(x,d a,y) + m2(x,y)ψ(a)
    for i in 0..d0 {
        for j in 0..d1 {
            for k in 0..d0 {
                let (ei, ek) = (basis_vec(d0, i), basis_vec(d0, k));
                let fj = basis_vec(d1, j);
                let mut val = rep.l0_1.eval(&[&ei, &c.nu.eval_basis(&[j, k])])?;
                val = vec_sub(&val, &rep.r0_1.eval(&[&ek, &c.mu.eval_basis(&[i, j])])?);
                val = vec_sub(&val, &rep.l1.eval(&[&fj, &c.omega.eval_basis(&[i, k])])?);
                val = vec_add(&val, &c.mu.eval(&[&ei, &g.b10.eval_basis(&[j, k])])?);
                val = vec_sub(&val, &c.nu.eval(&[&g.b01.eval_basis(&[i, j]), &ek])?);
                val = vec_sub(&val, &c.nu.eval(&[&fj, &g.b00.eval_basis(&[i, k])])?);
                val = vec_sub(&val, &c.theta.eval(&[&ei, &g.d.col(j), &ek])?);
                val = vec_add(&val, &rep.m2.eval(&[&ei, &ek, &c.psi.col(j)])?);
                set_vec(&mut out.c3_010, &[i, j, k], &val);
            }
        }
    }
    // coc07(a,x,y) = l1(a)ω(x,y) − r0_1(y)ν(a,x) − l0_1(x)ν(a,y)
    //             + ν(a,[x,y]) − ν([a,x],y) − μ(x,[a,y]) − θ(d a,x,y) + r2(x,y)ψ(a)
    for j in 0..d1 {
        for i in 0..d0 {
            for k in 0..d0 {
                let (ei, ek) = (basis_vec(d0, i), basis_vec(d0, k));
                let fj = basis_vec(d1, j);
                let mut val = rep.l1.eval(&[&fj, &c.omega.eval_basis(&[i, k])])?;
                val = vec_sub(&val, &rep.r0_1.eval(&[&ek, &c.nu.eval_basis(&[j, i])])?);
                val = vec_sub(&val, &rep.l0_1.eval(&[&ei, &c.nu.eval_basis(&[j, k])])?);
                val = vec_add(&val, &c.nu.eval(&[&fj, &g.b00.eval_basis(&[i, k])])?);
                val = vec_sub(&val, &c.nu.eval(&[&g.b10.eval_basis(&[j, i]), &ek])?);
                val = vec_sub(&val, &c.mu.eval(&[&ei, &g.b10.eval_basis(&[j, k])])?);
                val = vec_sub(&val, &c.theta.eval(&[&g.d.col(j), &ei, &ek])?);
                val = vec_add(&val, &rep.r2.eval(&[&ei, &ek, &c.psi.col(j)])?);
                set_vec(&mut out.c3_100, &[j, i, k], &val);
            }
        }
    }
    // coc08(x,y,z,t): the ten θ terms, four mixed μ/ν-of-l₃ terms and six
    // binary-homotopy corrections
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                for l in 0..d0 {
                    let ei = basis_vec(d0, i);
                    let ej = basis_vec(d0, j);
                    let ek = basis_vec(d0, k);
                    let el = basis_vec(d0, l);
                    let mut val = rep.l0_1.eval(&[&ei, &c.theta.eval_basis(&[j, k, l])])?;
                    val = vec_sub(&val, &rep.l0_1.eval(&[&ej, &c.theta.eval_basis(&[i, k, l])])?);
                    val = vec_add(&val, &rep.l0_1.eval(&[&ek, &c.theta.eval_basis(&[i, j, l])])?);
                    val = vec_add(&val, &rep.r0_1.eval(&[&el, &c.theta.eval_basis(&[i, j, k])])?);
                    val = vec_sub(&val, &c.theta.eval(&[&g.b00.eval_basis(&[i, j]), &ek, &el])?);
                    val = vec_sub(&val, &c.theta.eval(&[&ej, &g.b00.eval_basis(&[i, k]), &el])?);
                    val = vec_sub(&val, &c.theta.eval(&[&ej, &ek, &g.b00.eval_basis(&[i, l])])?);
                    val = vec_add(&val, &c.theta.eval(&[&ei, &g.b00.eval_basis(&[j, k]), &el])?);
                    val = vec_add(&val, &c.theta.eval(&[&ei, &ek, &g.b00.eval_basis(&[j, l])])?);
                    val = vec_sub(&val, &c.theta.eval(&[&ei, &ej, &g.b00.eval_basis(&[k, l])])?);
                    val = vec_add(&val, &c.mu.eval(&[&ei, &g.l3.eval_basis(&[j, k, l])])?);
                    val = vec_sub(&val, &c.mu.eval(&[&ej, &g.l3.eval_basis(&[i, k, l])])?);
                    val = vec_add(&val, &c.mu.eval(&[&ek, &g.l3.eval_basis(&[i, j, l])])?);
                    val = vec_add(&val, &c.nu.eval(&[&g.l3.eval_basis(&[i, j, k]), &el])?);
                    val = vec_add(&val, &rep.r2.eval(&[&ek, &el, &c.omega.eval_basis(&[i, j])])?);
                    val = vec_add(&val, &rep.m2.eval(&[&ej, &el, &c.omega.eval_basis(&[i, k])])?);
                    val = vec_add(&val, &rep.l2.eval(&[&ej, &ek, &c.omega.eval_basis(&[i, l])])?);
                    val = vec_sub(&val, &rep.m2.eval(&[&ei, &el, &c.omega.eval_basis(&[j, k])])?);
                    val = vec_sub(&val, &rep.l2.eval(&[&ei, &ek, &c.omega.eval_basis(&[j, l])])?);
                    val = vec_add(&val, &rep.l2.eval(&[&ei, &ej, &c.omega.eval_basis(&[k, l])])?);
                    set_vec(&mut out.c3_0000, &[i, j, k, l], &val);
                }
            }
        }
    }
    Ok(out)
}

/// Matrix of `d1_apply` in flattened coordinates.
pub fn d1_matrix(g: &Leibniz2Algebra, rep: &Representation) -> Result<Mat> {
    let v = &rep.v;
    let n = Cochain1::dim(g, v);
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let c = Cochain1::unflatten(g, v, &basis_vec(n, k))?;
        cols.push(d1_apply(g, rep, &c)?.flatten());
    }
    if cols.is_empty() {
        return Ok(Mat::zeros(Cochain2::dim(g, v), 0));
    }
    Mat::from_cols(cols)
}

/// Matrix of `d2_apply` in flattened coordinates.
pub fn d2_matrix(g: &Leibniz2Algebra, rep: &Representation) -> Result<Mat> {
    let v = &rep.v;
    let n = Cochain2::dim(g, v);
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let c = Cochain2::unflatten(g, v, &basis_vec(n, k))?;
        cols.push(d2_apply(g, rep, &c)?.flatten());
    }
    if cols.is_empty() {
        return Ok(Mat::zeros(Cochain3::dim(g, v), 0));
    }
    Mat::from_cols(cols)
}

/// Report of the eight cocycle conditions on a degree-2 cochain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocycle2Report {
    pub is_cocycle: bool,
    pub violations: Vec<Violation>,
}

/// Evaluate `coc01`–`coc08` on `c` and report every nonzero value.
pub fn is_cocycle2(g: &Leibniz2Algebra, rep: &Representation, c: &Cochain2) -> Result<Cocycle2Report> {
    let image = d2_apply(g, rep, c)?;
    let mut v = Verification::new();
    let parts: [(&str, &MultiMap); 8] = [
        ("coc01", &image.c3_01),
        ("coc02", &image.c3_10),
        ("coc03", &image.c3_11),
        ("coc04", &image.c3_000),
        ("coc05", &image.c3_001),
        ("coc06", &image.c3_010),
        ("coc07", &image.c3_100),
        ("coc08", &image.c3_0000),
    ];
    for (law, map) in parts {
        for idx in multi_indices(map.input_dims()) {
            v.check(law, &idx, map.eval_basis(&idx));
        }
    }
    Ok(Cocycle2Report { is_cocycle: v.is_ok(), violations: v.violations })
}

/// Reduce `v` against rows in reduced row echelon form: for each row with
/// pivot `j`, subtract `v[j]` times the row. The result is the canonical
/// representative of `v` modulo the row space.
pub(crate) fn reduce_mod_rref_rows(rows: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for r in rows {
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { continue };
        let c = out[p].clone();
        if !c.is_zero() {
            out = vec_sub(&out, &vec_scale(r, &c));
        }
    }
    out
}

fn nonzero_rows(m: &Mat) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|i| m.row(i).to_vec())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Canonical basis of the coboundary space `B²`, as RREF rows in flattened
/// degree-2 coordinates.
pub(crate) fn b2_rref_rows(g: &Leibniz2Algebra, rep: &Representation) -> Result<Vec<Vec<Scalar>>> {
    let d1 = d1_matrix(g, rep)?;
    let (r, _) = d1.transpose().rref();
    Ok(nonzero_rows(&r))
}

/// Canonical representative of the class of a flattened degree-2 cochain
/// modulo coboundaries.
pub(crate) fn class_representative(
    g: &Leibniz2Algebra,
    rep: &Representation,
    flat: &[Scalar],
) -> Result<Vec<Scalar>> {
    let rows = b2_rref_rows(g, rep)?;
    Ok(reduce_mod_rref_rows(&rows, flat))
}

/// Dimensions and canonical bases of the degree-(1,2) cohomology data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohomologySummary {
    pub dim_c1: usize,
    pub dim_c2: usize,
    pub dim_z1: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub z1_basis: Vec<Vec<Scalar>>,
    pub z2_basis: Vec<Vec<Scalar>>,
    pub b2_basis: Vec<Vec<Scalar>>,
    pub h2_representatives: Vec<Vec<Scalar>>,
}

/// Kernels, coboundaries and canonical representatives for `H²`.
///
/// `Z¹ = ker d¹`, `Z² = ker d²`, `B² = im d¹`; the `H²` representatives are
/// the RREF of the `Z²` basis reduced modulo the `B²` rows, so two runs on
/// equal input produce identical bases.
pub fn cohomology(g: &Leibniz2Algebra, rep: &Representation) -> Result<CohomologySummary> {
    let d1 = d1_matrix(g, rep)?;
    let d2 = d2_matrix(g, rep)?;
    let z1_basis = d1.kernel_basis();
    let z2_basis = d2.kernel_basis();
    let (bt, _) = d1.transpose().rref();
    let b2_basis = nonzero_rows(&bt);
    let reduced: Vec<Vec<Scalar>> =
        z2_basis.iter().map(|v| reduce_mod_rref_rows(&b2_basis, v)).collect();
    let h2_representatives = if reduced.is_empty() {
        Vec::new()
    } else {
        let stack = Mat::from_rows(reduced)?;
        let (r, _) = stack.rref();
        nonzero_rows(&r)
    };
    Ok(CohomologySummary {
        dim_c1: d1.cols(),
        dim_c2: d1.rows(),
        dim_z1: z1_basis.len(),
        dim_z2: z2_basis.len(),
        dim_b2: b2_basis.len(),
        dim_h2: h2_representatives.len(),
        z1_basis,
        z2_basis,
        b2_basis,
        h2_representatives,
    })
}

/// Witness `λ` with `d¹λ = a − b`, if the two cocycles are cohomologous.
pub fn class_difference_is_coboundary(
    g: &Leibniz2Algebra,
    rep: &Representation,
    a: &Cochain2,
    b: &Cochain2,
) -> Result<Option<Cochain1>> {
    let diff = vec_sub(&a.flatten(), &b.flatten());
    let d1 = d1_matrix(g, rep)?;
    match d1.solve(&diff) {
        Some(sol) => Ok(Some(Cochain1::unflatten(g, &rep.v, &sol)?)),
        None => Ok(None),
    }
}

/// A bimodule over the degree-0 bracket of `g`: a space `M` with commuting
/// left and right actions satisfying the three mixed bracket laws.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bimodule {
    pub m_dim: usize,
    /// `x · m`, inputs `(g₀, M)`.
    pub left: MultiMap,
    /// `m · x`, inputs `(M, g₀)`.
    pub right: MultiMap,
}

impl Bimodule {
    pub fn validate(&self, g: &Leibniz2Algebra) -> Result<()> {
        let (d0, m) = (g.dim0, self.m_dim);
        if self.left.input_dims() != [d0, m] || self.left.out_dim() != m {
            return Err(Error::InvalidBimodule("left action shape".into()));
        }
        if self.right.input_dims() != [m, d0] || self.right.out_dim() != m {
            return Err(Error::InvalidBimodule("right action shape".into()));
        }
        for i in 0..d0 {
            for j in 0..d0 {
                let (ei, ej) = (basis_vec(d0, i), basis_vec(d0, j));
                let bij = g.b00.eval_basis(&[i, j]);
                for u in 0..m {
                    let em = basis_vec(m, u);
                    // left([x,y], m) = left(x, left(y, m)) - left(y, left(x, m))
                    let mut r = self.left.eval(&[&bij, &em])?;
                    r = vec_sub(&r, &self.left.eval(&[&ei, &self.left.eval(&[&ej, &em])?])?);
                    r = vec_add(&r, &self.left.eval(&[&ej, &self.left.eval(&[&ei, &em])?])?);
                    if !r.iter().all(Zero::is_zero) {
                        return Err(Error::InvalidBimodule(format!(
                            "LLM law fails at ({i},{j},{u})"
                        )));
                    }
                    // right(m, [x,y]) = right(right(m, x), y) + left(x, right(m, y))
                    let mut r = self.right.eval(&[&em, &bij])?;
                    r = vec_sub(&r, &self.right.eval(&[&self.right.eval(&[&em, &ei])?, &ej])?);
                    r = vec_sub(&r, &self.left.eval(&[&ei, &self.right.eval(&[&em, &ej])?])?);
                    if !r.iter().all(Zero::is_zero) {
                        return Err(Error::InvalidBimodule(format!(
                            "LML law fails at ({u},{i},{j})"
                        )));
                    }
                    // right(m, [x,y]) = left(x, right(m, y)) - right(left(x, m), y)
                    let mut r = self.right.eval(&[&em, &bij])?;
                    r = vec_sub(&r, &self.left.eval(&[&ei, &self.right.eval(&[&em, &ej])?])?);
                    r = vec_add(&r, &self.right.eval(&[&self.left.eval(&[&ei, &em])?, &ej])?);
                    if !r.iter().all(Zero::is_zero) {
                        return Err(Error::InvalidBimodule(format!(
                            "MLL law fails at ({u},{i},{j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One step of the classical one-space coboundary on `n`-cochains
/// `g₀^⊗n → M`.
pub fn dl_apply(g: &Leibniz2Algebra, bim: &Bimodule, f: &MultiMap) -> Result<MultiMap> {
    bim.validate(g)?;
    let d0 = g.dim0;
    let n = f.arity();
    if f.input_dims().iter().any(|&d| d != d0) || f.out_dim() != bim.m_dim {
        return Err(Error::ShapeMismatch("cochain must map powers of g₀ to M".into()));
    }
    let mut out = MultiMap::zeros(vec![d0; n + 1], bim.m_dim);
    for idx in multi_indices(&vec![d0; n + 1]) {
        let mut val = vec![Scalar::zero(); bim.m_dim];
        // Σ_{i=1}^{n} (−1)^{i+1} x_i · f(…, x̂_i, …)
        for i in 0..n {
            let mut rest = idx.clone();
            rest.remove(i);
            let inner = f.eval_basis(&rest);
            let term = bim.left.eval(&[&basis_vec(d0, idx[i]), &inner])?;
            if i % 2 == 0 {
                val = vec_add(&val, &term);
            } else {
                val = vec_sub(&val, &term);
            }
        }
        // (−1)^{n+1} f(x_1, …, x_n) · x_{n+1}
        let inner = f.eval_basis(&idx[..n]);
        let term = bim.right.eval(&[&inner, &basis_vec(d0, idx[n])])?;
        if (n + 1) % 2 == 0 {
            val = vec_add(&val, &term);
        } else {
            val = vec_sub(&val, &term);
        }
        // Σ_{i<j} (−1)^i f(…, x̂_i, …, [x_i, x_j], …): drop x_i, substitute
        // the bracket where x_j stood
        for i in 0..n + 1 {
            for j in i + 1..n + 1 {
                let bracket = g.b00.eval_basis(&[idx[i], idx[j]]);
                let mut arg_store: Vec<Vec<Scalar>> = Vec::with_capacity(n);
                for (k, &b) in idx.iter().enumerate() {
                    if k == i {
                        continue;
                    }
                    if k == j {
                        arg_store.push(bracket.clone());
                    } else {
                        arg_store.push(basis_vec(d0, b));
                    }
                }
                let args: Vec<&[Scalar]> = arg_store.iter().map(Vec::as_slice).collect();
                let term = f.eval(&args)?;
                if (i + 1) % 2 == 0 {
                    val = vec_add(&val, &term);
                } else {
                    val = vec_sub(&val, &term);
                }
            }
        }
        set_vec(&mut out, &idx, &val);
    }
    Ok(out)
}

/// Matrix of the classical coboundary `C^n(g₀; M) → C^{n+1}(g₀; M)` in the
/// output-major flattening.
pub fn dl_matrix(g: &Leibniz2Algebra, bim: &Bimodule, n: usize) -> Result<Mat> {
    g.validate()?;
    bim.validate(g)?;
    let src = bim.m_dim * g.dim0.pow(n as u32);
    let dst = bim.m_dim * g.dim0.pow(n as u32 + 1);
    let mut cols = Vec::with_capacity(src);
    for k in 0..src {
        let f = MultiMap::new(vec![g.dim0; n], bim.m_dim, basis_vec(src, k))?;
        cols.push(dl_apply(g, bim, &f)?.flatten());
    }
    if cols.is_empty() {
        return Ok(Mat::zeros(dst, 0));
    }
    Mat::from_cols(cols)
}
