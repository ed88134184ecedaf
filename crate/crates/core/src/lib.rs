//! Exact-arithmetic Leibniz 2-algebras.
//!
//! A Leibniz 2-algebra is a two-term complex `g1 -> g0` equipped with graded
//! brackets and a trilinear homotopy `l3` measuring the failure of the left
//! Leibniz identity, subject to eight coherence axioms (a)-(h). This crate
//! verifies those axioms over exact rationals, computes the low-degree
//! cohomology attached to a representation, classifies abelian extensions by
//! second cohomology classes, and decides when a pair of automorphisms or
//! derivations of fiber and base lifts to the total algebra of an extension
//! (the inducibility problem), including the crossed-module special case.
//!
//! Everything is computed over ℚ with arbitrary precision; all reductions,
//! kernels and solutions are canonical, so equal inputs produce bit-identical
//! outputs.
//!
//! ```
//! use leibniz2::{fixtures, verify_algebra};
//!
//! let g = fixtures::fix_b();
//! assert!(verify_algebra(&g).unwrap().is_ok());
//! ```

pub mod algebra;
pub mod cochain;
pub mod complex;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod mat;
pub mod multimap;
pub mod rep;
pub mod scalar;
pub mod verify;
pub mod wells;
pub mod xmod;

pub use algebra::{
    compose_hom, identity_hom, invert_hom, is_strict, verify_algebra, verify_derivation,
    verify_hom, Derivation2, Hom2, Leibniz2Algebra,
};
pub use cochain::{
    class_difference_is_coboundary, cohomology, d1_apply, d1_matrix, d2_apply, d2_matrix,
    dl_matrix, is_cocycle2, Bimodule, Cochain1, Cochain2, Cochain3, CohomologySummary,
    Cocycle2Report,
};
pub use complex::{validate_complex, GradedMap, TwoTermComplex};
pub use error::{Error, Result};
pub use ext::{
    build_extension, extensions_equivalent, extract_cocycle, find_splitting, induced_rep,
    Extension, Splitting,
};
pub use mat::{in_span, Mat};
pub use multimap::MultiMap;
pub use rep::{adjoint_rep, endv_bracket, endv_delta, verify_representation, EndV, Representation};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use verify::{Verification, Violation};
pub use wells::{
    aut_compatible, aut_induce, d_lambda, der_compatible, der_induce, exactness_report, f_lambda,
    project_aut, project_der, wells_aut, wells_der, AutPair, DerPair, ExactnessReport,
    ExactnessSamples, WellsReport,
};
pub use xmod::{
    strict_to_xmod, verify_xmod, xmod_aut_induce, xmod_der_induce, xmod_semidirect,
    xmod_to_strict, xmod_wells_aut, xmod_wells_der, CrossedModule, XModPair, XModRep,
};
