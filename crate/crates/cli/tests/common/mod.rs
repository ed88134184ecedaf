//! Shared corpus inventory and input-document builders for the integration
//! tests. The builders emit exactly the block shapes the schema accepts, so
//! regenerated corpus files always round trip.

#![allow(dead_code)]

use std::path::PathBuf;

use leibniz2::{Cochain2, CrossedModule, Extension, Mat, Representation};
use leibniz2_cli::report::{
    algebra_value, cochain2_value, complex_value, graded_value, mat_value, multimap_value,
};
use serde_json::{json, Map, Value};

/// Every shipped document with its command and expected exit code.
pub const CORPUS: &[(&str, &str, i32)] = &[
    ("verify_fix_a.json", "verify", 0),
    ("verify_fix_b.json", "verify", 0),
    ("verify_fix_c.json", "verify", 0),
    ("verify_fix_b_bad.json", "verify", 1),
    ("bad_shape.json", "verify", 2),
    ("unknown_field.json", "verify", 2),
    ("cohomology_fix_a_trivial.json", "cohomology", 0),
    ("cohomology_fix_b_adjoint.json", "cohomology", 0),
    ("extend_fix_a_psi.json", "extend", 0),
    ("extend_fix_c_noncocycle.json", "extend", 1),
    ("extract_psi_extension.json", "extract", 0),
    ("equiv_shifted_pair.json", "equiv", 0),
    ("equiv_distinct_pair.json", "equiv", 1),
    ("induce_aut_blocked.json", "induce-aut", 1),
    ("induce_aut_matched.json", "induce-aut", 0),
    ("induce_der_matched.json", "induce-der", 0),
    ("wells_aut_nonzero.json", "wells-aut", 1),
    ("wells_der_zero.json", "wells-der", 0),
    ("xmod_verify_fix_b.json", "xmod-verify", 0),
    ("xmod_verify_broken.json", "xmod-verify", 1),
    ("xmod_induce_aut_scaling.json", "xmod-induce-aut", 0),
    ("xmod_induce_der_scaling.json", "xmod-induce-der", 0),
    ("xmod_wells_aut_scaling.json", "xmod-wells-aut", 0),
    ("xmod_wells_der_scaling.json", "xmod-wells-der", 0),
    ("xmod_induce_aut_incompatible.json", "xmod-induce-aut", 1),
];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(name)
}

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_leibniz2")
}

pub fn rep_value(rep: &Representation) -> Value {
    json!({
        "V": complex_value(&rep.v),
        "l0_0": multimap_value(&rep.l0_0),
        "l0_1": multimap_value(&rep.l0_1),
        "r0_0": multimap_value(&rep.r0_0),
        "r0_1": multimap_value(&rep.r0_1),
        "l1": multimap_value(&rep.l1),
        "r1": multimap_value(&rep.r1),
        "l2": multimap_value(&rep.l2),
        "m2": multimap_value(&rep.m2),
        "r2": multimap_value(&rep.r2),
    })
}

pub fn pair_value(beta0: &Mat, beta1: &Mat, alpha0: &Mat, alpha1: &Mat) -> Value {
    json!({
        "beta0": mat_value(beta0),
        "beta1": mat_value(beta1),
        "alpha0": mat_value(alpha0),
        "alpha1": mat_value(alpha1),
    })
}

pub fn xm_value(xm: &CrossedModule) -> Value {
    json!({
        "p0_bracket": multimap_value(&xm.p0_bracket),
        "p1_dim": xm.p1_dim,
        "left_action": multimap_value(&xm.left),
        "right_action": multimap_value(&xm.right),
        "f": mat_value(&xm.f),
    })
}

pub fn ext_value(e: &Extension) -> Value {
    json!({
        "hat": algebra_value(&e.hat),
        "base": algebra_value(&e.base),
        "fiber": complex_value(&e.fiber),
        "i": graded_value(&e.i),
        "p": graded_value(&e.p),
    })
}

/// Assemble a document from named blocks, in schema order, with the version
/// stamp.
pub fn document(blocks: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!("1"));
    for (k, v) in blocks {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

pub fn cocycle_value(c: &Cochain2) -> Value {
    cochain2_value(c)
}
