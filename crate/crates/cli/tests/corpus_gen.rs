//! Corpus regeneration. Run on demand with
//!
//! ```text
//! cargo test -p leibniz2-cli regenerate_corpus -- --ignored
//! ```
//!
//! and commit the result. The shipped documents are fixed test data; the
//! other integration tests read them from disk and never regenerate them, so
//! accidental changes to the builders show up as corpus diffs instead of
//! silently shifting expectations.

mod common;

use common::{
    cocycle_value, corpus_dir, document, ext_value, pair_value, rep_value, xm_value, CORPUS,
};
use leibniz2::fixtures::{fix_a, fix_b, fix_b_bad, fix_c, psi_extension, trivial_rep, xmod_case};
use leibniz2::{
    adjoint_rep, build_extension, d1_apply, strict_to_xmod, Cochain1, Cochain2, Mat, MultiMap,
};
use leibniz2_cli::report::algebra_value;
use serde_json::{json, Value};

fn int(n: i64) -> leibniz2::Scalar {
    leibniz2::scalar::int(n)
}

fn write_doc(name: &str, doc: &Value) {
    let path = corpus_dir().join(name);
    let mut text = serde_json::to_string_pretty(doc).unwrap();
    text.push('\n');
    std::fs::write(&path, text).unwrap_or_else(|e| panic!("write {}: {e}", path.display()));
}

/// ψ-unit cocycle of a `(1, 1)` algebra over the one-line complex.
fn psi_unit(g: &leibniz2::Leibniz2Algebra, rep: &leibniz2::Representation) -> Cochain2 {
    let mut c = Cochain2::zero(g, &rep.v);
    c.psi.set(0, 0, int(1));
    c
}

#[test]
#[ignore = "writes the shipped corpus; run explicitly after builder changes"]
fn regenerate_corpus() {
    let dir = corpus_dir();
    std::fs::create_dir_all(&dir).unwrap();

    // structure verdicts
    write_doc("verify_fix_a.json", &document(vec![("algebra", algebra_value(&fix_a()))]));
    write_doc("verify_fix_b.json", &document(vec![("algebra", algebra_value(&fix_b()))]));
    write_doc("verify_fix_c.json", &document(vec![("algebra", algebra_value(&fix_c()))]));
    write_doc(
        "verify_fix_b_bad.json",
        &document(vec![("algebra", algebra_value(&fix_b_bad()))]),
    );

    // schema rejections: a differential with a missing row, and a stray key
    let mut bad = document(vec![("algebra", algebra_value(&fix_b()))]);
    bad["algebra"]["d"] = json!([[]]);
    write_doc("bad_shape.json", &bad);
    let mut stray = document(vec![("algebra", algebra_value(&fix_a()))]);
    stray["comment"] = json!("structure constants double-checked by hand");
    write_doc("unknown_field.json", &stray);

    // cohomology over the zero action and over the adjoint action
    let ga = fix_a();
    write_doc(
        "cohomology_fix_a_trivial.json",
        &document(vec![
            ("algebra", algebra_value(&ga)),
            ("representation", rep_value(&trivial_rep(&ga))),
        ]),
    );
    let gb = fix_b();
    write_doc(
        "cohomology_fix_b_adjoint.json",
        &document(vec![
            ("algebra", algebra_value(&gb)),
            ("representation", rep_value(&adjoint_rep(&gb).unwrap())),
        ]),
    );

    // extension building: one genuine cocycle, one rejected cochain
    let rep_a = trivial_rep(&ga);
    write_doc(
        "extend_fix_a_psi.json",
        &document(vec![
            ("algebra", algebra_value(&ga)),
            ("representation", rep_value(&rep_a)),
            ("cocycle", cocycle_value(&psi_unit(&ga, &rep_a))),
        ]),
    );
    let gc = fix_c();
    let rep_c = trivial_rep(&gc);
    let mut omega_unit = Cochain2::zero(&gc, &rep_c.v);
    omega_unit.omega.set(0, &[0, 0], int(1));
    write_doc(
        "extend_fix_c_noncocycle.json",
        &document(vec![
            ("algebra", algebra_value(&gc)),
            ("representation", rep_value(&rep_c)),
            ("cocycle", cocycle_value(&omega_unit)),
        ]),
    );

    // cocycle recovery through the canonical splitting
    write_doc(
        "extract_psi_extension.json",
        &document(vec![("extension", ext_value(&psi_extension()))]),
    );

    // equivalence: a coboundary shift is invisible, a class change is not
    let c_base = psi_unit(&gc, &rep_c);
    let mut lam = Cochain1::zero(&gc, &rep_c.v);
    lam.phi0.set(0, 0, int(2));
    lam.phi1.set(0, 0, int(-1));
    lam.chi.set(0, &[0, 0], int(3));
    let c_shift = c_base.add(&d1_apply(&gc, &rep_c, &lam).unwrap()).unwrap();
    let e_base = build_extension(&gc, &rep_c, &c_base).unwrap();
    let e_shift = build_extension(&gc, &rep_c, &c_shift).unwrap();
    write_doc(
        "equiv_shifted_pair.json",
        &document(vec![
            ("extension", ext_value(&e_base)),
            ("options", json!({ "extension_b": ext_value(&e_shift) })),
        ]),
    );
    let e_psi = psi_extension();
    let e_zero = build_extension(&ga, &rep_a, &Cochain2::zero(&ga, &rep_a.v)).unwrap();
    write_doc(
        "equiv_distinct_pair.json",
        &document(vec![
            ("extension", ext_value(&e_psi)),
            ("options", json!({ "extension_b": ext_value(&e_zero) })),
        ]),
    );

    // lifting through the twisted extension: scaling pairs (b, a0, a1) act
    // by b on both fiber degrees and by a0, a1 on the base degrees
    let scaling = |b: i64, a0: i64, a1: i64| {
        pair_value(
            &Mat::from_rows(vec![vec![int(b)]]).unwrap(),
            &Mat::from_rows(vec![vec![int(b)]]).unwrap(),
            &Mat::from_rows(vec![vec![int(a0)]]).unwrap(),
            &Mat::from_rows(vec![vec![int(a1)]]).unwrap(),
        )
    };
    write_doc(
        "induce_aut_blocked.json",
        &document(vec![("extension", ext_value(&e_psi)), ("pair", scaling(2, 1, 1))]),
    );
    write_doc(
        "induce_aut_matched.json",
        &document(vec![("extension", ext_value(&e_psi)), ("pair", scaling(2, 1, 2))]),
    );
    write_doc(
        "induce_der_matched.json",
        &document(vec![("extension", ext_value(&e_psi)), ("pair", scaling(1, 0, 1))]),
    );

    // the same dichotomy phrased as obstruction classes over the raw data
    let wells_doc = |pair: Value| {
        document(vec![
            ("algebra", algebra_value(&ga)),
            ("representation", rep_value(&rep_a)),
            ("cocycle", cocycle_value(&psi_unit(&ga, &rep_a))),
            ("pair", pair),
        ])
    };
    write_doc("wells_aut_nonzero.json", &wells_doc(scaling(2, 1, 1)));
    write_doc("wells_der_zero.json", &wells_doc(scaling(1, 0, 1)));

    // crossed modules: verdicts, strict lifts, and one incompatible action
    write_doc(
        "xmod_verify_fix_b.json",
        &document(vec![("crossed_module", xm_value(&strict_to_xmod(&gb).unwrap()))]),
    );
    write_doc(
        "xmod_verify_broken.json",
        &document(vec![("crossed_module", xm_value(&strict_to_xmod(&fix_b_bad()).unwrap()))]),
    );

    let (xm, xrep, omega) = xmod_case();
    let xrep_full = xrep.to_representation();
    let aut_pair = pair_value(
        &Mat::from_rows(vec![vec![int(3)]]).unwrap(),
        &Mat::identity(1),
        &Mat::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(4)]]).unwrap(),
        &Mat::identity(0),
    );
    let der_pair = pair_value(
        &Mat::from_rows(vec![vec![int(5)]]).unwrap(),
        &Mat::from_rows(vec![vec![int(5)]]).unwrap(),
        &Mat::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(2)]]).unwrap(),
        &Mat::identity(0),
    );
    let xdoc = |pair: &Value| {
        document(vec![
            ("representation", rep_value(&xrep_full)),
            ("cocycle", cocycle_value(&omega)),
            ("pair", pair.clone()),
            ("crossed_module", xm_value(&xm)),
        ])
    };
    write_doc("xmod_induce_aut_scaling.json", &xdoc(&aut_pair));
    write_doc("xmod_induce_der_scaling.json", &xdoc(&der_pair));
    write_doc("xmod_wells_aut_scaling.json", &xdoc(&aut_pair));
    write_doc("xmod_wells_der_scaling.json", &xdoc(&der_pair));

    // an action with a nonzero operator on the bracket image: conjugation
    // compatibility fails at CRO5
    let mut acting = xrep.clone();
    acting.l0_0 = MultiMap::zeros(vec![2, 1], 1);
    acting.l0_0.set(0, &[0, 0], int(1));
    let acting_full = acting.to_representation();
    write_doc(
        "xmod_induce_aut_incompatible.json",
        &document(vec![
            ("representation", rep_value(&acting_full)),
            ("cocycle", cocycle_value(&omega)),
            ("pair", aut_pair.clone()),
            ("crossed_module", xm_value(&xm)),
        ]),
    );

    // completeness: exactly the inventory, nothing extra on disk
    let mut expected: Vec<&str> = CORPUS.iter().map(|(n, _, _)| *n).collect();
    expected.sort_unstable();
    let mut found: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    found.sort_unstable();
    assert_eq!(found, expected, "corpus directory out of sync with the inventory");
}
