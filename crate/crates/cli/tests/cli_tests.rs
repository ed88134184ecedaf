//! End-to-end checks of the command line tool against the shipped corpus:
//! report contents, output routing, text rendering, and error channels.

mod common;

use common::{binary, corpus_path};
use serde_json::{json, Value};
use std::process::Command;

fn run(cmd: &str, file: &str, extra: &[&str]) -> (String, String, i32) {
    let out = Command::new(binary())
        .arg(cmd)
        .arg("--input")
        .arg(corpus_path(file))
        .args(extra)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

fn run_json(cmd: &str, file: &str) -> (Value, i32) {
    let (stdout, stderr, code) = run(cmd, file, &[]);
    assert!(stderr.is_empty(), "unexpected stderr: {stderr}");
    (serde_json::from_str(&stdout).expect("report is JSON"), code)
}

#[test]
fn clean_structures_verify_with_an_empty_violation_list() {
    let (v, code) = run_json("verify", "verify_fix_b.json");
    assert_eq!(code, 0);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["ok"], json!(true));
    assert_eq!(v["violations"], json!([]));
}

#[test]
fn broken_structures_verify_with_the_law_and_its_witness() {
    let (v, code) = run_json("verify", "verify_fix_b_bad.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "violations");
    assert_eq!(v["violations"][0]["law"], "(d)");
    assert_eq!(v["violations"][0]["at"], json!([0, 0, 0]));
    assert_eq!(v["violations"][0]["residual"], json!(["-1", "0"]));
}

#[test]
fn abelian_cohomology_dimensions_match_the_counting_argument() {
    let (v, code) = run_json("cohomology", "cohomology_fix_a_trivial.json");
    assert_eq!(code, 0);
    assert_eq!(
        v["dims"],
        json!({"B2": 0, "C1": 3, "C2": 5, "H2": 5, "Z1": 3, "Z2": 5})
    );
    assert_eq!(v["h2_representatives"].as_array().unwrap().len(), 5);
    assert_eq!(v["z2_basis"].as_array().unwrap().len(), 5);
}

#[test]
fn adjoint_cohomology_dimensions_match_the_frozen_computation() {
    let (v, code) = run_json("cohomology", "cohomology_fix_b_adjoint.json");
    assert_eq!(code, 0);
    assert_eq!(
        v["dims"],
        json!({"B2": 2, "C1": 4, "C2": 8, "H2": 1, "Z1": 2, "Z2": 3})
    );
}

#[test]
fn extraction_recovers_the_twisting_cocycle() {
    let (v, code) = run_json("extract", "extract_psi_extension.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["cocycle"]["psi"], json!([["1"]]));
    assert_eq!(v["cocycle"]["omega"], json!([[["0"]]]));
    assert!(v["splitting"]["s0"].is_array());
}

#[test]
fn extension_building_rejects_non_cocycles_as_a_result_not_a_crash() {
    let (v, code) = run_json("extend", "extend_fix_c_noncocycle.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
    let msg = v["message"].as_str().unwrap();
    assert!(msg.contains("coc01"), "message names the failing law: {msg}");
}

#[test]
fn coboundary_shifts_produce_equivalent_extensions_with_a_witness() {
    let (v, code) = run_json("equiv", "equiv_shifted_pair.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "equivalent");
    assert_eq!(v["witness"]["f0"], json!([["1", "0"], ["-2", "1"]]));
}

#[test]
fn distinct_classes_produce_inequivalent_extensions() {
    let (v, code) = run_json("equiv", "equiv_distinct_pair.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "inequivalent");
    assert!(v.get("witness").is_none());
}

#[test]
fn the_matched_pair_lifts_to_the_frozen_morphism() {
    let (v, code) = run_json("induce-aut", "induce_aut_matched.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "inducible");
    assert_eq!(v["obstruction_class"], json!(["0", "0", "0", "0", "0"]));
    assert_eq!(v["induced"]["f0"], json!([["1", "0"], ["0", "2"]]));
    assert_eq!(v["induced"]["f1"], json!([["2", "0"], ["0", "2"]]));
}

#[test]
fn the_blocked_pair_reports_its_obstruction_class() {
    let (v, code) = run_json("induce-aut", "induce_aut_blocked.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "not_inducible");
    assert_eq!(v["compatible"], json!(true));
    assert_eq!(v["obstruction_class"], json!(["1", "0", "0", "0", "0"]));
    assert!(v.get("induced").is_none());
}

#[test]
fn obstruction_classes_decide_the_exit_code() {
    let (v, code) = run_json("wells-aut", "wells_aut_nonzero.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "nonzero_class");
    assert_eq!(v["class"], json!(["1", "0", "0", "0", "0"]));

    let (v, code) = run_json("wells-der", "wells_der_zero.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "zero_class");
    assert_eq!(v["class"], json!(["0", "0", "0", "0", "0"]));
}

#[test]
fn crossed_module_lifts_report_the_frozen_witness() {
    let (v, code) = run_json("xmod-induce-aut", "xmod_induce_aut_scaling.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "inducible");
    assert_eq!(v["witness"]["phi0"], json!([["0", "1"]]));

    let (v, code) = run_json("xmod-induce-der", "xmod_induce_der_scaling.json");
    assert_eq!(code, 0);
    assert_eq!(v["witness"]["phi0"], json!([["0", "-3"]]));

    let (v, code) = run_json("xmod-wells-aut", "xmod_wells_aut_scaling.json");
    assert_eq!(code, 0);
    assert_eq!(v["status"], "zero_class");
}

#[test]
fn incompatible_actions_name_the_crossed_module_system() {
    let (v, code) = run_json("xmod-induce-aut", "xmod_induce_aut_incompatible.json");
    assert_eq!(code, 1);
    assert_eq!(v["status"], "incompatible");
    assert_eq!(v["compatible"], json!(false));
    assert_eq!(v["violations"][0]["law"], "CRO5");
}

#[test]
fn schema_errors_go_to_stderr_with_json_paths() {
    let (stdout, stderr, code) = run("verify", "bad_shape.json", &[]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty(), "no report on schema failure");
    assert!(stderr.contains("$.algebra.d"), "path names the bad field: {stderr}");

    let (stdout, stderr, code) = run("verify", "unknown_field.json", &[]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("$.comment: unknown field"), "stray keys are fatal: {stderr}");
}

#[test]
fn blocks_not_used_by_the_command_are_rejected() {
    let (_, stderr, code) = run("cohomology", "extend_fix_a_psi.json", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("$.cocycle: block not used"), "{stderr}");
}

#[test]
fn strict_pair_blocks_reject_a_nonzero_homotopy_component() {
    use leibniz2_cli::schema::{parse_document, Req, Requirements};

    let g = leibniz2::fixtures::fix_c();
    let xm = leibniz2::strict_to_xmod(&g).unwrap();
    let rep = leibniz2::fixtures::trivial_rep(&g);
    let c = leibniz2::Cochain2::zero(&g, &rep.v);
    let mut doc = common::document(vec![
        ("crossed_module", common::xm_value(&xm)),
        ("representation", common::rep_value(&rep)),
        ("cocycle", common::cocycle_value(&c)),
        (
            "pair",
            json!({
                "beta0": [["1"]],
                "beta1": [["1"]],
                "alpha0": [["1"]],
                "alpha1": [["1"]],
                "alpha2": [[["7"]]],
            }),
        ),
    ]);
    let mut req = Requirements::none();
    req.crossed_module = Req::Required;
    req.representation = Req::Required;
    req.cocycle = Req::Required;
    req.pair = Req::Required;
    req.pair_allows_alpha2 = false;

    let errs = parse_document(&serde_json::to_string(&doc).unwrap(), &req)
        .err()
        .expect("nonzero alpha2 must be rejected for strict pairs");
    assert!(errs.iter().any(|e| e.starts_with("$.pair.alpha2")), "{errs:?}");

    // the zero tensor is fine, spelled out or omitted
    doc["pair"]["alpha2"] = json!([[["0"]]]);
    assert!(parse_document(&serde_json::to_string(&doc).unwrap(), &req).is_ok());
}

#[test]
fn reports_can_be_written_to_a_file() {
    let (stdout, _, _) = run("verify", "verify_fix_c.json", &[]);
    let target = std::env::temp_dir().join(format!("leibniz2-report-{}.json", std::process::id()));
    let path = target.to_str().unwrap().to_owned();
    let (piped, stderr, code) = run("verify", "verify_fix_c.json", &["--output", &path]);
    assert_eq!(code, 0);
    assert!(piped.is_empty(), "nothing on stdout when --output is given");
    assert!(stderr.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    std::fs::remove_file(&target).ok();
    assert_eq!(written, stdout, "file and stdout reports are byte-identical");
}

#[test]
fn text_reports_are_stable_and_start_with_the_command() {
    let (a, _, code) = run("verify", "verify_fix_b.json", &["--format", "text"]);
    assert_eq!(code, 0);
    let (b, _, _) = run("verify", "verify_fix_b.json", &["--format", "text"]);
    assert_eq!(a, b);
    assert!(a.starts_with("command: verify\n"), "{a}");
    assert!(a.contains("status: ok\n"));

    let (t, _, code) = run("induce-aut", "induce_aut_blocked.json", &["--format", "text"]);
    assert_eq!(code, 1);
    assert!(t.contains("status: not_inducible"));
    assert!(t.contains("obstruction_class: [1, 0, 0, 0, 0]"), "{t}");
}

#[test]
fn extracted_blocks_feed_back_into_other_commands() {
    // the extension block emitted by `extend` is schema-valid input for
    // `extract`, and the recovered cocycle is the one we started from
    let (built, code) = run_json("extend", "extend_fix_a_psi.json");
    assert_eq!(code, 0);
    let roundtrip = json!({
        "schema_version": "1",
        "extension": built["extension"],
    });
    let dir = std::env::temp_dir();
    let path = dir.join(format!("leibniz2-roundtrip-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string_pretty(&roundtrip).unwrap()).unwrap();
    let out = Command::new(binary())
        .args(["extract", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(corpus_path("extend_fix_a_psi.json")).unwrap())
            .unwrap();
    assert_eq!(v["cocycle"], original["cocycle"]);
}
