//! Acceptance suite, interface part: determinism and exit-code discipline of
//! the command line tool over the entire shipped corpus.

mod common;

use common::{binary, corpus_path, CORPUS};
use std::process::Command;

const COMMANDS: [&str; 14] = [
    "verify",
    "cohomology",
    "extend",
    "extract",
    "equiv",
    "induce-aut",
    "induce-der",
    "wells-aut",
    "wells-der",
    "xmod-verify",
    "xmod-induce-aut",
    "xmod-induce-der",
    "xmod-wells-aut",
    "xmod-wells-der",
];

#[test]
fn acceptance_11_reports_are_deterministic_with_disciplined_exit_codes() {
    // every documented command is exercised by at least one corpus file
    for cmd in COMMANDS {
        assert!(
            CORPUS.iter().any(|(_, c, _)| *c == cmd),
            "corpus misses command {cmd}"
        );
    }

    for (file, cmd, want) in CORPUS {
        let runs: Vec<_> = (0..2)
            .map(|_| {
                Command::new(binary())
                    .arg(cmd)
                    .arg("--input")
                    .arg(corpus_path(file))
                    .output()
                    .expect("binary runs")
            })
            .collect();
        for (k, out) in runs.iter().enumerate() {
            assert_eq!(
                out.status.code(),
                Some(*want),
                "{file}: run {k} exit code"
            );
        }
        assert_eq!(runs[0].stdout, runs[1].stdout, "{file}: stdout not byte-identical");
        assert_eq!(runs[0].stderr, runs[1].stderr, "{file}: stderr not byte-identical");
        if *want == 2 {
            assert!(runs[0].stdout.is_empty(), "{file}: rejected input must not get a report");
            assert!(!runs[0].stderr.is_empty(), "{file}: rejected input must be explained");
        } else {
            assert!(!runs[0].stdout.is_empty(), "{file}: report expected on stdout");
            assert!(runs[0].stderr.is_empty(), "{file}: no diagnostics on success paths");
        }
    }

    // the human-readable format is deterministic too
    for (file, cmd) in [
        ("verify_fix_b.json", "verify"),
        ("cohomology_fix_b_adjoint.json", "cohomology"),
        ("induce_aut_blocked.json", "induce-aut"),
    ] {
        let two: Vec<_> = (0..2)
            .map(|_| {
                Command::new(binary())
                    .arg(cmd)
                    .args(["--format", "text", "--input"])
                    .arg(corpus_path(file))
                    .output()
                    .expect("binary runs")
            })
            .collect();
        assert_eq!(two[0].stdout, two[1].stdout, "{file}: text output not byte-identical");
    }

    println!(
        "acceptance 11 (deterministic byte-identical reports, exit discipline 0/1/2 across {} corpus documents): PASS",
        CORPUS.len()
    );
}
