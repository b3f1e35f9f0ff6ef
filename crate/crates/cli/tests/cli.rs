//! End-to-end tests of the binary: exact output contracts, exit codes,
//! JSON round-tripping, and input error handling.

use std::io::Write;
use std::process::{Command, Output};
use std::time::Instant;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualkummer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_paper_passes_with_one_flag() {
    let start = Instant::now();
    let out = run(&["verify-paper"]);
    assert!(out.status.success(), "exit code {:?}", out.status.code());
    assert!(
        start.elapsed().as_secs() < 10,
        "verify-paper must finish within 10 seconds"
    );
    let text = stdout(&out);
    assert!(!text.contains("FAIL "), "unexpected failure:\n{text}");
    let flagged = text.lines().filter(|l| l.starts_with("FLAGGED")).count();
    assert_eq!(flagged, 1, "exactly one flagged item:\n{text}");
    assert!(text.contains("expected 18 | computed 36"));
}

/// Mirror of the emitted schema, declared independently so the test pins
/// the wire format rather than reusing the binary's types.
#[derive(serde::Serialize, serde::Deserialize)]
struct WireReport {
    #[serde(rename = "schemaVersion")]
    schema_version: u32,
    checks: Vec<WireCheck>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct WireCheck {
    name: String,
    #[serde(rename = "paperRef")]
    paper_ref: String,
    expected: String,
    computed: String,
    status: String,
}

#[test]
fn verify_paper_json_round_trips() {
    let out = run(&["verify-paper", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: WireReport = serde_json::from_str(&text).expect("valid json");
    assert_eq!(report.schema_version, 1);
    assert!(report.checks.len() > 50);
    let statuses: Vec<&str> = report.checks.iter().map(|c| c.status.as_str()).collect();
    assert!(statuses.iter().all(|s| ["PASS", "FAIL", "FLAGGED"].contains(s)));
    assert_eq!(statuses.iter().filter(|s| **s == "FLAGGED").count(), 1);
    assert_eq!(statuses.iter().filter(|s| **s == "FAIL").count(), 0);
    assert!(report.checks.iter().all(|c| !c.paper_ref.is_empty()));
    // parsing the emitted report and re-serializing is byte-identical
    let reserialized = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(text.trim_end(), reserialized);
}

#[test]
fn verify_paper_only_family() {
    let out = run(&["verify-paper", "--only", "galois"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("galois n+1=2"));
    assert!(text.contains("galois n+1=12"));
    assert!(!text.contains("polarization-type"));
}

#[test]
fn verify_paper_unknown_family_is_usage_error() {
    let out = run(&["verify-paper", "--only", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn snf_inline_literal() {
    let out = run(&["snf", "--matrix", "[[2,4],[6,8]]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[2 0]"), "{text}");
    assert!(text.contains("[0 4]"), "{text}");
}

#[test]
fn snf_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# a 2x2 example\n6 0\n0 4").unwrap();
    let out = run(&["snf", "--matrix", file.path().to_str().unwrap(), "--full"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[ 2  0]"), "{text}");
    assert!(text.contains("[ 0 12]"), "{text}");
    assert!(text.contains("U ="));
    assert!(text.contains("V ="));
}

#[test]
fn polarization_type_of_canonical_form() {
    let out = run(&[
        "polarization-type",
        "--form",
        "[[0,0,1,0],[0,0,0,3],[-1,0,0,0],[0,-3,0,0]]",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1,3)");
}

#[test]
fn kernel_of_dual_polarization() {
    let out = run(&["kernel", "--dual", "--d1", "1", "--d2", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "Z/3 ⊕ Z/3");
}

#[test]
fn kernel_of_matrix_and_mod() {
    let out = run(&["kernel", "--matrix", "[[3,0,0,0],[0,3,0,0],[0,0,3,0],[0,0,0,3]]"]);
    assert_eq!(stdout(&out).trim(), "Z/3 ⊕ Z/3 ⊕ Z/3 ⊕ Z/3");
    let out = run(&["kernel", "--matrix", "[[2,0],[-1,3]]", "--modulus", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "Z/6");
}

#[test]
fn galois_and_factorization() {
    let out = run(&["galois", "--n", "2", "--d1", "1", "--d2", "3", "--s", "1"]);
    assert_eq!(stdout(&out).trim(), "Z/3 ⊕ Z/3 ⊕ Z/3 ⊕ Z/3");
    let out = run(&["factorization", "--n", "3", "--d1", "2", "--d2", "2", "--s", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("="));
}

#[test]
fn fujiki_named_vectors() {
    let out = run(&["fujiki", "--lattice", "kum2", "--vectors", "h,h,x,x"]);
    assert!(out.status.success());
    // c · n! · q(h,x)^n = 3 · 2 · 1 = 6
    assert_eq!(stdout(&out).trim(), "6");
    // all equal: c · 3 · q(v)^2 with q(e1+f1) = 2 → 36
    let out = run(&[
        "fujiki",
        "--lattice",
        "kum2",
        "--vectors",
        "v,v,v,v",
        "--define",
        "v=1,1,0,0,0,0,0",
    ]);
    assert_eq!(stdout(&out).trim(), "36");
}

#[test]
fn cup_matrix_matches_dual() {
    let out = run(&["cup-l", "--d1", "2", "--d2", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("equals the dual polarization matrix"));
}

#[test]
fn dual_kummer_report_flags_discrepancy() {
    let out = run(&["dual-kummer-report"]);
    assert!(out.status.success(), "flagged items must not fail the run");
    let text = stdout(&out);
    assert!(text.contains("FLAGGED"));
    assert!(text.contains("expected 18 | computed 36"));
    assert!(text.contains("orbifold-euler"));

    let out = run(&["dual-kummer-report", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["schemaVersion"], 1);
}

#[test]
fn orbits_reads_ledger_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // Z/2 acting on 4 points by a double swap; fixed sets empty
    writeln!(
        file,
        "group 2\nset 4\ngen 0: 1 0 3 2\nfix 1: explicit\n"
    )
    .unwrap();
    let out = run(&["orbits", "--ledger", file.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("element [1]: 0 fixed points"));
    assert!(text.contains("orbits of the singular set: 0"));
}

#[test]
fn llv_weight_profile_table() {
    let out = run(&["llv", "--weight", "B4:1/2,1/2,1/2,1/2"]);
    assert!(stdout(&out).contains("= 16"));
    let out = run(&["llv", "--profile", "--b2", "7"]);
    let text = stdout(&out);
    assert!(text.contains("H^4: 28"));
    assert!(text.contains("total: 44"));
    let out = run(&["llv", "--table", "kum2"]);
    let text = stdout(&out);
    assert!(text.contains("betti: (1,0,7,8,108,8,7,0,1)"));
    assert!(text.contains("euler: 108"));
}

#[test]
fn malformed_inputs_exit_2_without_panic() {
    let cases: &[&[&str]] = &[
        &["snf", "--matrix", "[[1,2],[3]]"],
        &["snf", "--matrix", "/no/such/file"],
        &["polarization-type", "--form", "[[1,0],[0,1]]"], // not alternating
        &["kernel", "--dual", "--d1", "3", "--d2", "1"],   // not a chain
        &["kernel", "--matrix", "[[0,0],[0,0]]"],          // not an isogeny
        &["galois", "--n", "2", "--d1", "1", "--d2", "4", "--s", "1"], // wrong degree
        &["fujiki", "--lattice", "nope", "--vectors", "h,h"],
        &["fujiki", "--lattice", "kum2", "--vectors", "h,h,x"], // arity
        &["llv", "--weight", "B4:1,2,0,0"],                // not dominant
        &["llv", "--weight", "E8:1"],
        &["llv"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(
            !String::from_utf8_lossy(&out.stderr).contains("panicked"),
            "panicked on {args:?}"
        );
    }
}
