//! End-to-end tests of the command-line interface: subcommands, exit
//! codes, report shape, and schema-valid deterministic JSON.

use std::path::PathBuf;
use std::process::{Command, Output};

fn crgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crgeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

#[test]
fn verify_all_covers_six_groups_with_four_checks_each() {
    let out = crgeo(&["verify", "--all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = report["records"].as_array().unwrap();
    assert_eq!(records.len(), 24, "6 groups x 4 checks");
    for r in records {
        assert_eq!(r["status"], "pass", "{r}");
        assert_eq!(r["residual_terms"], 0);
    }
    let checks: Vec<&str> = records
        .iter()
        .take(4)
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(checks, vec!["closure", "inverse", "assoc", "identity"]);
}

#[test]
fn json_output_is_deterministic_and_schema_valid() {
    let a = stdout(&crgeo(&["verify", "--all", "--format", "json"]));
    let b = stdout(&crgeo(&["verify", "--all", "--format", "json"]));
    assert_eq!(a, b, "identical input must give byte-identical JSON");

    let schema_text = std::fs::read_to_string(
        [env!("CARGO_MANIFEST_DIR"), "schema", "report.schema.json"]
            .iter()
            .collect::<PathBuf>(),
    )
    .unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    for args in [
        vec!["verify", "--all"],
        vec!["lie", "--group", "IV1", "--show-basis"],
        vec!["derive", "--class", "II", "--diff-paper"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let text = stdout(&crgeo(&full));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(
            compiled.validate(&value).is_ok(),
            "schema violation for {args:?}"
        );
    }
}

#[test]
fn text_and_json_contain_identical_records() {
    let json = stdout(&crgeo(&["verify", "--group", "III1", "--format", "json"]));
    let text = stdout(&crgeo(&["verify", "--group", "III1"]));
    let report: serde_json::Value = serde_json::from_str(&json).unwrap();
    for r in report["records"].as_array().unwrap() {
        let line = format!(
            "{} :: {} (residual terms: {})",
            r["subject"].as_str().unwrap(),
            r["check"].as_str().unwrap(),
            r["residual_terms"]
        );
        assert!(text.contains(&line), "missing record line: {line}");
        for d in r["details"].as_array().unwrap() {
            assert!(text.contains(d.as_str().unwrap()));
        }
    }
}

#[test]
fn single_check_filter() {
    let out = crgeo(&[
        "verify", "--group", "I", "--check", "closure", "--format", "json",
    ]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = report["records"].as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["check"], "closure");
}

#[test]
fn lie_prints_the_dimension() {
    let out = crgeo(&["lie", "--group", "III2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension 18"));
}

#[test]
fn derive_diff_paper_reports_the_documented_erratum() {
    let out = crgeo(&[
        "derive",
        "--class",
        "II",
        "--diff-paper",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "errata do not fail the run");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let errata: Vec<&str> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "erratum")
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert!(errata.contains(&"diff-paper entry (4,4)"), "{errata:?}");

    // strict mode turns errata into a failing exit code
    let strict = crgeo(&["derive", "--class", "II", "--diff-paper", "--strict-errata"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn classify_subcommand_on_the_model_graphs() {
    let out = crgeo(&[
        "classify",
        "--manifold",
        &fixture("quadric.txt"),
        "--point",
        "0,0,0,0",
        "--point",
        "1/2,1/2,3,1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("verdict: ClassI").count(), 2);

    let flat = crgeo(&[
        "classify",
        "--manifold",
        &fixture("flat.txt"),
        "--point",
        "1,2,3,0",
    ]);
    assert!(stdout(&flat).contains("verdict: Degenerate"));

    let iv1 = crgeo(&[
        "classify",
        "--manifold",
        &fixture("sphere_c3.txt"),
        "--point",
        "0,0,0,0,0,0",
    ]);
    assert!(stdout(&iv1).contains("verdict: ClassIV1"));

    let iv2 = crgeo(&[
        "classify",
        "--manifold",
        &fixture("tube_c3.txt"),
        "--point",
        "0,0,0,0,0,0",
    ]);
    assert!(stdout(&iv2).contains("verdict: ClassIV2-candidate"));
}

#[test]
fn classify_rejects_points_off_the_graph() {
    let out = crgeo(&[
        "classify",
        "--manifold",
        &fixture("quadric.txt"),
        "--point",
        "1,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(1), "a failed check exits 1");
    assert!(stdout(&out).contains("does not satisfy"));
}

#[test]
fn multiplier_subcommand() {
    let out = crgeo(&[
        "multiplier",
        "--map",
        &fixture("dilation.txt"),
        "--source",
        &fixture("quadric.txt"),
        "--target",
        &fixture("quadric.txt"),
        "--point",
        "1,-1,2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("a = 2"), "{text}");
    assert!(text.contains("tangency residual = 0"));

    let ident = crgeo(&[
        "multiplier",
        "--map",
        &fixture("identity_map.txt"),
        "--source",
        &fixture("quadric.txt"),
        "--target",
        &fixture("quadric.txt"),
        "--point",
        "0,0,0,0",
    ]);
    assert!(stdout(&ident).contains("a = 1"));
}

#[test]
fn usage_and_file_errors_exit_2() {
    let bad_group = crgeo(&["verify", "--group", "V"]);
    assert_eq!(bad_group.status.code(), Some(2));

    let bad_subcommand = crgeo(&["frobnicate"]);
    assert_eq!(bad_subcommand.status.code(), Some(2));

    let missing_file = crgeo(&[
        "classify",
        "--manifold",
        "/nonexistent",
        "--point",
        "0,0,0,0",
    ]);
    assert_eq!(missing_file.status.code(), Some(2));

    let bad_phi = crgeo(&[
        "classify",
        "--manifold",
        &fixture("dilation.txt"),
        "--point",
        "0,0,0,0",
    ]);
    assert_eq!(bad_phi.status.code(), Some(2));
}

#[test]
fn seed_changes_are_reported() {
    let out = stdout(&crgeo(&["verify", "--group", "I", "--seed", "7"]));
    assert!(out.contains("seed 7"));
}
