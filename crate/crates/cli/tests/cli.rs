//! End-to-end checks of the binary: exit codes, determinism, round trips.

use std::io::Write;
use std::process::{Command, Output};

fn homlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write");
    file
}

fn example(name: &str) -> String {
    let out = homlie(&["example", name]);
    assert!(out.status.success(), "example {name} failed");
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn validate_accepts_catalog_entries() {
    for name in homlie_core::catalog::NAMES {
        let doc = write_temp(&example(name));
        let out = homlie(&["validate", "--input", doc.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn validate_flags_a_perturbed_document() {
    let mut doc_text = example("sl2");
    // flip the sign convention on one side only: breaks skew-symmetry
    doc_text = doc_text.replace(
        "[\n      2,\n      1,\n      0,\n      \"-1\"\n    ]",
        "[\n      2,\n      1,\n      0,\n      \"1\"\n    ]",
    );
    let doc = write_temp(&doc_text);
    let out = homlie(&["validate", "--input", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("skew"), "got: {text}");
}

#[test]
fn roots_reports_not_split_with_residual() {
    let doc = write_temp(&example("heisenberg"));
    let out = homlie(&["roots", "--input", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("split: no"));
    assert!(text.contains("residual: dim 1"));
}

#[test]
fn connections_pair_and_classes() {
    let doc = write_temp(&example("osp12"));
    let path = doc.path().to_str().unwrap();
    let out = homlie(&["connections", "--input", path, "--from", "1", "--to", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("chain: {(1), (1)}"), "got: {text}");

    let out = homlie(&["connections", "--input", path, "--classes"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("connection classes: 1"));
}

#[test]
fn disconnected_pair_exits_one() {
    let doc = write_temp(&example("sl2_direct_sum"));
    let out = homlie(&[
        "connections",
        "--input",
        doc.path().to_str().unwrap(),
        "--from",
        "2,0",
        "--to",
        "0,2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("not connected"));
}

#[test]
fn unknown_root_is_an_input_error() {
    let doc = write_temp(&example("sl2"));
    let out = homlie(&[
        "connections",
        "--input",
        doc.path().to_str().unwrap(),
        "--from",
        "7",
        "--to",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_document_is_an_input_error() {
    let doc = write_temp("{ this is not json");
    let out = homlie(&["validate", "--input", doc.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    let out = homlie(&["validate", "--input", "/nonexistent/algebra.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_example_lists_the_catalog() {
    let out = homlie(&["example", "so8"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("sl2") && text.contains("osp12"));
}

#[test]
fn lambda_parameter_controls_the_twist() {
    let out = homlie(&["example", "sl2_yau", "--lambda", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"1/2\""));
    let doc = write_temp(&text);
    let validate = homlie(&["validate", "--input", doc.path().to_str().unwrap()]);
    assert_eq!(validate.status.code(), Some(0));

    let out = homlie(&["example", "sl2_yau", "--lambda", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explicit_magsa_overrides_the_search() {
    let doc = write_temp(&example("sl2"));
    // span{e} is maximal abelian but the algebra is not split over it
    let magsa = write_temp(r#"[["0","1","0"]]"#);
    let out = homlie(&[
        "roots",
        "--input",
        doc.path().to_str().unwrap(),
        "--magsa",
        magsa.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("split: no"));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    for name in ["sl2", "osp12", "sl2_direct_sum", "super_z2_toy"] {
        let doc = write_temp(&example(name));
        let path = doc.path().to_str().unwrap();
        let first = homlie(&["report", "--input", path, "--format", "json"]);
        let second = homlie(&["report", "--input", path, "--format", "json"]);
        assert_eq!(first.stdout, second.stdout, "{name}");
        assert_eq!(first.status.code(), second.status.code(), "{name}");
    }
}

#[test]
fn emitted_documents_parse_back_identically() {
    for name in homlie_core::catalog::NAMES {
        let text = example(name);
        let doc = homlie_core::document::parse(&text).unwrap();
        assert_eq!(homlie_core::document::serialize(&doc), text, "{name}");
    }
}

#[test]
fn simplicity_report_on_direct_sum_lists_summands() {
    let doc = write_temp(&example("sl2_direct_sum"));
    let out = homlie(&[
        "simplicity",
        "--input",
        doc.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["verdict"], "not_simple");
    assert_eq!(value["agreement"], true);
    assert_eq!(value["simple_summands"].as_array().unwrap().len(), 2);
}
