mod common;

use std::path::PathBuf;
use std::process::Command;

use linfty_cwl::document::{parse, InputError};
use linfty_cwl::run::{run, RunOptions, Status};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linfty-cwl"))
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("linfty-cwl-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, text).expect("write scratch file");
    path
}

const BROKEN_JACOBI: &str = r#"{
  "format": 1,
  "name": "broken",
  "spaces": [{"name": "v", "basis": [["x", 0], ["y", 0], ["z", 0]]}],
  "algebras": [{
    "name": "g",
    "space": "v",
    "brackets": [
      {"inputs": ["x", "y"], "value": {"x": 1}},
      {"inputs": ["x", "z"], "value": {"y": "1/2"}}
    ]
  }],
  "queries": [{"command": "validate-algebra", "algebra": "g"}]
}
"#;

#[test]
fn golden_files_match_for_every_gallery_instance() {
    let update = common::updating();
    let problems: Vec<String> =
        linfty_cwl::gallery_names().iter().flat_map(|n| common::check_instance(n, update)).collect();
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn heisenberg_class_has_coordinate_one() {
    let doc = parse(&linfty_cwl::export_gallery("heisenberg").unwrap()).unwrap();
    let report = run(&doc, &RunOptions::default());
    let cwl = report
        .results
        .iter()
        .find(|r| r.command == "cwl" && r.subject == "central in trivial")
        .expect("cwl query present");
    assert_eq!(cwl.status, Status::Pass);
    assert_eq!(cwl.data["classes"][0]["coordinates"], serde_json::json!(["1"]));
}

#[test]
fn empty_query_list_exits_zero() {
    let path = scratch("empty.json", r#"{"format": 1, "name": "empty", "queries": []}"#);
    let out = binary().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "document empty\n0 passed, 0 failed, 0 errors\n");
}

#[test]
fn jacobi_violation_exits_one_with_witness() {
    let path = scratch("broken.json", BROKEN_JACOBI);
    let out = binary().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("validate-algebra g: fail"), "{stdout}");
    assert!(stdout.contains("witness x∨y∨z"), "{stdout}");
}

#[test]
fn syntax_error_reports_position_and_exits_two() {
    let text = "{\n  \"format\": 1,\n  \"name\": \"bad\",\n  \"spaces\": [,]\n}\n";
    match parse(text) {
        Err(InputError::Syntax { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    let path = scratch("syntax.json", text);
    let out = binary().arg("run").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_reference_reports_its_line() {
    let text = BROKEN_JACOBI.replace("\"space\": \"v\"", "\"space\": \"w\"");
    match parse(&text) {
        Err(InputError::Reference { line, message }) => {
            assert_eq!(line, 7, "{message}");
            assert!(message.contains("\"w\""), "{message}");
        }
        other => panic!("expected a reference error, got {other:?}"),
    }
}

#[test]
fn unknown_query_target_is_an_input_error() {
    let text = BROKEN_JACOBI.replace("\"algebra\": \"g\"}", "\"algebra\": \"h\"}");
    assert!(matches!(parse(&text), Err(InputError::Reference { line: 13, .. })), "{:?}", parse(&text));
}

#[test]
fn unknown_fields_are_rejected() {
    let text = BROKEN_JACOBI.replace("\"name\": \"g\",", "\"name\": \"g\", \"colour\": 1,");
    assert!(matches!(parse(&text), Err(InputError::Syntax { .. })));
}

fn heisenberg_with_queries(queries: serde_json::Value) -> String {
    let mut doc: serde_json::Value =
        serde_json::from_str(&linfty_cwl::export_gallery("heisenberg").unwrap()).unwrap();
    doc["queries"] = queries;
    serde_json::to_string_pretty(&doc).unwrap()
}

#[test]
fn unmet_expectation_fails_the_query() {
    let text = heisenberg_with_queries(serde_json::json!([
        {"command": "cohomology", "ruth": "trivial", "degrees": [1, 1], "expect": {"dims": [1]}},
        {"command": "cohomology", "ruth": "trivial", "degrees": [1, 1], "expect": {"dims": [2]}},
        {"command": "curvature", "extension": "central", "section": "default", "expect": {"iso": true}}
    ]));
    let report = run(&parse(&text).unwrap(), &RunOptions::default());
    let status: Vec<Status> = report.results.iter().map(|r| r.status).collect();
    assert_eq!(status, [Status::Pass, Status::Fail, Status::Fail]);
    assert_eq!(report.results[1].mismatches, [("dims", "[2]".to_string(), "[1]".to_string())]);
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn query_errors_do_not_stop_other_queries() {
    // f = identity cannot map the one-dimensional kernel's square into a line
    let text = heisenberg_with_queries(serde_json::json!([
        {"command": "cwl", "extension": "central", "ruth": "trivial", "k": 2, "f": "identity"},
        {"command": "validate-extension", "extension": "central"}
    ]));
    let report = run(&parse(&text).unwrap(), &RunOptions::default());
    assert_eq!(report.results[0].status, Status::Error);
    assert_eq!(report.results[1].status, Status::Pass);
    assert_eq!(report.exit_code(), 2);
}

#[test]
fn degree_flag_fills_in_missing_ranges() {
    let text = heisenberg_with_queries(serde_json::json!([{"command": "cohomology", "ruth": "trivial"}]));
    let path = scratch("degrees.json", &text);
    let out = binary().args(["run", "--json", "--degrees", "0..4"]).arg(&path).output().unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let result = &report["results"][0];
    assert_eq!(result["data"]["degrees"], serde_json::json!([0, 4]));
    assert_eq!(result["facts"]["dims"], serde_json::json!([2, 1, 0, 0, 0]));
}

#[test]
fn gallery_listing_matches_the_catalogue() {
    let out = binary().arg("gallery").output().unwrap();
    let listed: Vec<String> = String::from_utf8_lossy(&out.stdout).lines().map(String::from).collect();
    assert_eq!(listed, linfty_cwl::gallery_names());
}

#[test]
fn export_to_file_round_trips() {
    let path = std::env::temp_dir().join(format!("linfty-cwl-export-{}.json", std::process::id()));
    let out = binary().args(["export", "abelian_extension", "--output"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, linfty_cwl::export_gallery("abelian_extension").unwrap());
    let _ = std::fs::remove_file(path);
}
