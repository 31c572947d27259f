//! End-to-end tests of the `mplcd` binary: exit codes, JSON canonicality,
//! and the documented command surfaces.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mplcd::report::Report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mplcd"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn data_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

#[test]
fn factor_command_golden() {
    let out = run(&["factor", "5^1", "x^12-1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let factors = report.outputs["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 8);
    assert_eq!(factors[0]["factor"], "x+1");
    assert_eq!(factors[4]["factor"], "x^2+x+1");

    let out = run(&["factor", "2^1", "x^10-1", "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    let factors = report.outputs["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 2);
    assert_eq!(factors[0]["multiplicity"], 2);

    let out = run(&["factor", "5^1", "x-1", "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["factors"].as_array().unwrap().len(), 1);
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(run(&["factor", "5^1", "x^^2"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "6^1", "x+1"]).status.code(), Some(2));
    assert_eq!(run(&["field-info", "blah"]).status.code(), Some(2));
    // a generator that does not divide x^n - 1 is an input error
    assert_eq!(
        run(&["cyclic-lcd", "5^1", "13", "x+1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["mp", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn cyclic_lcd_command() {
    let out = run(&["cyclic-lcd", "5^1", "12", "x+1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["lcd"], true);

    let out = run(&["cyclic-lcd", "2^1", "10", "x+1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "a false verdict is an answer, not an error");
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["lcd"], false);

    let out = run(&["cyclic-lcd", "2^1", "10", "(x+1)^2", "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["lcd"], true);

    // Hermitian variant over F_4
    let out = run(&["cyclic-lcd", "2^2", "5", "x+1", "--inner", "hermitian", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn mp_command_reproduces_example() {
    let spec = data_path("specs/ex4_1_mp.json");
    let out = run(&[
        "mp",
        spec.to_str().unwrap(),
        "--bound",
        "--lcd",
        "--dual",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["length"], 48);
    assert_eq!(report.outputs["dimension"], 40);
    assert_eq!(report.outputs["bound"]["value"], 4);
    assert_eq!(report.outputs["lcd_euclidean"]["direct"], true);
    assert_eq!(report.outputs["lcd_euclidean"]["theorem"], "QuasiOrthogonal");

    let spec = data_path("specs/ex4_4_triangular_mp.json");
    let out = run(&["mp", spec.to_str().unwrap(), "--bound", "--lcd", "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["length"], 40);
    assert_eq!(report.outputs["dimension"], 11);
    assert_eq!(report.outputs["bound"]["value"], 2);
    assert_eq!(report.outputs["lcd_euclidean"]["theorem"], "LowerTriangularNested");

    let spec = data_path("specs/ex4_5_triple_mp.json");
    let out = run(&["mp", spec.to_str().unwrap(), "--bound", "--lcd", "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["dimension"], 18);
    assert_eq!(report.outputs["bound"]["value"], 4);
    assert_eq!(report.outputs["distance"]["value"], 4);
}

#[test]
fn mp_warns_when_matrix_size_does_not_divide_group_order() {
    // over F_3 the 4x4 character matrix still works (4 is invertible), but
    // 4 does not divide q - 1 = 2, which the report surfaces as a warning
    let dir = tempfile::tempdir().unwrap();
    let spec = r#"{
        "field": "3^1",
        "codes": [
            { "type": "cyclic", "n": 4, "gen": "x+1" },
            { "type": "cyclic", "n": 4, "gen": "x+1" },
            { "type": "cyclic", "n": 4, "gen": "x+1" },
            { "type": "cyclic", "n": 4, "gen": "x+1" }
        ],
        "matrix": { "type": "character", "r": 2 }
    }"#;
    let path = dir.path().join("f3char.json");
    std::fs::write(&path, spec).unwrap();
    let out = run(&["mp", path.to_str().unwrap(), "--lcd", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert!(report.outputs["warning"]
        .as_str()
        .unwrap()
        .contains("does not divide"));
    assert_eq!(report.outputs["dimension"], 12);
    assert_eq!(report.outputs["lcd_euclidean"]["theorem"], "QuasiOrthogonal");
}

#[test]
fn mp_degenerate_single_component_echoes_it() {
    let dir = tempfile::tempdir().unwrap();
    let spec = r#"{
        "field": "5^1",
        "codes": [{ "type": "cyclic", "n": 12, "gen": "x+1" }],
        "matrix": { "type": "rows", "rows": [["1"]] }
    }"#;
    let path = dir.path().join("single.json");
    std::fs::write(&path, spec).unwrap();
    let out = run(&["mp", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["length"], 12);
    assert_eq!(report.outputs["dimension"], 11);
}

#[test]
fn distance_command() {
    let code = data_path("codes/f13_n10_k2.json");
    let out = run(&["distance", code.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["kind"], "exact");
    assert_eq!(report.outputs["value"], 5);

    // explicit generator matrix form: the [4,3] sum-zero code has distance 2
    let code = data_path("codes/f5_sumzero4.json");
    let out = run(&["distance", code.to_str().unwrap(), "--format", "json"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.outputs["value"], 2);
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["factor", "5^1", "x^12-1"],
        vec!["field-info", "5^2"],
        vec!["cyclic-lcd", "2^1", "10", "(x+1)^2"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = run(&full);
        let text = stdout(&out);
        let report = Report::from_json(&text).unwrap();
        assert_eq!(format!("{}\n", report.to_json()), text, "args: {args:?}");
    }
}

#[test]
fn verify_paper_single_item_and_strict_mode() {
    let data = data_path("examples");
    let out = run(&[
        "verify-paper",
        "--only",
        "4.5",
        "--data-dir",
        data.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::from_json(&stdout(&out)).unwrap();
    let items = report.outputs["items"].as_array().unwrap();
    assert_eq!(items.len(), 1);
    assert_eq!(items[0]["id"], "4.5");
    assert!(report
        .checks
        .iter()
        .all(|c| c.status == mplcd::report::Status::Pass));

    assert_eq!(
        run(&["verify-paper", "--only", "9.9"]).status.code(),
        Some(2),
        "unknown item id is an input error"
    );
}

#[test]
fn strict_mode_fails_on_discrepancy_and_bad_claims_fail() {
    // a miniature data dir: one item whose text generator cannot divide, and
    // a second with a wrong dimension claim
    let dir = tempfile::tempdir().unwrap();
    let discrepancy_item = r#"{
        "id": "t.1",
        "title": "text generator probe",
        "field": "5^1",
        "n": 13,
        "components": [{
            "name": "C1",
            "gen": "x+4",
            "text_gen": "x+1",
            "claimed_k": 12,
            "claimed_d": 2,
            "distance_check": "witness",
            "lcd": [{ "inner": "euclidean", "claimed": true }]
        }]
    }"#;
    std::fs::write(dir.path().join("t1.json"), discrepancy_item).unwrap();
    let out = run(&["verify-paper", "--data-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "discrepancy alone is not a failure");
    let out = run(&[
        "verify-paper",
        "--strict",
        "--data-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "strict mode rejects discrepancies");

    let bad_item = r#"{
        "id": "t.2",
        "title": "wrong dimension claim",
        "field": "5^1",
        "n": 12,
        "components": [{
            "name": "C1",
            "gen": "x+1",
            "claimed_k": 10,
            "claimed_d": 2,
            "distance_check": "witness",
            "lcd": []
        }]
    }"#;
    std::fs::write(dir.path().join("t2.json"), bad_item).unwrap();
    let out = run(&["verify-paper", "--data-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "a failed claim exits 1");
}
