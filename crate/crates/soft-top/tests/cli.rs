//! End-to-end checks of the binary: command surfaces, report shapes, and the
//! exit-code contract (0 pass, 1 counterexample/mismatch, 2 input error).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soft-top"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn classify_passes_on_a_valid_fixture() {
    let tmp = tempdir("classify-ok");
    let fixture = corpus().join("example1.json");
    let out = run(&["classify", fixture.to_str().unwrap()], &tmp);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("T0U") && text.contains("true"));
    assert!(text.contains("T0 ") || text.contains("T0\t") || text.contains("T0  "));
}

#[test]
fn classify_rejects_underclosed_families_without_generate() {
    let tmp = tempdir("classify-underclosed");
    let fixture = corpus().join("example2.json");
    let out = run(&["classify", fixture.to_str().unwrap()], &tmp);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("`B`") && err.contains("`C`"), "stderr: {err}");

    let out = run(&["classify", fixture.to_str().unwrap(), "--generate"], &tmp);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("closure added 1"));
}

#[test]
fn classify_flags_expectation_mismatches() {
    let tmp = tempdir("classify-mismatch");
    let fixture = corpus().join("example1.json");
    let text = std::fs::read_to_string(&fixture).unwrap();
    let lying = text.replace("\"T0\": false", "\"T0\": true");
    let path = tmp.join("lying.json");
    std::fs::write(&path, lying).unwrap();
    let out = run(&["classify", path.to_str().unwrap()], &tmp);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn unknown_flags_exit_with_usage_error() {
    let tmp = tempdir("usage");
    let out = run(&["classify", "--bogus"], &tmp);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"], &tmp);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_corpus_passes_and_reports() {
    let tmp = tempdir("corpus");
    let out = run(
        &["verify-corpus", corpus().to_str().unwrap(), "--out", "report.json"],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("example1") && text.contains("example9"));
    assert!(text.contains("closure discrepancy"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert_eq!(report["entries"].as_array().unwrap().len(), 7);
}

#[test]
fn mine_refutation_writes_a_witness_that_rechecks() {
    let tmp = tempdir("mine-refuted");
    let out = run(
        &[
            "mine", "--points", "2", "--params", "2", "--exhaustive", "--implication", "T0=>T0k",
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("refuted"));
    let witness_line = text
        .lines()
        .find(|l| l.contains("witness written to"))
        .expect("witness path printed");
    let path = tmp.join(witness_line.rsplit(' ').next().unwrap());
    // the witness document classifies back to (T0 true, T0k false)
    let reout = run(&["classify", path.to_str().unwrap()], &tmp);
    assert_eq!(reout.status.code(), Some(0));
    let retext = stdout(&reout);
    let t0_line = retext.lines().find(|l| l.trim_start().starts_with("T0 ")).unwrap();
    assert!(t0_line.contains("true"));
    let t0k_line = retext.lines().find(|l| l.trim_start().starts_with("T0k")).unwrap();
    assert!(t0k_line.contains("false"));
}

#[test]
fn mine_holding_implication_exits_zero() {
    let tmp = tempdir("mine-holds");
    let out = run(
        &[
            "mine", "--points", "2", "--params", "2", "--exhaustive", "--implication",
            "T0k=>T0", "--out", "mine.json",
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("holds"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.join("mine.json")).unwrap()).unwrap();
    assert_eq!(report["spaces_checked"], serde_json::json!(355));
    assert_eq!(report["status"], serde_json::json!("holds"));
}

#[test]
fn mine_validates_its_grammar() {
    let tmp = tempdir("mine-grammar");
    let out = run(
        &["mine", "--points", "2", "--params", "2", "--exhaustive", "--implication", "T0"],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &["mine", "--points", "2", "--params", "2", "--implication", "T0=>T0k"],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &[
            "mine", "--points", "9", "--params", "9", "--exhaustive", "--implication", "T0=>T0k",
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds the bound"));
}

#[test]
fn exhaustive_bound_env_override_unlocks_six_cells() {
    let tmp = tempdir("mine-override");
    let out = Command::new(env!("CARGO_BIN_EXE_soft-top"))
        .args([
            "mine", "--points", "3", "--params", "2", "--exhaustive", "--implication",
            "T0k=>T0", "--out", "six.json",
        ])
        .env("SOFT_TOP_EXHAUSTIVE_BOUND", "6")
        .current_dir(&tmp)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.join("six.json")).unwrap()).unwrap();
    assert_eq!(report["spaces_checked"], serde_json::json!(209_527));
}

#[test]
fn reflect_writes_the_quotient_document() {
    let tmp = tempdir("reflect");
    let fixture = corpus().join("example9.json");
    let out = run(
        &["reflect", fixture.to_str().unwrap(), "--out", "quotient.json"],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("[x] = {x}"));
    assert!(text.contains("[y] = {y, z}"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.join("quotient.json")).unwrap()).unwrap();
    assert_eq!(doc["classes"]["[y]"], serde_json::json!(["y", "z"]));
    assert_eq!(doc["opens"].as_object().unwrap().len(), 4);
}

#[test]
fn reflect_refuses_non_t0u_spaces_without_force() {
    let tmp = tempdir("reflect-force");
    let skewed = r#"{
  "format": 1,
  "universe": { "points": ["x", "y"], "parameters": ["a1", "a2"] },
  "opens": {
    "0_A": { "a1": [], "a2": [] },
    "1_A": { "a1": ["x", "y"], "a2": ["x", "y"] },
    "F": { "a1": ["x"], "a2": ["y"] }
  }
}"#;
    let path = tmp.join("skewed.json");
    std::fs::write(&path, skewed).unwrap();
    let out = run(&["reflect", path.to_str().unwrap()], &tmp);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("T0U"));
    let out = run(&["reflect", path.to_str().unwrap(), "--force"], &tmp);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("unverified"));
}

#[test]
fn generate_emits_a_canonical_closed_document() {
    let tmp = tempdir("generate");
    let fixture = corpus().join("example2.json");
    let out = run(
        &["generate", fixture.to_str().unwrap(), "--out", "closed.json"],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    // the output validates strictly now
    let out = run(&["classify", "closed.json"], &tmp);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
}

#[test]
fn check_map_reports_and_enforces_props() {
    let tmp = tempdir("check-map");
    let mapping = r#"{
  "format": 1,
  "source": "example1",
  "target": "example1",
  "point_map": { "x": "x", "y": "y", "z": "z" },
  "param_map": { "a1": "a1", "a2": "a2" }
}"#;
    let path = tmp.join("identity.json");
    std::fs::write(&path, mapping).unwrap();
    let fixture = corpus().join("example1.json");
    let out = run(
        &[
            "check-map",
            path.to_str().unwrap(),
            "--domain",
            fixture.to_str().unwrap(),
            "--codomain",
            fixture.to_str().unwrap(),
            "--props",
            "Continuous,Initial,Quasihomomorphism,Homeomorphism",
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    // a constant map onto z is continuous here but no homeomorphism
    let constant = r#"{
  "format": 1,
  "point_map": { "x": "z", "y": "z", "z": "z" },
  "param_map": { "a1": "a1", "a2": "a2" }
}"#;
    let cpath = tmp.join("constant.json");
    std::fs::write(&cpath, constant).unwrap();
    let out = run(
        &[
            "check-map",
            cpath.to_str().unwrap(),
            "--domain",
            fixture.to_str().unwrap(),
            "--codomain",
            fixture.to_str().unwrap(),
            "--props",
            "Homeomorphism",
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("required properties failing"));

    // without --props the same report is informational
    let out = run(
        &[
            "check-map",
            cpath.to_str().unwrap(),
            "--domain",
            fixture.to_str().unwrap(),
            "--codomain",
            fixture.to_str().unwrap(),
        ],
        &tmp,
    );
    assert_eq!(out.status.code(), Some(0));
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("soft-top-test-{tag}-{}", std::process::id()));
    if dir.exists() {
        std::fs::remove_dir_all(&dir).unwrap();
    }
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
