use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quivercert::{
    certify, decompose_at, enumerate_strata, knowledge_base_revision, parse_quiver_file, Certificate,
    Conclusion, Decomposition, ExactPoint, Mode,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quivercert")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn certify_a3_succeeds() {
    let a3 = fixture("a3.quiver");
    let out = run(&["certify", path(&a3)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("CERTIFIED"));
    assert!(text.contains("witness"));
}

#[test]
fn certify_jordan_is_inconclusive() {
    let out = run(&["certify", path(&fixture("jordan.quiver"))]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("INCONCLUSIVE"));
    assert!(text.contains("looped-2-framed"));
    let normal = run(&["certify", "--mode", "normal", path(&fixture("jordan.quiver"))]);
    assert_eq!(normal.status.code(), Some(1));
}

#[test]
fn certificate_json_round_trips() {
    let a3 = fixture("a3.quiver");
    let out = run(&["certify", "--json", path(&a3)]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    let datum = parse_quiver_file(&a3).unwrap().datum;
    assert_eq!(parsed, certify(&datum, Mode::SymplecticSingularities));
    assert_eq!(parsed.conclusion, Conclusion::Certified);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.json");
    let out = run(&["certify", "--mode", "normal", "--json", "-o", path(&file), path(&a3)]);
    assert_eq!(out.status.code(), Some(0));
    let written: Certificate = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(written, certify(&datum, Mode::NormalSymplectic));
    assert!(stdout(&out).contains("CERTIFIED"));
}

#[test]
fn thread_count_does_not_change_output() {
    let file = fixture("triangle.quiver");
    let one = run(&["certify", path(&file)]);
    let three = run(&["certify", "--threads", "3", path(&file)]);
    assert_eq!(stdout(&one), stdout(&three));
    assert_eq!(run(&["certify", "--threads", "0", path(&file)]).status.code(), Some(2));
}

#[test]
fn decompose_json_round_trips() {
    let a3 = fixture("a3.quiver");
    let out = run(&["decompose", path(&a3), "--point", "5,0,0,0,0,0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: Decomposition = serde_json::from_str(&stdout(&out)).unwrap();
    let datum = parse_quiver_file(&a3).unwrap().datum;
    assert_eq!(parsed, decompose_at(&datum, &ExactPoint::from_integers(&[5, 0, 0, 0, 0, 0])).unwrap());
    let human = stdout(&run(&["decompose", path(&a3), "--point", "5,0,0,0,0,0"]));
    assert!(human.contains("λ=0"));
    assert!(human.contains("codim    5"));
}

#[test]
fn codim_accepts_rationals() {
    let a3 = fixture("a3.quiver");
    let out = run(&["codim", path(&a3), "--point", "0,0,1/2,1/2,0,-3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("4\t"));
    let bad = run(&["codim", path(&a3), "--point", "0,0,x,1,0,0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("coordinate 3"));
    let short = run(&["codim", path(&a3), "--point", "0,0"]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn strata_lines_mark_the_zero_block() {
    let file = fixture("edge.quiver");
    let out = run(&["strata", path(&file), "--bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let datum = parse_quiver_file(&file).unwrap().datum;
    let expected: Vec<String> = enumerate_strata(&datum, 2).iter().map(|s| s.render(&datum)).collect();
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines, expected);
    assert!(lines.iter().any(|l| l.starts_with("0:")));
}

#[test]
fn roots_are_listed() {
    let out = run(&["roots", path(&fixture("edge.quiver"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("x1.0 - x0.0"));
    assert!(text.ends_with("3 roots\n"));
}

#[test]
fn enumerate_prints_the_family_table() {
    let out = run(&["enumerate", "--codim-bound", "3", "--simple-only"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("framed (7)"));
    assert!(text.contains("unframed (12)"));
    assert!(text.ends_with("19 families\n"));
}

#[test]
fn normalize_kappa_prefers_the_flag() {
    let file = fixture("edge.quiver");
    let embedded = run(&["normalize-kappa", path(&file)]);
    assert_eq!(embedded.status.code(), Some(0));
    assert!(stdout(&embedded).contains("kappa   [e0=0 f0.0=0 f1.0=1]"));
    assert!(stderr(&embedded).is_empty());

    let flagged = run(&["normalize-kappa", path(&file), "--kappa", "0,-1,0", "--json"]);
    assert_eq!(flagged.status.code(), Some(0));
    assert!(stderr(&flagged).contains("warning"));
    let report: serde_json::Value = serde_json::from_str(&stdout(&flagged)).unwrap();
    assert_eq!(report["input"], serde_json::json!([0, -1, 0]));
    assert_eq!(report["kappa"], serde_json::json!([0, 0, 1]));

    let missing = run(&["normalize-kappa", path(&fixture("a3.quiver"))]);
    assert_eq!(missing.status.code(), Some(2));
    let wrong_rank = run(&["normalize-kappa", path(&file), "--kappa", "1,2"]);
    assert_eq!(wrong_rank.status.code(), Some(2));
}

#[test]
fn invalid_input_exits_with_two() {
    let out = run(&["certify", path(&fixture("bad_length.quiver"))]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad_length.quiver:3:"), "{err}");
    assert!(err.contains("`v`"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let negative = dir.path().join("negative.quiver");
    std::fs::write(&negative, "vertices = 1\nv = [1]\nw = [-3]\n").unwrap();
    let out = run(&["certify", path(&negative)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("-3"));

    let missing = run(&["certify", "/nonexistent/file.quiver"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    let unknown = run(&["certify", "--frobnicate", path(&fixture("a3.quiver"))]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("Usage"));
    assert_eq!(run(&["certify", "--mode", "fast", path(&fixture("a3.quiver"))]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn version_reports_the_knowledge_base() {
    let out = run(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(&knowledge_base_revision()));
}
