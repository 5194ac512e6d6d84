use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/deg5_p2.txt")
}

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn euclid_prints_the_remainders() {
    let o = subres(&["euclid", fixture().to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("S5 = "), "{out}");
    assert!(out.lines().any(|l| l.starts_with("D = ")));
}

#[test]
fn subres_writes_a_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.csv");
    let o = subres(&["subres", fixture().to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("R0 = "));
    let csv = std::fs::read_to_string(trace).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("j,N_j,V_j,W_j,delta_j"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn stabilized_keeps_the_input_precision() {
    let o = subres(&["subres-stable", fixture().to_str().unwrap(), "--random-lift", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("# loss N - N_0 = 0"), "{out}");
}

#[test]
fn missing_polynomial_is_an_error() {
    let o = subres(&["subres", fixture().to_str().unwrap(), "--a", "Q"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no polynomial named Q"));
}

#[test]
fn experiment_writes_csv_and_reports_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("vj.csv");
    let o = subres(&["experiment", "vj", "--deg", "4", "--trials", "3000", "--out", out.to_str().unwrap()]);
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.lines().all(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")), "{err}");
    assert_eq!(o.status.code(), Some(if err.contains("FAIL ") { 2 } else { 0 }));
    let csv = std::fs::read_to_string(out).unwrap();
    assert!(csv.starts_with("row,degree,j"));
}

#[test]
fn failing_tolerance_exits_with_two() {
    // Six trials cannot meet the law tolerances.
    let o = subres(&["experiment", "vj", "--deg", "3", "--trials", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("row,"));
}

#[test]
fn unknown_experiment_is_rejected() {
    let o = subres(&["experiment", "nope"]);
    assert_eq!(o.status.code(), Some(1));
}
