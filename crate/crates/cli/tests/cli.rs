use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const P7: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/p7.pip");
const G5: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/g5.pip");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_crosscube"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    let o = run(args, stdin);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn build_p7_json() {
    let v = json(&["--format", "json", "build", P7], "");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 16);
    assert_eq!(v["f_vector"], serde_json::json!([16, 24, 10, 1]));
    assert_eq!(v["crossing_faces"].as_array().unwrap().len(), 16);
    assert_eq!(v["faces"].as_array().unwrap().len(), 16 + 24 + 10 + 1);
}

#[test]
fn fvector_reports_identity() {
    let v = json(&["--format", "json", "fvector", P7], "");
    assert_eq!(v["simplicial"], serde_json::json!([1, 7, 7, 1]));
    assert_eq!(v["identity"], true);
    assert_eq!(v["hyperplanes"], "7");
    assert_eq!(v["euler_characteristic"], "1");
}

#[test]
fn empty_pip_is_a_point() {
    let o = run(&["build", "-"], "pip 0\n");
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("vertices 1\n"), "{out}");
    assert!(out.contains("f-vector 1\n"));
}

#[test]
fn malformed_input_names_the_line() {
    let o = run(&["build", "-"], "pip 2\nfoo\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn cyclic_order_is_rejected() {
    let o = run(&["validate", "-"], "pip 2\norder 0 1\norder 1 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn one_based_labels() {
    let o = run(&["--one-based", "crossing", "-"], "pip 2\nincons 1 2\n");
    assert!(o.status.success());
    let zero = stdout(&run(&["crossing", "-"], "pip 2\nincons 0 1\n"));
    assert_ne!(stdout(&o), zero);
}

#[test]
fn hasse_and_crossing_dot() {
    let hasse = stdout(&run(&["export", "--what", "hasse", P7], ""));
    assert!(hasse.starts_with("digraph"));
    let edges: Vec<&str> = hasse.lines().filter(|l| l.contains(" -> ")).collect();
    assert_eq!(edges.iter().filter(|l| !l.contains("dashed")).count(), 7);
    assert_eq!(edges.iter().filter(|l| l.contains("dashed")).count(), 3);
    let cross = stdout(&run(&["--format", "dot", "crossing", G5], ""));
    assert!(cross.starts_with("graph"));
    assert_eq!(cross.matches(" -- ").count(), 5);
}

#[test]
fn export_then_roundtrip_recovers_the_pip() {
    let exported = stdout(&run(&["export", "--what", "abstract", P7], ""));
    let o = run(&["roundtrip", "-", "--verify"], &exported);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn square_roundtrips_to_two_incomparable_elements() {
    let square = r#"{"n":4,"faces":[[0],[1],[2],[3],[0,1],[1,2],[2,3],[0,3],[0,1,2,3]],"root":0}"#;
    let v = json(&["--format", "json", "roundtrip", "-"], square);
    assert_eq!(v["n"], 2);
    assert_eq!(v["covers"].as_array().map_or(0, Vec::len), 0);
    assert_eq!(v["incons"].as_array().map_or(0, Vec::len), 0);
}

#[test]
fn three_vertex_face_is_rejected() {
    let bad = r#"{"n":3,"faces":[[0],[1],[2],[0,1,2]],"root":0}"#;
    let o = run(&["roundtrip", "-"], bad);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn colour_prints_both_colourings() {
    let o = run(&["color", "--r", "2", G5], "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn check_is_deterministic() {
    let args = ["--format", "json", "check", "--seed", "9", "--count", "15", "--n-max", "6"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn check_without_random_instances_passes() {
    let o = run(&["check", "--count", "0"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("0 failed, 0 skipped"));
}

#[test]
fn check_rejects_unknown_mutation() {
    let o = run(&["check", "--count", "0", "--mutate", "nope"], "");
    assert_eq!(o.status.code(), Some(2));
}
