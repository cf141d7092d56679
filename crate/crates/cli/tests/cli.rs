use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uirred")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn compute_odd_path_skew() {
    let v = json(&run(&["compute", "--family", "path:7", "--param", "skew", "--output", "json"]));
    assert_eq!(v["schema"], 1);
    for key in ["xir", "x", "x_upper", "xir_upper"] {
        assert_eq!(v[key], 1, "{key}");
    }
}

#[test]
fn forts_of_the_claw() {
    let v = json(&run(&["forts", "--family", "star:1,3", "--param", "standard"]));
    assert_eq!(v["members"].as_array().unwrap().len(), 5);
    assert_eq!(v["provenance"], "enumerated_forts");
}

#[test]
fn verify_chain_passes() {
    let out = run(&["verify", "--suite", "chain", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS chain (max_n 5)"));
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify", "--suite", "tables", "--max-n", "7", "--output", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failures"][0]["property"], "table/P_4/vertex_cover");
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["compute", "--family", "path:3", "--g6", "Bw", "--param", "psd"],
        &["compute", "--family", "path:3"],
        &["compute", "--family", "path:3", "--param", "psd", "--output", "dot"],
        &["compute", "--g6", "!!", "--param", "psd"],
        &["compute", "--family", "path:17", "--param", "psd"],
        &["compute", "--fixture", "nope", "--param", "psd"],
        &["tar", "--family", "path:3"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "chain", "--max-n", "9"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_override() {
    let out = run(&["compute", "--family", "path:3", "--param", "psd", "--budget-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph6_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uirred"))
        .args(["chain", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"CN\n").unwrap();
    let v = json(&child.wait_with_output().unwrap());
    assert_eq!(v["VCIR"], 3);
    assert_eq!(v["tau"], 2);
}

#[test]
fn tar_dot_and_text() {
    let dot = run(&["tar", "--fixture", "fig1", "--param", "standard", "--kind", "x_sets", "--output", "dot"]);
    assert_eq!(dot.status.code(), Some(0));
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph tar {"));
    assert_eq!(text.matches(" -- ").count(), 10);
    let alpha = run(&["tar", "--fixture", "fig9", "--kind", "independent_sets", "--output", "text"]);
    assert!(String::from_utf8_lossy(&alpha.stdout).starts_with("11 nodes, 16 edges"));
}

#[test]
fn fixture_text_uses_printed_labels() {
    let out = run(&["forts", "--fixture", "fig6", "--param", "skew", "--provenance", "minimal", "--output", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "skew minimal_sets sets: 1\n{0,3,4}\n");
    let out = run(&["compute", "--fixture", "fig2", "--param", "psd", "--output", "text"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("xir       3  {2,3,6}"));
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--fixture", "fig5", "--param", "psd"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
