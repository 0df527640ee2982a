use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domchain(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domchain"))
        .args(args)
        .env_remove("DOMCHAIN_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn domchain");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = domchain(args, "");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(str::to_owned).collect()
}

fn chain(v: &Value) -> Vec<u64> {
    ["ir", "gamma", "i", "alpha", "Gamma", "IR", "gamma_gr"].iter().map(|k| v["invariants"][k].as_u64().unwrap()).collect()
}

#[test]
fn invariants_of_a_path() {
    let v = json(&["invariants", "Bg"]);
    assert_eq!(v["n"], 3);
    assert_eq!(chain(&v), [1, 1, 1, 2, 2, 2, 2]);
    assert_eq!(v["status"]["state"], "ok");
}

#[test]
fn invariants_of_family_specs() {
    let q3 = json(&["invariants", "hypercube:3"]);
    assert_eq!(q3["invariants"]["alpha"], 4);
    assert_eq!(q3["invariants"]["gamma_gr"], 4);

    let gap = json(&["invariants", "gap:2"]);
    assert_eq!(gap["invariants"]["Gamma"], 3);
    assert_eq!(gap["invariants"]["gamma_gr"], 4);
}

#[test]
fn classify_crossed_prisms() {
    let member = json(&["classify", "crossedprism:4"]);
    assert_eq!(member["classes"]["F_alpha"], true);

    let other = json(&["classify", "crossedprism:6"]);
    assert_eq!(other["classes"]["F_alpha"], false);
    let u = other["verdicts"].as_array().unwrap().iter().find(|v| v["property"] == "U").unwrap();
    assert_eq!(u["holds"], false);
    assert!(u["witness"].is_object());
}

#[test]
fn classify_path_on_four_vertices() {
    let v = json(&["classify", "path:4"]);
    assert_eq!(v["classes"]["F_alpha"], false);
}

#[test]
fn enumerate_counts() {
    for (n, all, connected) in [(1, 1, 1), (3, 8, 4), (4, 64, 38)] {
        let n = n.to_string();
        assert_eq!(stdout_lines(&domchain(&["enumerate", &n], "")).len(), all);
        assert_eq!(stdout_lines(&domchain(&["enumerate", &n, "--connected-only"], "")).len(), connected);
    }
}

#[test]
fn family_prints_graph6() {
    let out = domchain(&["family", "path:3"], "");
    assert!(out.status.success());
    assert_eq!(stdout_lines(&out), ["Bg"]);
}

#[test]
fn scan_crossed_prisms() {
    let input: String = ["crossedprism:4", "crossedprism:6", "crossedprism:8"]
        .iter()
        .map(|s| stdout_lines(&domchain(&["family", s], ""))[0].clone() + "\n")
        .collect();
    let out = domchain(&["scan"], &input);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 4);
    let flags: Vec<bool> =
        lines[..3].iter().map(|l| serde_json::from_str::<Value>(l).unwrap()["classes"]["F_alpha"].as_bool().unwrap()).collect();
    assert_eq!(flags, [true, false, false]);
    let summary: Value = serde_json::from_str(&lines[3]).unwrap();
    assert_eq!(summary["summary"]["total"], 3);
    assert_eq!(summary["summary"]["F_alpha"], 1);
}

#[test]
fn scan_empty_stream() {
    let out = domchain(&["scan"], "");
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let summary: Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(summary["summary"]["total"], 0);
}

#[test]
fn scan_keeps_going_past_bad_lines() {
    let out = domchain(&["scan", "--format", "csv"], "Bg\n\nnot-graph6\nC~\n");
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("0,Bg,3,ok,"));
    assert!(lines[2].starts_with("2,not-graph6,,skipped,"));
    assert!(lines[3].starts_with("3,C~,4,ok,"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"skipped\":1"));
}

#[test]
fn scan_output_is_independent_of_thread_count() {
    let input = String::from_utf8(domchain(&["enumerate", "5", "--connected-only"], "").stdout).unwrap();
    let one = domchain(&["scan", "--mode", "theorems", "--jobs", "1"], &input);
    let many = domchain(&["scan", "--mode", "theorems", "--jobs", "4"], &input);
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    let last: Value = serde_json::from_str(stdout_lines(&one).last().unwrap()).unwrap();
    assert_eq!(last["summary"]["total"], 728);
    assert_eq!(last["summary"]["theorem_violations"], 0);
}

#[test]
fn capped_graphs_exit_with_capacity_code() {
    let out = domchain(&["--max-n", "4", "invariants", "path:6"], "");
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"]["state"], "capped");
    assert!(String::from_utf8_lossy(&out.stderr).contains("capped"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(domchain(&["invariants", "B~~"], "").status.code(), Some(2));
    assert_eq!(domchain(&["invariants", "nosuchfamily:3"], "").status.code(), Some(2));
    assert_eq!(domchain(&["enumerate", "8"], "").status.code(), Some(3));
    assert_eq!(domchain(&["verify", "--row", "16"], "").status.code(), Some(2));
}

#[test]
fn verify_single_row() {
    let out = domchain(&["verify", "--row", "1"], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("PASS row  1"));
    assert!(text.contains("all 1 rows pass"));
}
