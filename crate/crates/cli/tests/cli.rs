use std::process::{Command, Output};

use serde_json::Value;

fn surgery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surgery"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_text() {
    let out = surgery(&["classify", "T(2,3)", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("T(2,3) at 1/1\n"));
    assert!(text.contains("  lo         no\n"));
    assert!(text.contains("  l_space    yes\n"));
    assert!(!text.contains('\x1b'));
    assert!(!text.contains("traces:"));
    let reduced = stdout(&surgery(&["classify", "T(2,3)", "2/4"]));
    assert!(reduced.starts_with("T(2,3) at 1/2\n"));
}

#[test]
fn trace_lists_rules_and_citations() {
    let text = stdout(&surgery(&["--trace", "classify", "T(2,-3)", "-1"]));
    assert!(text.contains("[R-torus, Thm:torus-knot-surgery]"));
    assert!(text.contains("- mirror: T(2,3) at 1/1"));
}

#[test]
fn farey_commands() {
    assert_eq!(stdout(&surgery(&["farey", "dist", "0/1", "5/2"])), "3\n");
    assert_eq!(stdout(&surgery(&["farey", "dist", "-1/2", "-1/2"])), "0\n");
    let ball = stdout(&surgery(&["farey", "ball", "1", "--qmax", "3"]));
    assert_eq!(ball.split_whitespace().count(), 8);
}

#[test]
fn scan_table_is_deterministic() {
    let args = ["scan", "C(2,5; T(2,3))", "--p", "-4..9", "--q", "1,2"];
    let first = surgery(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, surgery(&args).stdout);
    let text = stdout(&first);
    let header = text.lines().nth(1).unwrap();
    assert!(header.starts_with("slope  reducible  toroidal   lo"));
    // q = 2 keeps the odd numerators only
    assert_eq!(text.lines().count(), 2 + 14 + 7);
}

#[test]
fn json_documents() {
    let out = surgery(&["--json", "classify", "Sum(T(2,3), T(2,5))", "37/5"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "surgery-verdict/1");
    assert_eq!(doc["verdict"]["lo"], "yes");
    assert_eq!(doc["slope"], "37/5");
    let out = surgery(&[
        "--json",
        "--assume-conjecture-1.6",
        "classify",
        "Sat(w=0; Hyp())",
        "7/2",
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["flags"]["assume_conjecture"], true);
    let traces = doc["verdict"]["traces"].as_array().unwrap();
    assert!(traces
        .iter()
        .any(|t| t["property"] == "ctf" && t["conjectural"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(surgery(&["classify", "U", "1"]).status.code(), Some(1));
    assert_eq!(
        surgery(&["classify", "T(2,3)", "1/0"]).status.code(),
        Some(1)
    );
    assert_eq!(surgery(&["classify", "T(2,4)", "1"]).status.code(), Some(1));
    assert_eq!(
        surgery(&["classify", "T(2,3)", "0/0"]).status.code(),
        Some(1)
    );
    assert_eq!(surgery(&["bogus"]).status.code(), Some(1));
    assert_eq!(surgery(&["--help"]).status.code(), Some(0));
    let out = surgery(&["--json", "classify", "T(2,3)", "1/0"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["error"]["kind"], "input");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

#[test]
fn batch_runs_every_query() {
    let path = std::env::temp_dir().join(format!("surgery-cli-{}.knots", std::process::id()));
    std::fs::write(
        &path,
        "# trefoil cables\nK = C(2,3; T(2,3))\nquery K 6\nquery K p=1,2 q=1..2\n",
    )
    .unwrap();
    let file = path.to_string_lossy().into_owned();
    let out = surgery(&["batch", &file]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("query K (line 3): C(2,3; T(2,3))"));
    assert!(text.contains("query K (line 4)"));
    let doc: Value = serde_json::from_slice(&surgery(&["--json", "batch", &file]).stdout).unwrap();
    assert_eq!(doc["queries"].as_array().unwrap().len(), 2);
    assert_eq!(
        doc["queries"][0]["results"][0]["verdict"]["reducible"],
        "yes"
    );
    std::fs::write(&path, "query K 1\n").unwrap();
    let out = surgery(&["batch", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("undefined knot"));
    let _ = std::fs::remove_file(&path);
}
