use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn tuttekit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tuttekit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(args: &[&str], stdin: &str) -> Value {
    let out = tuttekit(args, stdin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const K2: &str = r#"{"n":2,"edges":[[1,2]]}"#;
const P3: &str = r#"{"n":3,"edges":[[1,2],[2,3]]}"#;

#[test]
fn xb_of_an_edge() {
    let v = json_out(&["xb", "-", "--json"], K2);
    assert_eq!(
        v,
        json!({"basis": "mtilde", "terms": [
            {"lambda": [1, 1], "coeff": ["1/1"]},
            {"lambda": [2], "coeff": ["1/1", "1/1"]},
        ]})
    );
    let text = tuttekit(&["xb", "-"], K2);
    assert_eq!(String::from_utf8_lossy(&text.stdout).trim(), "(1 + t) m~(2) + m~(1,1)");
}

#[test]
fn xb_at_minus_one_is_x() {
    let k3 = r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#;
    let xb = json_out(&["xb", "-", "--t-eval", "-1", "--json"], k3);
    let x = json_out(&["x", "-", "--json"], k3);
    assert_eq!(xb, x);
}

#[test]
fn os_plus_is_friendly_and_in_the_kernel() {
    let rel = json_out(&["relation", "os-plus", "--json"], "");
    let rel = rel.to_string();
    assert_eq!(json_out(&["friendly", "-", "--json"], &rel), json!({"friendly": true}));
    let red = json_out(&["reduce", "-", "--json"], &rel);
    assert_eq!(red["terms"], json!([]));
    assert!(tuttekit(&["member", "-"], &rel).status.success());
}

#[test]
fn path_reduces_to_one_star() {
    let red = json_out(&["reduce", "-", "--json"], P3);
    assert_eq!(red["terms"], json!([{"lambda": [3], "k": 0, "c": "1/1"}]));
}

#[test]
fn quasi_of_one_arc() {
    let d = r#"{"n":2,"arcs":[[1,2]]}"#;
    let out = tuttekit(&["quasi", "xq", "-", "--vars", "2"], d);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "x1 x2: 1 + q");
}

#[test]
fn exit_codes() {
    // unreadable file
    assert_eq!(tuttekit(&["xb", "/nonexistent/g.json"], "").status.code(), Some(1));
    // malformed graph
    assert_eq!(tuttekit(&["xb", "-"], r#"{"n":2,"edges":[[1,3]]}"#).status.code(), Some(1));
    // usage errors, from clap and from missing relation parameters
    assert_eq!(tuttekit(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(tuttekit(&["relation", "broom", "--n", "1"], "").status.code(), Some(2));
}
