//! End-to-end tests of the `descent` binary: output bytes, formats, and the
//! documented exit codes (0 ok, 1 mismatch, 2 usage, 3 cap refusal).

use std::process::{Command, Output};

fn descent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn group_prints_order_and_matrix() {
    let out = descent(&["group", "B3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 48"));
    assert!(text.contains("1 4 2"));

    let out = descent(&["group", "I2:7"]);
    assert!(stdout(&out).contains("order: 14"));

    let out = descent(&["group", "E8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 696729600"));
    assert!(text.contains("enumeration disabled"));
}

#[test]
fn usage_errors_exit_2() {
    let out = descent(&["group", "D2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = descent(&["group", "Q9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = descent(&["transversal", "A2", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = descent(&["reproduce", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_refusal_exits_3() {
    let out = descent(&["transversal", "E8", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = descent(&["--cap", "10", "transversal", "A3", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn transversal_words() {
    let out = descent(&["transversal", "A2", "1"]);
    assert_eq!(stdout(&out), "\n2\n1 2\n");
    // J = S: only the identity (one empty line).
    let out = descent(&["transversal", "A2", "1,2"]);
    assert_eq!(stdout(&out), "\n");
    // Double cosets of the chain in B3: three representatives.
    let out = descent(&["transversal", "B3", "1,2", "1,2"]);
    assert_eq!(stdout(&out), "\n3\n3 2 1 2 3\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["product", "B3", "1,3", "1,3", "--format", "json"];
    let first = stdout(&descent(&args));
    let second = stdout(&descent(&args));
    assert_eq!(first, second);
    assert!(first.contains("\"schema\": \"1\""));
}

#[test]
fn product_json_matches_expected_expansion() {
    let out = descent(&["product", "A2", "1", "1", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["product"]["-"], "1");
    assert_eq!(parsed["product"]["1"], "1");
    // Keys come in bitmask order: "-" before "1".
    let keys: Vec<&String> = parsed["product"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["-", "1"]);
}

#[test]
fn analyze_json_schema() {
    let out = descent(&["analyze", "B3", "2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["schema"], "1");
    assert_eq!(parsed["type"], "B3");
    assert_eq!(parsed["J"], "1,3");
    assert_eq!(parsed["dim"], 4);
    assert_eq!(parsed["native"], true);
    assert_eq!(parsed["integral"], false);
    assert_eq!(parsed["native_basis"][0], "-");
    assert_eq!(parsed["change_of_basis"][1][1], "-14/5");
}

#[test]
fn reproduce_targets_exit_0() {
    for target in ["table1", "example_b3", "prop42"] {
        let out = descent(&["reproduce", target]);
        assert!(out.status.success(), "{target}");
        let text = stdout(&out);
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("descent-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("product.json");
    let out = descent(&[
        "product",
        "B2",
        "1",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"schema\": \"1\""));
    std::fs::remove_file(&path).ok();
}

#[test]
fn product_csv_format() {
    let out = descent(&["product", "B3", "1,3", "1,3", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("L,coefficient"));
    assert_eq!(lines.next(), Some("-,2"));
    assert_eq!(lines.next(), Some("1,1"));
    assert_eq!(lines.next(), Some("1,3,2"));
}
