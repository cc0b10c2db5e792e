use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detkrs"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_detkrs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hilbert_of_rank_one_3x3() {
    let v = json_of(&run(&[
        "--format", "json", "hilbert", "-m", "3", "-n", "3", "-t", "2", "--degree", "3",
    ]));
    assert_eq!(v["numerator"], json!([1, 4, 1]));
    assert_eq!(v["denominator_degree"], 5);
    assert_eq!(v["multiplicity"], 6);
    assert_eq!(v["dimension"], 5);
    assert_eq!(v["hilbert_function"], json!(["1", "9", "36", "100"]));
    assert_eq!(v["schema"], 1);
}

#[test]
fn krs_flags_and_file_agree() {
    let flags = json_of(&run(&[
        "--format",
        "json",
        "krs",
        "--left",
        "1 3 4 5;2 6",
        "--right",
        "1 2 3 4;1 5",
    ]));
    assert_eq!(flags["top"], json!([1, 2, 3, 4, 5, 6]));
    assert_eq!(flags["bottom"], json!([1, 1, 2, 3, 5, 4]));
    let input = r#"{"left":{"rows":[[1,3,4,5],[2,6]]},"right":{"rows":[[1,2,3,4],[1,5]]}}"#;
    let file = json_of(&run_stdin(
        &["--format", "json", "krs", "--file", "-"],
        input,
    ));
    assert_eq!(flags, file);
}

#[test]
fn krs_inverse_round_trip() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "krs-inverse",
        "--top",
        "1,2,3,4,5,6",
        "--bottom",
        "1,1,2,3,5,4",
    ]));
    assert_eq!(v["left"]["rows"], json!([[1, 3, 4, 5], [2, 6]]));
    assert_eq!(v["right"]["rows"], json!([[1, 2, 3, 4], [1, 5]]));
}

#[test]
fn krs_inverse_rejects_non_lex_array() {
    assert!(run(&["krs-inverse", "--top", "1,1", "--bottom", "3,2"])
        .status
        .success());
    let out = run(&["krs-inverse", "--top", "1,1", "--bottom", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn plucker_straightening() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "straighten",
        "--left",
        "1 2;1 2",
        "--right",
        "1 4;2 3",
        "-m",
        "2",
        "-n",
        "4",
    ]));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let find = |right: Value| {
        terms
            .iter()
            .find(|t| t["bitableau"]["right"]["rows"] == right)
            .unwrap()["coeff"]
            .clone()
    };
    assert_eq!(find(json!([[1, 3], [2, 4]])), "1");
    assert_eq!(find(json!([[1, 2], [3, 4]])), "-1");
    let oracle = json_of(&run(&[
        "--format",
        "json",
        "straighten",
        "--left",
        "1 2;1 2",
        "--right",
        "1 4;2 3",
        "-m",
        "2",
        "-n",
        "4",
        "--oracle",
    ]));
    assert_eq!(oracle["terms"], v["terms"]);
}

#[test]
fn symbolic_membership() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "membership",
        "--ideal",
        "I[2]^(2)",
        "--monomial",
        "1,1 2,2 3,3",
        "-m",
        "3",
        "-n",
        "3",
    ]));
    assert_eq!(v["member"], true);
    let v = json_of(&run(&[
        "--format",
        "json",
        "membership",
        "--ideal",
        "I[2]^(2)",
        "--monomial",
        "1,1 2,2",
        "-m",
        "3",
        "-n",
        "3",
    ]));
    assert_eq!(v["member"], false);
}

#[test]
fn shelling_certificate_is_valid() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "shelling",
        "-m",
        "3",
        "-n",
        "3",
        "-t",
        "2",
        "--certify",
    ]));
    assert_eq!(v["certificate"]["valid"], true);
    assert_eq!(v["order"].as_array().unwrap().len(), 6);
}

#[test]
fn multiplicity_routes_agree() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "multiplicity",
        "-m",
        "4",
        "-n",
        "4",
        "-t",
        "2",
    ]));
    assert_eq!(v["agree"], true);
    assert_eq!(v["determinant"], "20");
    assert_eq!(v["facets"], "20");
    assert_eq!(v["product"], "20");
}

#[test]
fn gorenstein_balanced_case() {
    let v = json_of(&run(&[
        "--format",
        "json",
        "gorenstein",
        "-m",
        "4",
        "-n",
        "4",
        "-t",
        "2",
    ]));
    assert_eq!(v["gorenstein"], true);
    assert_eq!(v["clause"], "d");
    assert_eq!(v["dimension"], 16);
    let v = json_of(&run(&[
        "--format",
        "json",
        "gorenstein",
        "-m",
        "3",
        "-n",
        "5",
        "-t",
        "2",
    ]));
    assert_eq!(v["gorenstein"], false);
}

#[test]
fn verify_all_passes_with_default_seed() {
    let out = run(&["verify", "--suite", "all", "--seed", "42"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 10);
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "--format",
        "json",
        "verify",
        "--suite",
        "krs,paths",
        "--max-degree",
        "3",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = [
        "--format", "json", "facets", "-m", "3", "-n", "4", "-t", "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["hilbert", "-m", "3", "-n", "3", "-t", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["krs", "--left", "1 2"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "membership",
            "--ideal",
            "I[2",
            "--monomial",
            "1,1",
            "-m",
            "2",
            "-n",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}
