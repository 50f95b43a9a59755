use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn decompose_one_block() {
    let o = qschur(&[
        "decompose",
        "--n",
        "2",
        "--r",
        "2",
        "--mu",
        "1,1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["summands"].as_array().unwrap().len(), 2);
    assert_eq!(v["direct_sum"], true);
    assert_eq!(v["seed"], 20_240_601);
}

#[test]
fn verify_passes_at_2_2() {
    let o = qschur(&["verify", "--n", "2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pass"], true);
}

#[test]
fn basis_csv_has_eight_rows() {
    let o = qschur(&["basis", "--n", "2", "--r", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 8);
}

#[test]
fn act_applies_words_right_to_left() {
    let o = qschur(&[
        "act",
        "--n",
        "2",
        "--r",
        "1",
        "--basis",
        "(0,0;1,0|0,0;0,0)",
        "--word",
        "F1,E1",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[1*v^0]*Phi(0,0;1,0|0,0;0,0)");
}

#[test]
fn oracle_check_agrees_and_refuses_large_r() {
    let o = qschur(&["oracle-check", "--n", "2", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["mismatches"].as_array().unwrap().len(), 0);
    let refused = qschur(&[
        "oracle-check",
        "--n",
        "2",
        "--r",
        "3",
        "--oracle-max-r",
        "2",
    ]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("refused"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        qschur(&["decompose", "--n", "2", "--r", "2", "--mu", "3,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qschur(&["act", "--n", "2", "--r", "1", "--basis", "junk", "--word", "E1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qschur(&[
            "act",
            "--n",
            "2",
            "--r",
            "1",
            "--basis",
            "(1,0;0,0|0,0;0,0)",
            "--word",
            "E2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(qschur(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qschur(&["basis", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn failed_certificate_exits_one_with_witness() {
    let o = qschur(&["decompose", "--n", "2", "--r", "3", "--mu", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    assert_eq!(v["extra_highest_weights"]["(2,1)"], 4);
    assert_eq!(v["complete"], true);
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let args = ["decompose", "--n", "3", "--r", "2", "--seed", "7"];
    let first = qschur(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = qschur(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
    assert_eq!(json(&first)["seed"], 7);
}

#[test]
fn derived_generator_closure_matches() {
    let a = qschur(&["decompose", "--n", "2", "--r", "2"]);
    let b = qschur(&[
        "decompose",
        "--n",
        "2",
        "--r",
        "2",
        "--include-derived-generators",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_tables() {
    let o = qschur(&["report", "--n", "2", "--r", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"(1,1)\",all,16"));
    assert!(out.contains("\"(1,1)\",\"(2,0)\",4"));
    let v = json(&qschur(&["report", "--n", "2", "--r", "2"]));
    assert_eq!(v["basis_size"], 32);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 3);
}
