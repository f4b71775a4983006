use std::process::{Command, Output};

use serde_json::Value;

fn jordeform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordeform"))
        .args(args)
        .env_remove("JORDEFORM_DEFAULT_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn verify_hopf_h6_passes() {
    let o = jordeform(&[
        "verify",
        "--order",
        "4",
        "--suites",
        "hopf",
        "--algebra",
        "h6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("33 checks, 33 passed, 0 failed\n"));
}

#[test]
fn verify_at_order_zero_passes() {
    let o = jordeform(&["verify", "--order", "0", "--dim", "8", "--fb-degree", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("[fail]"));
}

#[test]
fn verify_rmatrix_json_records() {
    let o = jordeform(&[
        "verify",
        "--suites",
        "rmatrix",
        "--algebra",
        "schrodinger",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_passed"], Value::Bool(true));
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 8);
    let mut keys: Vec<&str> = records[0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    keys.sort();
    assert_eq!(
        keys,
        [
            "anchor",
            "identity",
            "millis",
            "residual_terms",
            "status",
            "suite"
        ]
    );
    let ids: Vec<&str> = records
        .iter()
        .map(|r| r["identity"].as_str().unwrap())
        .collect();
    assert_eq!(ids.iter().filter(|i| i.contains("sigma(Delta")).count(), 6);
    assert!(ids.iter().any(|i| i.contains("R12 R13 R23")));
    assert!(ids.iter().any(|i| i.contains("sigma(R)")));
    assert!(records
        .iter()
        .all(|r| r["suite"] == "rmatrix" && r["status"] == "pass"));
}

#[test]
fn json_report_is_stable_without_timing() {
    let args = [
        "verify",
        "--order",
        "2",
        "--suites",
        "bialgebra,hopf",
        "--format",
        "json",
        "--no-timing",
    ];
    let (a, b) = (jordeform(&args), jordeform(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--suites", "hopf,nope"][..],
        &["verify", "--dim", "0"],
        &["verify", "--algebra", "sl2"],
        &["verify", "--format", "yaml"],
        &["matrices", "--gen", "Q"],
        &["matrices", "--gen", "A+", "--algebra", "schrodinger"],
        &["frobnicate"],
    ] {
        assert_eq!(jordeform(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn order_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_jordeform"))
        .args([
            "verify",
            "--suites",
            "hopf",
            "--algebra",
            "h6",
            "--format",
            "json",
        ])
        .env("JORDEFORM_DEFAULT_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(json(&o)["order"], 2);
    let o = Command::new(env!("CARGO_BIN_EXE_jordeform"))
        .args(["verify", "--suites", "hopf"])
        .env("JORDEFORM_DEFAULT_ORDER", "two")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

fn radical(v: &Value) -> (i64, i64, i64) {
    (
        v["q_num"].as_i64().unwrap(),
        v["q_den"].as_i64().unwrap(),
        v["radicand"].as_i64().unwrap(),
    )
}

#[test]
fn normalized_b_plus_block() {
    let o = jordeform(&[
        "matrices",
        "--gen",
        "B+",
        "--dim",
        "5",
        "--basis",
        "normalized",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let e = &json(&o)["entries"];
    // <3|B+|0> = -sqrt(6) z, <4|B+|0> = 7/sqrt(6) z^2, <2|B+|0> = sqrt(2).
    assert_eq!(radical(&e[3][0][1]), (-1, 1, 6));
    assert_eq!(radical(&e[4][0][2]), (7, 6, 6));
    assert_eq!(radical(&e[2][0][0]), (1, 1, 2));
    assert_eq!(radical(&e[4][2][0]), (2, 1, 3));
    assert_eq!(radical(&e[0][2][0]).0, 0);
}

#[test]
fn m_is_the_identity() {
    let o = jordeform(&["matrices", "--gen", "M", "--dim", "4"]);
    assert_eq!(
        stdout(&o),
        "1  0  0  0\n0  1  0  0\n0  0  1  0\n0  0  0  1\n"
    );
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

#[test]
fn unnormalized_a_minus_matches_normalized_after_basis_change() {
    let run = |basis: &str| {
        json(&jordeform(&[
            "matrices", "--gen", "A-", "--dim", "5", "--basis", basis, "--format", "json",
        ]))
    };
    let (u, n) = (run("unnormalized"), run("normalized"));
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                let c = &u["entries"][i][j][k];
                let (num, den) = (
                    c["num"].as_i64().unwrap() as i128,
                    c["den"].as_i64().unwrap() as i128,
                );
                let (qn, qd, r) = radical(&n["entries"][i][j][k]);
                let (qn, qd, r) = (qn as i128, qd as i128, r as i128);
                // |i> = e_i / sqrt(i!), so the normalized entry is u * sqrt(i!/j!).
                assert_eq!(num.signum(), qn.signum(), "({i},{j}) z^{k}");
                assert_eq!(
                    qn * qn * r * den * den * factorial(j),
                    num * num * qd * qd * factorial(i),
                    "({i},{j}) z^{k}"
                );
            }
        }
    }
}

#[test]
fn table_dumps() {
    let h6 = stdout(&jordeform(&["tables", "--algebra", "h6"]));
    assert!(h6.contains("[A-,B-] = -z*A-^2\n"));
    let sch = stdout(&jordeform(&["tables", "--algebra", "schrodinger"]));
    assert!(sch.contains("[K,C] = -(z/2)*K^2\n"));
    let classical = stdout(&jordeform(&["tables", "--order", "0", "--algebra", "h6"]));
    assert!(classical.contains("[B+,B-] = -4*N - 2*M\n"));
    assert!(classical.contains("Delta(A+) = 1 (x) A+ + A+ (x) 1\n"));
    assert!(!classical.contains('z'));
}

#[test]
fn table_json_and_output_file() {
    let dir = std::env::temp_dir().join(format!("jordeform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tables.json");
    let o = jordeform(&[
        "tables",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let docs = v.as_array().unwrap();
    assert_eq!(docs.len(), 3);
    assert_eq!(docs[0]["algebra"], "h6_jordanian");
    assert_eq!(docs[0]["commutators"].as_array().unwrap().len(), 15);
    assert_eq!(docs[2]["antipodes"].as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
