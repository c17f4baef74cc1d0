use std::process::{Command, Output};

use serde_json::Value;

fn rhp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhp"))
        .args(args)
        .output()
        .expect("spawn rhp")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn coeffs_match_known_members() {
    let cases: [(&[&str], &str); 4] = [
        (
            &["coeffs", "--family", "rhp", "--n", "2", "--param", "1"],
            r#"["-2","0","6"]"#,
        ),
        (
            &["coeffs", "--family", "hermite", "--n", "1"],
            r#"["0","2"]"#,
        ),
        (
            &[
                "coeffs",
                "--family",
                "gegenbauer",
                "--n",
                "2",
                "--param",
                "2",
            ],
            r#"["-2","0","12"]"#,
        ),
        (
            &["coeffs", "--family", "rhp", "--n", "3", "--param", "1/1"],
            r#"["0","-24","0","24"]"#,
        ),
    ];
    for (args, want) in cases {
        let out = rhp(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim(), want, "{args:?}");
    }
}

#[test]
fn normalized_member_is_monic() {
    let out = rhp(&[
        "coeffs",
        "--family",
        "rhp",
        "--n",
        "2",
        "--param",
        "3",
        "--normalization",
        "normalized",
    ]);
    assert_eq!(stdout(&out).trim(), r#"["-1/7","0","1"]"#);
}

#[test]
fn eval_prints_one_value() {
    let out = rhp(&[
        "eval", "--family", "rhp", "--n", "2", "--param", "1", "--x", "1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), r#""-1/2""#);
}

#[test]
fn series_sides_agree() {
    let out = rhp(&[
        "--order",
        "4",
        "series",
        "--kind",
        "genfunc-rhp",
        "--param",
        "2",
        "--x",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["series"], serde_json::json!(["1", "0", "-1", "0", "3/4"]));
    assert_eq!(v["equal"], Value::Bool(true));

    let out = rhp(&[
        "--order",
        "0",
        "series",
        "--kind",
        "genfunc-rhp",
        "--param",
        "2",
        "--x",
        "0",
    ]);
    assert_eq!(json(&out)["series"], serde_json::json!(["1"]));

    let out = rhp(&[
        "series", "--kind", "feldheim", "--param", "2", "--cos", "3/5", "--sin", "4/5",
    ]);
    assert_eq!(json(&out)["equal"], Value::Bool(true));
}

#[test]
fn turan_reports_closed_form() {
    let out = rhp(&["turan", "--family", "rhp", "--n", "1", "--param", "2"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"determinant":"-1/5","closed_form":"-1/5","equal":true}"#
    );
    let out = rhp(&[
        "turan",
        "--family",
        "gegenbauer",
        "--n",
        "2",
        "--param",
        "3",
    ]);
    assert_eq!(json(&out)["equal"], Value::Bool(true));
    let out = rhp(&["turan", "--family", "rhp", "--n", "0", "--param", "5"]);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"determinant":"1","closed_form":"1","equal":true}"#
    );
}

#[test]
fn verify_report_shape() {
    let out = rhp(&[
        "--n-max", "4", "--params", "2,3", "verify", "--suites", "nagel",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["version", "config", "results", "summary"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 10);
    assert_eq!(v["summary"]["passed"], 10);
    let first = &v["results"][0];
    let keys: Vec<&str> = first
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        ["name", "params", "passed", "skipped", "witness", "notes"]
    );
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "--n-max",
        "4",
        "--params",
        "2,7/2",
        "verify",
        "--suites",
        "nagel,cnix,turan-rhp",
    ];
    let a = rhp(&args);
    let b = rhp(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_text_formats() {
    let out = rhp(&[
        "--format", "csv", "--n-max", "1", "--params", "2", "verify", "--suites", "nagel",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,params,status,witness,notes"));
    assert_eq!(lines.next(), Some("nagel,N=2;n=0,pass,,"));

    let out = rhp(&[
        "--format", "text", "--n-max", "2", "--params", "2", "verify", "--suites", "nagel",
    ]);
    assert!(stdout(&out)
        .trim_end()
        .ends_with("3 checks: 3 passed, 0 failed, 0 skipped"));
}

#[test]
fn injected_fault_fails_with_witness() {
    let out = rhp(&[
        "--inject-fault",
        "family:rhp:2:0",
        "--n-max",
        "3",
        "--params",
        "2",
        "verify",
        "--suites",
        "nagel",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let failed: Vec<&Value> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["passed"] == false && r["skipped"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|r| r["witness"]
        .as_array()
        .is_some_and(|w| w.iter().any(|c| c != "0"))));
}

#[test]
fn exit_codes() {
    assert_eq!(rhp(&["verify", "--suites", "none"]).status.code(), Some(2));
    assert_eq!(
        rhp(&["coeffs", "--family", "rhp", "--n", "2", "--param", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rhp(&["coeffs", "--family", "hermite", "--n", "2", "--param", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rhp(&["--inject-fault", "bogus", "verify"]).status.code(),
        Some(2)
    );
    let pole = rhp(&["turan", "--family", "rhp", "--n", "2", "--param", "-1/2"]);
    assert_eq!(pole.status.code(), Some(3));
}
