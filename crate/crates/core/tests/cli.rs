use std::process::Command;

use superfn::cli::run;

fn sh(args: &str) -> (i32, String) {
    run(std::iter::once("superfn").chain(args.split(' ')))
}

fn with_expr(pre: &str, expr: &str) -> (i32, String) {
    let mut v: Vec<&str> = vec!["superfn"];
    v.extend(pre.split(' '));
    v.push(expr);
    run(v)
}

#[test]
fn nilpotent_sphere_function_is_zero() {
    let (code, out) = with_expr("--m 1 --n 1 --json iszero", "(1-r)^2");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "zero");
    assert!(v["failure_bound"].as_f64().unwrap() < 2f64.powi(-40));
}

#[test]
fn generator_is_nonzero() {
    let (code, out) = sh("--m 1 --n 1 iszero t[1,1]");
    assert_eq!(code, 0);
    assert!(out.starts_with("nonzero"), "{out}");
}

#[test]
fn verify_t51_passes() {
    let (code, out) = sh("--m 1 --n 2 --json verify --suite t51");
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "t51");
    let case = &v["cases"][0];
    assert!(case["name"].is_string() && case["verdict"] == "pass");
}

#[test]
fn json_is_deterministic() {
    let a = sh("--m 2 --n 1 --seed 7 --json verify --suite maxrank");
    let b = sh("--m 2 --n 1 --seed 7 --json verify --suite maxrank");
    assert_eq!(a, b);
    let c = with_expr("--m 2 --n 1 --seed 7 --trials 5 --json iszero", "(1-r)^3");
    let d = with_expr("--m 2 --n 1 --seed 7 --trials 5 --json iszero", "(1-r)^3");
    assert_eq!(c, d);
    assert!(c.1.contains("\"trials\": 5"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(sh("--m 1 --n 1 frobnicate").0, 2);
    assert_eq!(with_expr("--m 1 --n 1 iszero", "t[1,1]*E[1,1]").0, 2);
    let (code, out) = with_expr("--m 1 --n 1 eval", "t[1,1] + ");
    assert_eq!(code, 2);
    assert!(out.contains("byte 9"), "{out}");
    assert_eq!(with_expr("--m 1 --n 1 eval", "t[1,5]").0, 2);
    assert_eq!(sh("--m 1 --n 1 verify --suite nope").0, 2);
    assert_eq!(sh("--m 1 --n 1 --profile 3 invariant r").0, 2);
}

#[test]
fn caps_exit_3() {
    assert_eq!(sh("--m 5 --n 5 sergeev --d 3").0, 3);
    assert_eq!(with_expr("--m 1 --n 1 iszero", "r^70").0, 3);
}

#[test]
fn failed_verification_exits_1() {
    // The naive eigenfunction coefficients are not eigenfunctions here.
    assert_eq!(sh("--m 1 --n 2 theta --k 2").0, 1);
    assert_eq!(sh("--m 1 --n 2 theta --k 2 --corrected").0, 0);
    assert_eq!(sh("--m 1 --n 2 theta --k 1").0, 0);
}

#[test]
fn eval_and_act() {
    // Odd letters: E21 E12 = −E12 E21 + E11 + E22.
    assert_eq!(with_expr("--m 1 --n 1 eval", "E[2,1]*E[1,2]").1, "E[1,1] - E[1,2]*E[2,1] + E[2,2]");
    assert_eq!(with_expr("--m 2 --n 0 eval", "E[2,1]*E[1,2]").1, "-1*E[1,1] + E[1,2]*E[2,1] + E[2,2]");
    assert_eq!(with_expr("--m 1 --n 1 eval", "t[1,2]*t[1,2]").1, "0");
    let (code, out) = run(["superfn", "--m", "2", "--n", "1", "act", "--side", "dR", "--elem", "E[1,2]", "--on", "t[3,2]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "t[3,1]");
}

#[test]
fn invariance_queries() {
    let (code, out) = sh("--m 2 --n 2 invariant --side dR r");
    assert_eq!(code, 0);
    assert!(out.starts_with("invariant"), "{out}");
    let (code, out) = sh("--m 2 --n 2 invariant --side dL t[1,1]");
    assert_eq!(code, 0);
    assert!(out.starts_with("not invariant"), "{out}");
    let (_, out) = sh("--m 2 --n 2 --profile 1,1|1,1 --json invariant --side dL C[1;2,3]");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["invariant"], true);
    assert_eq!(v["profile"], "1,1|1,1");
}

#[test]
fn laplacian_and_sergeev() {
    let (code, out) = sh("--m 2 --n 2 --json laplacian --k 2");
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"verdict\": \"zero\""));
    let (code, out) = sh("--m 1 --n 1 --json sergeev --d 2");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["invariant_dim"], 2);
    assert_eq!(v["sergeev_rank"], 2);
    assert_eq!(v["centralizer_equal"], true);
    assert_eq!(sh("--m 1 --n 1 sergeev --d 1 --perm 1").1, "1 [1, 1]\n1 [2, 2]");
}

#[test]
fn group_checks() {
    let (code, out) = sh("--m 1 --n 1 group --count 3 --real 2");
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("group: 8 cases, 0 failed"), "{out}");
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_superfn");
    let ok = Command::new(bin).args(["--m", "1", "--n", "1", "iszero", "(1-r)^2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("zero"));
    let bad = Command::new(bin).args(["--m", "1", "--n", "1", "iszero", "t[1,"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("parse error"));
}

#[test]
fn degree_cap_env_override() {
    let bin = env!("CARGO_BIN_EXE_superfn");
    let out = Command::new(bin)
        .env("SUPERFN_DEGREE_CAP", "2")
        .args(["--m", "1", "--n", "1", "iszero", "r^2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
