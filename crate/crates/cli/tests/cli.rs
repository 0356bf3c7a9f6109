use std::process::Command;

use lrpk_cli::{run, Output};
use serde_json::Value;

const KAPPA: &str = r#"{"outer":[2,1],"inner":[1]}"#;

fn call(args: &[&str]) -> Output {
    call_with_stdin(args, "")
}

fn call_with_stdin(args: &[&str], stdin: &str) -> Output {
    let argv = std::iter::once("lrpk").chain(args.iter().copied());
    run(argv, &mut stdin.as_bytes())
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out.stdout))
}

#[test]
fn lr_coeff_cross_check() {
    let out = call(&["lr-coeff", "--lambda", "[2,1]", "--mu", "[2,1]", "--nu", "[3,2,1]", "--cross-check"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), r#"{"coefficient":2,"routes_agree":true}"#);

    let out = call(&["lr-coeff", "--lambda", "[1]", "--mu", "[2]", "--nu", "[2,1]"]);
    assert_eq!(out.stdout.trim(), r#"{"coefficient":1}"#);
    let out = call(&["lr-coeff", "--lambda", "[1,2]", "--mu", "[2]", "--nu", "[2,1]"]);
    assert_eq!(out.code, 2);
}

#[test]
fn picture_count() {
    let out = call(&["pictures", "--kappa1", KAPPA, "--kappa2", KAPPA, "--count-only"]);
    assert_eq!((out.code, out.stdout.trim()), (0, r#"{"count":2}"#));
    let stair = r#"{"outer":[3,2,1],"inner":[2,1]}"#;
    let out = call(&["pictures", "--kappa1", stair, "--kappa2", stair]);
    let v = json(&out);
    assert_eq!(v["count"], 6);
    assert_eq!(v["pictures"].as_array().unwrap().len(), 6);
}

#[test]
fn to_pair_then_to_picture_is_byte_identical() {
    let k1 = r#"{"outer":[3,2],"inner":[1]}"#;
    let k2 = r#"{"outer":[2,2,1],"inner":[1]}"#;
    let listing = json(&call(&["pictures", "--kappa1", k1, "--kappa2", k2]));
    let pictures = listing["pictures"].as_array().unwrap();
    assert!(!pictures.is_empty());
    for f in pictures {
        let text = serde_json::to_string(f).unwrap();
        let pair = call(&["to-pair", "--picture", &text]);
        assert_eq!(pair.code, 0, "{}", pair.stderr);
        let back = call(&["to-picture", "--kappa1", k1, "--kappa2", k2, "--pair", pair.stdout.trim()]);
        assert_eq!(back.code, 0, "{}", back.stderr);
        assert_eq!(back.stdout.trim(), text);
    }
}

#[test]
fn to_pair_example() {
    let swap = r#"{"domain":{"outer":[2,1],"inner":[1]},"codomain":{"outer":[2,1],"inner":[1]},"pairs":[[[1,2],[2,1]],[[2,1],[1,2]]]}"#;
    let v = json(&call(&["to-pair", "--picture", swap]));
    assert_eq!(v["first"]["rows"], serde_json::json!([[1, 2]]));
    assert_eq!(v["second"]["rows"], serde_json::json!([[1, 2]]));
}

#[test]
fn rsk_and_unrsk() {
    let out = call(&["rsk", "--array", r#"{"top":[1,1],"bottom":[2,1]}"#]);
    let v = json(&out);
    assert_eq!(v["P"]["rows"], serde_json::json!([[1, 2]]));
    assert_eq!(v["Q"]["rows"], serde_json::json!([[1, 1]]));
    let p = v["P"].to_string();
    let q = v["Q"].to_string();
    let back = json(&call(&["unrsk", "--p", &p, "--q", &q]));
    assert_eq!(back, serde_json::json!({"top":[1,1],"bottom":[2,1]}));
}

#[test]
fn stdin_input() {
    let out = call_with_stdin(&["rsk", "--array", "-"], r#"{"top":[1,2],"bottom":[1,2]}"#);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["P"]["rows"], serde_json::json!([[1], [2]]));
    let out = call_with_stdin(&["unrsk", "--p", "-", "--q", "-"], "{}");
    assert_eq!(out.code, 2);
}

#[test]
fn input_errors_exit_2() {
    let out = call(&["rsk", "--array", "{not json"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("malformed --array"));
    assert_eq!(json(&out)["status"], "error");
    assert_eq!(call(&["rsk", "--array", r#"{"top":[1,1],"bottom":[1,2]}"#]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    let out = call(&["verify", "--suite", "nope"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("nope"));
}

#[test]
fn verify_bumping_lemma() {
    let out = call(&["verify", "--suite", "bumping-lemma", "--seed", "7"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["suites"][0]["instances"]["instances"], 10_000);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn verify_roundtrip_default_bounds() {
    let v = json(&call(&["verify", "--suite", "roundtrip"]));
    assert_eq!(v["status"], "ok");
    let checked = v["payload"]["suites"][0]["instances"]["pictures"].as_u64().unwrap();
    assert!(checked >= 100, "{checked}");
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "all", "--seed", "3", "--outer-cells", "4", "--instances", "300"];
    let a = call(&args);
    let b = call(&args);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["payload"]["suites"].as_array().unwrap().len(), 6);
    let timed = json(&call(&["verify", "--suite", "rsk-bijection", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lrpk");
    let ok =
        Command::new(bin).args(["pictures", "--kappa1", KAPPA, "--kappa2", KAPPA, "--count-only"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap().trim(), r#"{"count":2}"#);
    let bad = Command::new(bin).args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let capped = Command::new(bin)
        .env("LRPK_MAX_CELLS", "2")
        .args(["pictures", "--kappa1", r#"{"outer":[3]}"#, "--kappa2", r#"{"outer":[3]}"#])
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}
