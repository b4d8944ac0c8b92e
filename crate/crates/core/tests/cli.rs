//! End-to-end checks of the `gt` binary: output shape and exit codes.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn configs() -> String {
    format!("{}/configs", env!("CARGO_MANIFEST_DIR"))
}

fn gt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gt")).args(args).env_remove("GT_MAX_GROUP").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn schubert_polynomial_of_a_simple_reflection() {
    let v = json_of(&gt(&["schubert", "--mu", "3", "--sigma", "s1"]));
    assert_eq!(
        v,
        json!([
            {"coef": "2/3", "exp": {"1,1": 1}},
            {"coef": "-1/3", "exp": {"1,2": 1}},
            {"coef": "-1/3", "exp": {"1,3": 1}}
        ])
    );
}

#[test]
fn single_structure_constant() {
    let v = json_of(&gt(&["lr", "--mu", "3", "--sigma", "s1", "--tau", "s2", "--rho", "s1*s2"]));
    assert_eq!(v, json!({"coef": "1"}));
}

#[test]
fn group_lists_every_element() {
    let v = json_of(&gt(&["group", "--mu", "1,2"]));
    assert_eq!(v["order"], 2);
    assert_eq!(v["elements"].as_array().unwrap().len(), 2);
    assert_eq!(v["longest"], "s1");
}

#[test]
fn seed_normalizes_by_integer_shift() {
    let cfg = format!("{}/toy_mu2.json", configs());
    let v = json_of(&gt(&["seed", "--config", &cfg, "--point", "0,1"]));
    assert_eq!(v["seed"], json!(["0", "0"]));
    assert_eq!(v["shift"], json!([0, -1]));
}

#[test]
fn blocking_config_reports_a_failure_witness() {
    let cfg = format!("{}/blocking_mu1.json", configs());
    let v = json_of(&gt(&["gt-simplicity", "--config", &cfg, "--seed", "0"]));
    assert_eq!(v["verdict"], "fails");
    assert_eq!(v["z"], json!([1]));
    assert_eq!(v["sign"], "-");
}

#[test]
fn reachability_in_the_toy_module() {
    let cfg = format!("{}/toy_mu2.json", configs());
    let v = json_of(&gt(&["gt-reach", "--config", &cfg, "--seed", "0,0", "--to-z", "1,0"]));
    assert_eq!(v["reached"], true);
}

#[test]
fn missing_flag_is_a_usage_error() {
    let out = gt(&["schubert", "--mu", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_element_is_a_domain_error() {
    let out = gt(&["schubert", "--mu", "3", "--sigma", "s7"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "UnknownElement");
}

#[test]
fn group_bound_comes_from_the_environment() {
    let out =
        Command::new(env!("CARGO_BIN_EXE_gt")).args(["group", "--mu", "3"]).env("GT_MAX_GROUP", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotFinite");
}
