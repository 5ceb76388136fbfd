use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn akh(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_akh"));
    cmd.args(args).env_remove("AKH_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("AKH_CACHE_DIR", dir);
    }
    cmd.output().expect("run akh")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn shape_str(v: &Value) -> String {
    serde_json::to_string(v).unwrap()
}

#[test]
fn enumerate_counts() {
    let v = json(&akh(&["enumerate", "--n", "3"], None));
    let counts: Vec<(String, u64)> = v["multipartitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| (shape_str(&m["shape"]), m["std_count"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        counts,
        vec![("[[3]]".to_string(), 1), ("[[2,1]]".to_string(), 2), ("[[1,1,1]]".to_string(), 1)]
    );

    let v = json(&akh(&["enumerate", "--ell", "2", "--n", "2"], None));
    let total: u64 = v["multipartitions"].as_array().unwrap().iter().map(|m| m["std_count"].as_u64().unwrap().pow(2)).sum();
    assert_eq!(total, 8);
}

#[test]
fn induce_two_one() {
    let v = json(&akh(&["induce", "--n", "3", "--mu", "[[2,1]]"], None));
    assert_eq!(v["ok"], Value::Bool(true));
    let text = v.to_string();
    for shape in ["[[3,1]]", "[[2,2]]", "[[2,1,1]]"] {
        assert!(text.contains(shape), "{shape} missing");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["induce", "--n", "2", "--mu", "[[2,1]]"],
        vec!["induce", "--n", "3", "--mu", "not json"],
        vec!["verify", "--n", "2", "--check", "nope"],
        vec!["verify", "--n", "2", "--preset", "generic", "--field", "rational", "--q", "3", "--Q", "2"],
        vec!["verify", "--n", "2", "--preset", "sideways"],
        vec!["verify", "--n", "2", "--field", "gfp:7", "--q", "2", "--Q", "1,2"],
        vec!["frobnicate"],
    ] {
        let out = akh(&args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn budget_refusal() {
    let out = akh(&["verify", "--n", "7", "--check", "relations"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn verify_is_byte_identical_with_a_warm_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--ell", "2", "--n", "2", "--field", "gfp:7", "--q", "2", "--Q", "1,2"];
    let cold = akh(&args, Some(dir.path()));
    assert!(cold.status.success(), "{}", String::from_utf8_lossy(&cold.stderr));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let warm = akh(&args, Some(dir.path()));
    assert!(warm.status.success());
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(json(&warm)["ok"], Value::Bool(true));
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = akh(&["enumerate", "--n", "2", "--out", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["params"]["n"], 2);
}

#[test]
fn layers_for_three_three_one() {
    let v = json(&akh(&["layers", "--n", "7", "--mu", "[[3,3,1]]"], None));
    let inv = v["inversions"].as_array().unwrap();
    assert!(inv.iter().any(|i| shape_str(&i["earlier"]) == "[[4,2,2]]"
        && shape_str(&i["dominated_by"]) == "[[4,3,1]]"
        && i["earlier_is_mu_plus_node"] == Value::Bool(false)));
}

#[test]
fn enumerate_empty() {
    let v = json(&akh(&["enumerate", "--n", "0"], None));
    let ms = v["multipartitions"].as_array().unwrap();
    assert_eq!(ms.len(), 1);
    assert_eq!(shape_str(&ms[0]["shape"]), "[[]]");
}

#[test]
fn induce_level_two() {
    let v = json(&akh(&["induce", "--ell", "2", "--n", "2", "--mu", "[[1],[1]]"], None));
    assert_eq!(v["ok"], Value::Bool(true));
    assert_eq!(v["inner"].as_array().unwrap().len(), 4);
}
