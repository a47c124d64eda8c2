use std::process::{Command, Output};

use serde_json::Value;

fn aqh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqh")).args(args).output().expect("run aqh")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn classify_g2_torus() {
    let v = json(&aqh(&["classify", "G2", "torus"]));
    assert_eq!(v["verdict"], "no_splitting");
    assert_eq!(v["certificates"].as_array().unwrap().len(), 0);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn classify_b3_u3() {
    let v = json(&aqh(&["classify", "B3", "A2#0"]));
    assert_eq!(v["verdict"], "so7_u3");
    assert_eq!(v["quaternionic_n"], "3");
    let c = &v["certificates"][0];
    assert_eq!(c["case"], "case_d3");
    assert_eq!(c["constraints"]["beta_norm2"], "3/4");
    let u3 = "[[1,-1,0],[-1,1,0],[1,0,-1],[-1,0,1],[0,1,-1],[0,-1,1]]";
    let v = json(&aqh(&["classify", "B3", u3]));
    assert_eq!(v["h_description"], "A2#0");
    let betas: Vec<&Value> = v["certificates"].as_array().unwrap().iter().map(|c| &c["beta"]).collect();
    assert!(betas.contains(&&serde_json::json!(["1/2", "1/2", "1/2"])));
}

#[test]
fn build_and_validate() {
    let v = json(&aqh(&["build", "C3"]));
    assert_eq!(v["roots"].as_array().unwrap().len(), 18);
    assert_eq!(v["highest_root"], serde_json::json!(["2", "0", "0"]));
    let v = json(&aqh(&["validate", "[[1,0],[-1,0],[0,1],[0,-1],[1,1],[-1,-1]]"]));
    assert_eq!(v["valid"], false);
    let v = json(&aqh(&["validate", r#"[[1,-1,0],[-1,1,0],[0,1,-1],[0,-1,1],[1,0,-1],[-1,0,1]]"#]));
    assert_eq!(v["valid"], true);
    assert_eq!(v["type"], "A2");
}

#[test]
fn subsystems_weights_split_wolf() {
    let v = json(&aqh(&["subsystems", "G2"]));
    assert_eq!(v["count"], 6);
    let v = json(&aqh(&["subsystems", "B2", "--no-dedup"]));
    assert_eq!(v["count"], 7);
    let v = json(&aqh(&["weights", "B2", "wolf"]));
    assert_eq!(v["dim_m"], 4);
    assert_eq!(v["symmetric"], true);
    let v = json(&aqh(&["split", "A1+A1", "torus"]));
    assert!(v["count"].as_u64().unwrap() >= 1);
    let v = json(&aqh(&["wolf", "G2"]));
    assert_eq!(v["type"], "A1+A1");
    assert_eq!(v["certificate"]["n"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(aqh(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(aqh(&["classify", "X9", "torus"]).status.code(), Some(1));
    assert_eq!(aqh(&["classify", "G2"]).status.code(), Some(1));
    assert_eq!(aqh(&["classify", "--max-rank", "5"]).status.code(), Some(1));
    assert_eq!(aqh(&["split", "A2", "[[1,-1,0]]"]).status.code(), Some(1));
    assert_eq!(aqh(&["build", "B3", "--format", "csv"]).status.code(), Some(1));
    assert_eq!(aqh(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let a = aqh(&["classify", "--max-rank", "3", "--include-products", "--jobs", "1"]);
    let b = aqh(&["classify", "--max-rank", "3", "--include-products", "--jobs", "4", "--cache-dir", cache]);
    let c = aqh(&["classify", "--max-rank", "3", "--include-products", "--cache-dir", cache]);
    assert!(a.status.success() && b.status.success() && c.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn table_and_csv() {
    let out = aqh(&["classify", "--max-rank", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let j = json(&aqh(&["classify", "--max-rank", "2"]));
    assert_eq!(text.lines().count(), j["pairs"].as_array().unwrap().len() + 1);
    let out = aqh(&["classify", "--max-rank", "2", "--format", "table", "--series", "G"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("wolf_space"));
    assert!(!text.contains("A2 "));
}
