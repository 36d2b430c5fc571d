use std::process::{Command, Output};

use serde_json::Value;

fn elchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elchi")).args(args).output().expect("spawn elchi")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(elchi(&["verify", "lemma35"]).status.code(), Some(0));
    assert_eq!(elchi(&["verify", "lemma22"]).status.code(), Some(0));
    assert_eq!(elchi(&["verify", "lemma32"]).status.code(), Some(1));
    let unknown = elchi(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("no-such-suite"));
    assert_eq!(elchi(&["verify"]).status.code(), Some(2));
    assert_eq!(elchi(&["verify", "lemma35", "--order", "0"]).status.code(), Some(2));
    assert_eq!(elchi(&["verify", "lemma35", "--corrupt", "1,1"]).status.code(), Some(2));
    assert_eq!(elchi(&["verify", "prop33", "--corrupt", "x"]).status.code(), Some(2));
}

#[test]
fn verify_json_is_sorted_and_stable() {
    let a = stdout(&elchi(&["verify", "lemma22"]));
    let b = stdout(&elchi(&["verify", "lemma22"]));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["suite"], "lemma22");
    assert_eq!(v["pass"], true);
    let report = &v["reports"][0];
    assert_eq!(report["discrepancies"], serde_json::json!([]));
    let keys: Vec<&String> = report.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.find("\"discrepancies\"").unwrap() < a.find("\"identity\"").unwrap());
}

#[test]
fn verify_writes_out_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("elchi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.csv");
    let o = elchi(&["verify", "lemma34", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("suite,identity,required,pass,case,key,expected,actual\n"));
    assert!(csv.lines().skip(1).all(|l| l.starts_with("lemma34,")));
    std::fs::remove_dir_all(&dir).unwrap();

    let text = stdout(&elchi(&["verify", "lemma32", "--format", "text"]));
    assert!(text.starts_with("FAIL lemma32"));
    assert!(text.contains("n=1 @ 1"));
}

#[test]
fn negative_control_names_the_key() {
    let o = elchi(&["verify", "prop33", "--order", "4", "--corrupt", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["discrepancies"].as_array().unwrap())
        .filter_map(|d| d["key"].as_str())
        .collect();
    assert!(keys.contains(&"(chi)_1*(1-chibar)_2"), "{keys:?}");
}

#[test]
fn act_matches_hand_values() {
    let o = elchi(&["act", "--side", "lambda", "--element", "Jscript", "--on", "a1", "--format", "text"]);
    assert_eq!(stdout(&o), "(i)*a2\n");
    let o = elchi(&["act", "--side", "ell", "--element", "X", "--on", "chi*chibar - chibar", "--format", "text"]);
    assert_eq!(stdout(&o), "0\n");
    let v: Value = serde_json::from_str(&stdout(&elchi(&["act", "--side", "lambda", "--element", "1", "--on", "a1"]))).unwrap();
    assert_eq!(v, serde_json::json!([{"coeff": [{"hm": 0, "hp": 0, "im": "0", "k": 0, "re": "1", "z": 0}], "l": 0, "m": 1, "n": 0}]));
}

#[test]
fn act_rejects_bad_input() {
    let mix = elchi(&["act", "--side", "lambda", "--element", "a1*P1", "--on", "a1"]);
    assert_eq!(mix.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&mix.stderr).contains("cannot mix"));
    let syntax = elchi(&["act", "--side", "lambda", "--element", "P1 +", "--on", "a1"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("position 4"));
    assert_eq!(elchi(&["act", "--side", "lambda", "--element", "a1", "--on", "a2"]).status.code(), Some(2));
}

#[test]
fn pair_values() {
    assert_eq!(stdout(&elchi(&["pair", "--u", "E(2)", "--f", "a2", "--format", "text"])), "i*z\n");
    assert_eq!(stdout(&elchi(&["pair", "--u", "tau", "--f", "Th(3)", "--format", "text"])), "-(3*i)\n");
    let csv = stdout(&elchi(&["pair", "--u", "nu1", "--f", "a1", "--format", "csv"]));
    assert_eq!(csv, "re,im,z,hp,hm,k\n1,0,0,0,0,0\n");
}

#[test]
fn states_and_limits() {
    let v: Value = serde_json::from_str(&stdout(&elchi(&["state", "plane", "--order", "1"]))).unwrap();
    let keys: Vec<(u64, u64)> = v.as_array().unwrap().iter().map(|t| (t["p"].as_u64().unwrap(), t["q"].as_u64().unwrap())).collect();
    assert_eq!(keys, [(0, 0), (0, 1), (1, 0)]);
    let csv = stdout(&elchi(&["state", "angular", "--order", "1", "--r", "-1", "--format", "csv"]));
    assert!(csv.starts_with("p,q,key,coeff\n"));

    let o = elchi(&["limit", "plane", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["pass"], true);
    assert_eq!(v["limit"].as_array().unwrap().len(), 10);
    let o = elchi(&["limit", "angular", "--order", "6", "--r", "2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}
