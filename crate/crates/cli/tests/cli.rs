use std::process::{Command, Output};

use serde_json::Value;

fn easygram(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_easygram")).args(args).output().expect("binary runs")
}

fn result(args: &[&str]) -> Value {
    let out = easygram(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "easygram-output/1");
    doc["result"].clone()
}

#[test]
fn lists_noncrossing_partitions() {
    let r = result(&["partitions", "list", "--points", "4", "--class", "nc", "--format", "json"]);
    assert_eq!(r["count"], 14);
    assert_eq!(r["partitions"].as_array().unwrap().len(), 14);
    let r = result(&["partitions", "count", "--points", "4", "--class", "nc", "--blocks", "2"]);
    assert_eq!(r["count"], 6);
    let r = result(&["partitions", "count", "--colors", "obob", "--class", "cp2"]);
    assert_eq!(r["count"], 2);
}

#[test]
fn gram_determinant_at_three() {
    let r = result(&["gram", "det", "--category", "nc2", "--k", "6", "--n", "3"]);
    assert_eq!(r["value"], "6967296");
    assert_eq!(r["factored_agrees"], true);
    let r = result(&["gram", "det", "--category", "nc", "--k", "3", "--formula", "difrancesco", "--symbolic"]);
    assert_eq!(r["polynomial"], "N^10 - 6N^9 + 14N^8 - 16N^7 + 9N^6 - 2N^5");
    let r = result(&["gram", "det", "--category", "nc", "--k", "6", "--formula", "difrancesco", "--n", "3"]);
    assert_eq!(r["a_k"]["noncrossing"], 132);
    assert_eq!(r["a_k"]["all_partitions"], 130);
    let r = result(&["gram", "rank", "--category", "p", "--k", "4", "--n", "2"]);
    assert_eq!(r["rank"], 8);
}

#[test]
fn weingarten_commands() {
    let r = result(&["wg", "integrate", "--category", "p2", "--n", "3", "--exponents", "1111", "--rows", "1,1,2,2", "--cols", "1,1,2,2"]);
    assert_eq!(r["value"], "2/15");
    let r = result(&["wg", "char-moment", "--category", "p", "--n", "4", "--k", "2", "--s", "4"]);
    assert_eq!(r["moment"], "2");
    let r = result(&["--float", "wg", "matrix", "--category", "p", "--k", "2", "--n", "2"]);
    assert_eq!(r["matrix"][0][0], 0.5);
}

#[test]
fn oracle_commands() {
    let r = result(&["oracle", "law", "--group", "sn", "--n", "3"]);
    assert_eq!(r["closed_form_agrees"], true);
    assert_eq!(r["atoms"][0]["prob"], "1/3");
    let r = result(&["oracle", "fixdim", "--group", "sn", "--n", "5", "--k", "5"]);
    assert_eq!(r["fix_dim"], 52);
    let r = result(&["oracle", "trunc-law", "--group", "sn", "--n", "4", "--s", "2"]);
    assert_eq!(r["closed_form_agrees"], true);
    let r = result(&["oracle", "elements", "--group", "hns", "--n", "2", "--s", "3"]);
    assert_eq!(r["order"], 18);
}

#[test]
fn law_and_cumulant_commands() {
    let r = result(&["law", "moments", "--law", "poisson", "--t", "1", "--order", "5"]);
    assert_eq!(r["moments"], serde_json::json!(["1", "2", "5", "15", "52"]));
    let r = result(&["law", "invert", "--law", "semicircle", "--grid", "-1:1:0.5"]);
    assert!(r["max_deviation"].as_f64().unwrap() < 0.02);
    let r = result(&["cum", "bp", "--moments", "1,2,5,15,52"]);
    assert_eq!(r["moments"], serde_json::json!(["1", "2", "5", "14", "42"]));
    let r = result(&["cum", "classical", "--moments", "1,1", "--inverse"]);
    assert_eq!(r["moments"], serde_json::json!(["1", "2"]));
}

#[test]
fn jones_trefoil() {
    let r = result(&["jones", "--strands", "2", "--braid", "1 1 1"]);
    assert_eq!(r["jones"].to_string(), r#"{"q^1":1,"q^3":1,"q^4":-1}"#);
    let r = result(&["jones", "--strands", "3", "--braid", "1 -2 1 -2", "--check-markov", "5", "--seed", "7"]);
    assert_eq!(r["markov"]["passed"], true);
}

#[test]
fn csv_output() {
    let out = easygram(&["cum", "free", "--moments", "1,2,5", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,cumulants\n1,1\n2,1\n3,1\n");
}

#[test]
fn exit_codes() {
    let out = easygram(&["gram", "det", "--bogus"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(!out.stderr.is_empty());
    let out = easygram(&["gram", "det", "--category", "nc2", "--k", "40", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(err["error"].is_string() && err["detail"].is_string());
    let out = easygram(&["oracle", "fixdim", "--group", "dn", "--n", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    let args = ["jones", "--strands", "3", "--braid", "1 2 -1", "--check-markov", "8", "--seed", "11"];
    assert_eq!(easygram(&args).stdout, easygram(&args).stdout);
    let args = ["verify", "--suite", "oracle"];
    let (a, b) = (easygram(&args), easygram(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("easygram-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let out = easygram(&["tables", "--name", "jones", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("trefoil,2,1 1 1,q + q^3 - q^4"));
    std::fs::remove_dir_all(&dir).unwrap();
}
