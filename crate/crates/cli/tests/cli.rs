use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-census")).args(args).env_remove("CAYLEY_CENSUS_MAX_ORDER").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn count_z13_both_methods_agree() {
    let v = json(&["count", "--group", "Z13", "--degree", "4", "--mode", "weak", "--method", "both"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["method"], "both");
}

#[test]
fn report_has_documented_keys() {
    let v = json(&["count", "--group", "D4", "--degree", "3", "--method", "both"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in ["group", "order", "degree", "mode", "method", "count", "per_k", "agreement", "elapsed_ms"] {
        assert!(keys.contains(&key), "missing {key} in {keys:?}");
    }
    assert_eq!(keys.len(), 9);
    assert!(v["per_k"].is_object());
    assert!(v["elapsed_ms"].is_f64());
    let per_k_total: u64 = v["per_k"].as_object().unwrap().values().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(v["count"].as_u64().unwrap(), per_k_total);
}

#[test]
fn count_z9_examples() {
    assert_eq!(json(&["count", "--group", "Z9", "--degree", "2", "--mode", "equiv", "--method", "formula"])["count"], 3);
    assert_eq!(json(&["count", "--group", "Z9", "--degree", "3", "--mode", "weak", "--method", "formula"])["count"], 0);
}

#[test]
fn formula_only_report_has_null_agreement() {
    assert!(json(&["count", "--group", "Q8", "--degree", "2"])["agreement"].is_null());
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let args = ["count", "--group", "A4", "--degree", "4", "--mode", "equiv", "--method", "both"];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    assert_eq!(strip(json(&args)), strip(json(&args)));
}

#[test]
fn parallel_flag_gives_same_counts() {
    let one = json(&["table", "--group", "D6", "--parallel", "1"]);
    let four = json(&["table", "--group", "D6", "--parallel", "4"]);
    let counts = |v: &Value| v.as_array().unwrap().iter().map(|r| r["per_k"].clone()).collect::<Vec<_>>();
    assert_eq!(counts(&one), counts(&four));
}

#[test]
fn table_covers_every_degree() {
    let v = json(&["table", "--group", "Z2xZ4", "--mode", "equiv", "--method", "both"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["degree"], i + 1);
        assert_eq!(r["agreement"], true);
    }
}

#[test]
fn csv_round_trips() {
    let o = run(&["table", "--group", "S3", "--method", "both", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["group", "order", "degree", "mode", "method", "count", "per_k", "agreement", "elapsed_ms"]);
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 5);
    let j = json(&["table", "--group", "S3", "--method", "both"]);
    for (rec, row) in records.iter().zip(j.as_array().unwrap()) {
        assert_eq!(rec[2].parse::<u64>().unwrap(), row["degree"].as_u64().unwrap());
        assert_eq!(rec[5].parse::<u64>().unwrap(), row["count"].as_u64().unwrap());
        assert_eq!(&rec[7], "true");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["count", "--group", "Z5", "--degree", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn group_file_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.json");
    std::fs::write(&path, r#"{"n": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#).unwrap();
    let spec = format!("file:{}", path.display());
    let v = json(&["count", "--group", &spec, "--degree", "2", "--method", "both"]);
    assert_eq!(v["count"], json(&["count", "--group", "Z4", "--degree", "2", "--method", "both"])["count"]);
    assert_eq!(v["count"], 1);
}

#[test]
fn circulant_prime_13() {
    let v = json(&["circulant", "--prime", "13", "--max-degree", "6"]);
    let rows: Vec<(u64, u64)> = v.as_array().unwrap().iter().map(|r| (r["degree"].as_u64().unwrap(), r["weak"].as_u64().unwrap())).collect();
    assert_eq!(rows, [(2, 1), (4, 3), (6, 4)]);
}

#[test]
fn circulant_prime_5() {
    let v = json(&["circulant", "--prime", "5", "--max-degree", "2"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0]["degree"].as_u64(), rows[0]["weak"].as_u64()), (Some(2), Some(1)));
    assert!(rows[0]["erratum"].is_null());
}

#[test]
fn circulant_prime_7_carries_erratum_note() {
    let v = json(&["circulant", "--prime", "7", "--max-degree", "2"]);
    let row = &v.as_array().unwrap()[0];
    assert_eq!(row["weak"], 1);
    assert!(row["erratum"].as_str().unwrap().contains('2'));
    let o = run(&["circulant", "--prime", "7", "--max-degree", "2", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    let rec = reader.records().next().unwrap().unwrap();
    assert_eq!(&rec[2], "1");
    assert!(!rec[4].is_empty());
}

#[test]
fn composite_modulus_is_rejected() {
    let o = run(&["circulant", "--prime", "15", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["count", "--group", "Z9"][..],
        &["count", "--group", "Q9", "--degree", "2"],
        &["count", "--group", "Z9", "--degree", "0"],
        &["count", "--group", "Z9", "--degree", "2", "--mode", "strong"],
        &["frobnicate"],
        &["validate", "--max-order", "100"],
        &["validate", "--degrees", "5..2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn oracle_refuses_large_groups_unless_overridden() {
    let args = ["count", "--group", "Z26", "--degree", "2", "--method", "oracle"];
    assert_eq!(run(&args).status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_cayley-census")).args(args).env("CAYLEY_CENSUS_MAX_ORDER", "30").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], json(&["count", "--group", "Z26", "--degree", "2"])["count"]);
}

#[test]
fn validate_up_to_12_agrees() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let o = run(&["validate", "--max-order", "12", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert!(rows.len() > 100);
    assert!(rows.iter().all(|r| &r[6] == "true"));
}

#[test]
fn validate_up_to_16_small_degrees_agrees() {
    let o = run(&["validate", "--max-order", "16", "--degrees", "1..6", "--parallel", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains(" 0 disagree"));
}

#[test]
fn corrupted_moebius_is_detected() {
    let o = run(&["validate", "--max-order", "8", "--corrupt-moebius"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("DISAGREE"));
}
