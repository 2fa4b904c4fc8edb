use std::fs;
use std::process::{Command, Output};

use rclattice::{AdjunctRep, Lattice};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rclattice"))
        .args(args)
        .env_remove("CENSUS_CEILING")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn census_nullity_one_column() {
    let out = run(&["census", "--r", "2", "--k", "1", "--n", "4..8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,r,k,h,block,formula,oracle\n4,2,1,,,1,\n5,2,1,,,3,\n6,2,1,,,7,\n7,2,1,,,13,\n8,2,1,,,22,\n");
}

#[test]
fn census_both_columns() {
    let out = run(&["census", "--r", "5", "--k", "3", "--n", "8", "--mode", "both"]);
    assert_eq!(stdout(&out), "n,r,k,h,block,formula,oracle\n8,5,3,,,7,7\n");
    let out = run(&["census", "--r", "5", "--k", "3", "--h", "5", "--n", "9..10", "--mode", "oracle", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[0]["oracle"], 12);
    assert!(rows[0].get("formula").is_none());
}

#[test]
fn census_per_class() {
    let out = run(&["census", "--class", "B12", "--j", "9..11", "--mode", "both"]);
    assert_eq!(stdout(&out), "n,r,k,h,block,formula,oracle\n9,5,3,5,B12,1,1\n10,5,3,5,B12,6,6\n11,5,3,5,B12,22,22\n");
}

#[test]
fn unsupported_class_is_a_usage_error() {
    let out = run(&["census", "--r", "5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("supported"));
    assert_eq!(run(&["census", "--mode", "sideways"]).status.code(), Some(2));
}

#[test]
fn verify_reports_mismatches_through_exit_status() {
    let out = run(&["verify", "--n", "4..9"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["mismatched"], 1);
    let bad: Vec<_> = report["rows"].as_array().unwrap().iter().filter(|r| r["match"] == false).collect();
    assert_eq!(bad[0]["query"]["r"], 4);
    assert_eq!(bad[0]["formula"], "113");

    let out = run(&["verify", "--n", "4..8"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_empty_range_and_ceiling() {
    let out = run(&["verify", "--n", "9..8"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["checked"], 0);

    let out = Command::new(env!("CARGO_BIN_EXE_rclattice"))
        .args(["verify", "--n", "4..10"])
        .env("CENSUS_CEILING", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceiling"));
}

#[test]
fn verify_is_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    run(&["verify", "--n", "4..10", "--jobs", "1", "--out", a.to_str().unwrap()]);
    run(&["verify", "--n", "4..10", "--jobs", "3", "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(a).unwrap(), fs::read(b).unwrap());
}

#[test]
fn build_classify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let rep_path = dir.path().join("rep.json");
    let rep = AdjunctRep::chain(8).attach(0, 2, 1).attach(3, 5, 1).attach(5, 7, 1);
    fs::write(&rep_path, rep.to_json()).unwrap();

    let built = run(&["build", rep_path.to_str().unwrap()]);
    assert!(built.status.success());
    let lattice = Lattice::from_json(&stdout(&built)).unwrap();
    assert_eq!((lattice.size(), lattice.height()), (11, 7));

    let lattice_path = dir.path().join("lattice.json");
    fs::write(&lattice_path, stdout(&built)).unwrap();
    let out = run(&["classify", lattice_path.to_str().unwrap()]);
    let info: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(info["block_id"], "B29");
    assert_eq!((info["r"].as_u64(), info["k"].as_u64(), info["h"].as_u64()), (Some(5), Some(3), Some(7)));
    let reported = AdjunctRep::from_json(&info["rep"].to_string()).unwrap();
    assert!(reported.build().unwrap().is_isomorphic(&lattice));

    let dot = run(&["build", rep_path.to_str().unwrap(), "--format", "dot"]);
    let dot_path = dir.path().join("lattice.dot");
    fs::write(&dot_path, stdout(&dot)).unwrap();
    let again: serde_json::Value = serde_json::from_slice(&run(&["classify", dot_path.to_str().unwrap()]).stdout).unwrap();
    assert_eq!(again["block_id"], "B29");
}

#[test]
fn classify_diamond_and_non_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let diamond = dir.path().join("diamond.json");
    fs::write(&diamond, r#"{"n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]}"#).unwrap();
    let info: serde_json::Value = serde_json::from_slice(&run(&["classify", diamond.to_str().unwrap()]).stdout).unwrap();
    assert_eq!((info["r"].as_u64(), info["k"].as_u64()), (Some(2), Some(1)));
    assert!(info["block_id"].is_null());

    let bowtie = dir.path().join("bowtie.json");
    fs::write(&bowtie, r#"{"n": 4, "covers": [[0, 2], [0, 3], [1, 2], [1, 3]]}"#).unwrap();
    let out = run(&["classify", bowtie.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not a lattice"));
}

#[test]
fn bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.json");
    fs::write(&rep, r#"{"base": 2, "attach": [{"a": 0, "b": 1, "len": 1}]}"#).unwrap();
    let out = run(&["build", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid adjunct pair"));

    fs::write(&rep, "{\"base\": 3,\n \"attach\": [{\"a\": 0}]}").unwrap();
    let out = run(&["build", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn catalog_export() {
    let out = run(&["catalog"]);
    let entries: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(entries.as_array().unwrap().len(), 30);
    assert_eq!(entries[28]["height"], 7);

    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["catalog", "--dir", dir.path().to_str().unwrap()]).status.success());
    let dot = fs::read_to_string(dir.path().join("catalog.dot")).unwrap();
    assert_eq!(dot.matches("subgraph cluster_h").count(), 4);
    assert!(dir.path().join("catalog.json").exists());
}

#[test]
fn enumerate_writes_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("l.jsonl");
    let out = run(&["enumerate", "--n", "6", "--k", "1", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(out_path).unwrap();
    assert_eq!(text.lines().count(), 7);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let l = Lattice::from_json(&v["lattice"].to_string()).unwrap();
        assert_eq!(l.nullity().unwrap(), 1);
    }
    let blocks = run(&["enumerate", "--n", "8", "--k", "3", "--r", "5", "--blocks"]);
    assert_eq!(stdout(&blocks).lines().count(), 7);
    assert_eq!(run(&["enumerate", "--n", "40", "--k", "3"]).status.code(), Some(2));
}
