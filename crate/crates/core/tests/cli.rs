use std::path::Path;
use std::process::{Command, Output};

fn inflata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_inflata"))
        .args(args)
        .env_remove("INFLATA_BUDGET_NODES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(out).trim()).expect("valid JSON")
}

#[test]
fn solve_complete_graph_json() {
    let out = inflata(&["--json", "solve", "--family", "kn:5", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["gamma"], 16);
    assert_eq!(v["prediction"]["basis"], "T8");
    assert_eq!(v["witness"].as_array().unwrap().len(), 16);
    // keys sorted and compact: re-serializing gives the same text
    assert_eq!(serde_json::to_string(&v).unwrap(), stdout(&out).trim());
}

#[test]
fn solve_from_file_matches_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let out = inflata(&["--json", "solve", "--graph", path.to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["gamma"], 10);
}

#[test]
fn discrepancy_exits_three() {
    let out = inflata(&["solve", "--family", "gpg:6,3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("gamma = 24"));
}

#[test]
fn infeasible_k_exits_one() {
    let out = inflata(&["solve", "--family", "cycle:5", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn budget_exits_two_with_interval() {
    let out = Command::new(env!("CARGO_BIN_EXE_inflata"))
        .args(["--json", "solve", "--family", "kn:6", "--k", "3"])
        .env("INFLATA_BUDGET_NODES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v.get("gamma").is_none());
    let iv = v["interval"].as_array().unwrap();
    assert!(iv[0].as_u64().unwrap() <= 18 && iv[1].as_u64().unwrap() >= 18);
}

#[test]
fn malformed_graph_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "p edge 3 1\ne 1 9\n").unwrap();
    let out = inflata(&["solve", "--graph", path.to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inflate_writes_graph_and_map() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("k4.inf");
    let out = inflata(&["inflate", "--family", "kn:4", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("p edge 12 "));
    let map = Path::new(&format!("{}.map", out_path.display())).to_path_buf();
    let map_text = std::fs::read_to_string(map).unwrap();
    assert_eq!(map_text.lines().filter(|l| !l.starts_with('c')).count(), 12);
}

#[test]
fn decompose_reports_certificate() {
    let out = inflata(&["--json", "decompose", "--family", "kn:4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "HLPM");
    assert_eq!(v["matching"].as_array().unwrap().len(), 2);
    assert_eq!(v["gamma_prediction"]["value"], 12);
}

#[test]
fn formula_and_compose() {
    let out = inflata(&["--json", "formula", "--family", "kn:6", "--k", "2"]);
    assert_eq!(json(&out)["value"], 12);
    let out = inflata(&["--json", "compose", "--cut-vertex", "8,8", "--k", "2"]);
    let v = json(&out);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(12), Some(16)));
    let out = inflata(&["compose", "--cut-edge", "8", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_text() {
    let out = inflata(&["bounds", "--family", "kn:4", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("interval: [12, 12]"));
}

#[test]
fn check_suite_reports_each_criterion() {
    let out = inflata(&["check", "--suite", "characterization"]);
    let text = stdout(&out);
    assert!(text.contains("criterion 3: PASS"));
    assert!(text.contains("criterion 4: PASS"));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_input_is_a_usage_error() {
    let out = inflata(&["solve", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
