use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symspace")).args(args).env_remove("SYMM_SEED").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn show_starred_entry() {
    let out = run(&["catalog", "show", "3", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("3*. GL(2, R)/O(2)"));
    assert!(text.contains("S = ∪_{p=0}^{n} GL(n, R)/O(p, n−p)"));

    let json: Value = serde_json::from_str(&stdout(&run(&["catalog", "show", "3", "--n", "2", "--json"]))).unwrap();
    assert_eq!(json["star"], true);
    assert_eq!(json["mu"], -1);
    assert_eq!(json["U_D"], "O(2, 2)");
}

#[test]
fn unknown_entry_is_a_usage_error() {
    let out = run(&["catalog", "show", "99"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit"], 2);
    assert_eq!(run(&["dims", "45", "--p", "1", "--q", "1", "--r", "2", "--s", "0"]).status.code(), Some(2));
}

#[test]
fn verify_one_entry() {
    let out = run(&["verify", "8", "--trials", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("9 instances, 0 failed\n"));
}

#[test]
fn corrupted_registry_fails_verification() {
    let out = run(&["verify", "8", "--p", "1", "--q", "1", "--trials", "2", "--corrupt-ud"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_json_report() {
    let out = run(&["verify", "52", "--p", "1", "--q", "1", "--trials", "3", "--json"]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["instances"], 1);
    assert_eq!(report["failed"], 0);
    let checks = report["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "dimension identity" && c["passed"] == true));
}

#[test]
fn dims_of_entry_32() {
    assert_eq!(stdout(&run(&["dims", "32", "--n", "2"])), "(10, 4, 6)\n");
    let json: Value = serde_json::from_str(&stdout(&run(&["dims", "32", "--n", "2", "--json"]))).unwrap();
    assert_eq!(json["dim_space"], 6);
}

#[test]
fn sampling_is_deterministic() {
    let a = run(&["sample", "11", "--p", "1", "--q", "1", "--seed", "1"]);
    let b = run(&["sample", "11", "--p", "1", "--q", "1", "--seed", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["sample", "11", "--p", "1", "--q", "1", "--seed", "2"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_falls_back_to_the_environment() {
    let flag = run(&["sample", "49", "--p", "1", "--q", "1", "--r", "1", "--s", "0", "--seed", "5"]);
    let env = Command::new(env!("CARGO_BIN_EXE_symspace"))
        .args(["sample", "49", "--p", "1", "--q", "1", "--r", "1", "--s", "0"])
        .env("SYMM_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let point: Value = serde_json::from_slice(&flag.stdout).unwrap();
    assert!(point["label"].is_array());
}

#[test]
fn sampled_points_feed_the_double_ratio() {
    let dir = std::env::temp_dir().join(format!("symspace-dr-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = run(&["sample", "13", "--n", "1", "--seed", "3", "--count", "2", "--chart"]);
    let points: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let path = dir.join("points.json");
    std::fs::write(&path, serde_json::to_string(&points).unwrap()).unwrap();
    let dr = run(&["double-ratio", "13", "--n", "1", "--input", path.to_str().unwrap()]);
    assert_eq!(dr.status.code(), Some(0), "{}", String::from_utf8_lossy(&dr.stderr));
    let poly: Vec<Vec<String>> = serde_json::from_slice(&dr.stdout).unwrap();
    assert_eq!(poly.len(), 2);
}

#[test]
fn swapped_base_point_is_not_transverse() {
    let dir = std::env::temp_dir().join(format!("symspace-nt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let base = r#"{"entry":52,"q1":{"ring":"R","ambient_dim":2,"basis":[[["1"]],[["0"]]]},"q2":{"ring":"R","ambient_dim":2,"basis":[[["0"]],[["1"]]]}}"#;
    let swapped = r#"{"entry":52,"q1":{"ring":"R","ambient_dim":2,"basis":[[["0"]],[["1"]]]},"q2":{"ring":"R","ambient_dim":2,"basis":[[["1"]],[["0"]]]}}"#;
    let path = dir.join("points.json");
    std::fs::write(&path, format!("[{base},{swapped}]")).unwrap();
    let out = run(&["double-ratio", "52", "--p", "1", "--q", "1", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_json_lists_every_entry() {
    let rows: Vec<Value> = serde_json::from_str(&stdout(&run(&["catalog", "list", "--json"]))).unwrap();
    assert_eq!(rows.len(), 54);
    assert_eq!(rows.iter().filter(|r| r["star"] == true).count(), 10);
}
