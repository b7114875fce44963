use std::process::Command;

use serde_json::Value;

fn sostar(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sostar"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_sostar6_reports_five_claims() {
    let (code, stdout, _) = sostar(&["verify", "--suite", "sostar6"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("5 claims: 5 passed, 0 failed"), "{stdout}");
}

#[test]
fn verify_all_writes_deterministic_json() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let (code, stdout_a, _) = sostar(&["verify", "--suite", "all", "--json", a.to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout_a}");
    let (_, stdout_b, _) = sostar(&["verify", "--json", b.to_str().unwrap()]);
    assert_eq!(stdout_a, stdout_b);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());

    let v: Value = serde_json::from_str(&text).unwrap();
    let names: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["sostar2", "sostar4", "sostar6", "sostar8", "tables", "triality"]);
    assert!(v["tool_version"].is_string());
    for s in v["suites"].as_array().unwrap() {
        for c in s["claims"].as_array().unwrap() {
            assert_eq!(c["passed"], true, "{}", c["claim_id"]);
        }
    }
}

#[test]
fn verify_tables_lists_every_row() {
    let (code, stdout, _) = sostar(&["verify", "--suite", "tables"]);
    assert_eq!(code, 0);
    for id in ["tables.so_star.n=4", "tables.sp_star.n=3.p=2.q=1", "tables.sl_H.n=3"] {
        assert!(stdout.contains(id), "{id} missing from\n{stdout}");
    }
    assert!(stdout.contains("16 claims: 16 passed"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sostar(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(sostar(&["verify", "--tol", "0"]).0, 2);
    assert_eq!(sostar(&["export", "--family", "nope"]).0, 2);
    assert_eq!(sostar(&["export", "--family", "sostar"]).0, 2);
    assert_eq!(sostar(&[]).0, 2);
}

#[test]
fn export_families() {
    let (code, stdout, _) = sostar(&["export", "--family", "su31"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 15);
    assert_eq!(v["realization"], "complex-exact");

    let (_, stdout, _) = sostar(&["export", "--family", "sostar", "--n", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dimension"], 28);
    assert_eq!(v["killing_signature"], serde_json::json!([16, 12, 0]));

    let (_, stdout, _) = sostar(&["export", "--family", "sostar", "--n", "1"]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 1);
    assert_eq!(v["invariant_signature"], serde_json::json!([1, 0, 0]));
}

#[test]
fn export_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    let (code, _, _) = sostar(&["export", "--family", "spin26-v", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["labels"][0], "V01");
    assert_eq!(v["structure_constants"].as_array().unwrap().len() % 2, 0);
}
