use std::process::{Command, Output};

use serde_json::Value;

fn hypercut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercut"))
        .args(args)
        .env_remove("HYPERCUT_MAX_DIM")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_path_family() {
    let v = json(&hypercut(&["construct", "--n", "5", "--kind", "path", "--k", "3"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["family"]["size"], 3);
    assert_eq!(v["family"]["elements"][0], serde_json::json!(["10000", "11000", "01000"]));
    assert_eq!(v["isolated_vertex"], "00000");
    assert_eq!(v["verdict"], "ValidCut");
}

#[test]
fn construct_cycle_family() {
    let v = json(&hypercut(&["construct", "--n", "6", "--kind", "cycle", "--k", "6"]));
    assert_eq!(v["family"]["size"], 2);
}

#[test]
fn construct_range_error_names_precondition() {
    let out = hypercut(&["construct", "--n", "4", "--kind", "cycle", "--k", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n >= 5"));
}

#[test]
fn construct_output_is_stable() {
    let args = ["construct", "--n", "7", "--kind", "path", "--k", "20"];
    assert_eq!(hypercut(&args).stdout, hypercut(&args).stdout);
}

#[test]
fn construct_writes_out_file() {
    let path = std::env::temp_dir().join(format!("hypercut-{}.dot", std::process::id()));
    let out = hypercut(&[
        "construct", "--n", "4", "--kind", "path", "--k", "3", "--format", "dot", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("graph Q4 {"));
}

#[test]
fn oracle_c4_in_q3() {
    let v = json(&hypercut(&["oracle", "--n", "3", "--kind", "cycle", "--k", "4"]));
    assert_eq!(v["value"]["status"], "exact");
    assert_eq!(v["value"]["value"], 2);
    assert_eq!(v["witness"]["size"], 2);
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn oracle_reports_missing_small_cut() {
    let args = ["oracle", "--n", "4", "--kind", "path", "--k", "6", "--max-size", "1"];
    let v = json(&hypercut(&args));
    assert_eq!(v["message"], "no cut of size 1");
    assert_eq!(v["value"]["status"], "at-least");
    assert!(v["witness"].is_null());

    let mut exact = args.to_vec();
    exact.push("--exact");
    assert_eq!(hypercut(&exact).status.code(), Some(3));
}

#[test]
fn oracle_c8_in_q5() {
    let v = json(&hypercut(&["oracle", "--n", "5", "--kind", "cycle", "--k", "8", "--max-size", "3"]));
    assert_eq!(v["value"]["value"], 2);
}

#[test]
fn oracle_budget_and_ceiling() {
    let out = hypercut(&["oracle", "--n", "5", "--kind", "path", "--k", "6"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_hypercut"))
        .args(["oracle", "--n", "3", "--kind", "path", "--k", "3"])
        .env("HYPERCUT_MAX_DIM", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = hypercut(&["oracle", "--n", "3", "--kind", "cycle", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_gap_sweep() {
    let v = json(&hypercut(&["verify", "--scope", "budengs", "--nmax", "64"]));
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["rows"][0]["observed"], "0 violations []");
}

#[test]
fn verify_paths_match_oracle() {
    let v = json(&hypercut(&["verify", "--scope", "paths", "--nmax", "4"]));
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["check"] == "path-oracle" && r["n"] == 4 && r["k"] == 8));
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_power_of_two_table() {
    let out = hypercut(&["verify", "--scope", "power-of-two", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let table: Vec<&str> = text.lines().filter(|l| l.starts_with("power-of-two-table")).collect();
    assert_eq!(
        table,
        [
            "power-of-two-table,4,4,structure,2,2,pass,",
            "power-of-two-table,5,4,structure,3,3,pass,",
            "power-of-two-table,5,8,structure,2,2,pass,",
        ]
    );
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let a = hypercut(&["--jobs", "1", "verify", "--scope", "cycles", "--nmax", "5"]);
    let b = hypercut(&["--jobs", "4", "verify", "--scope", "cycles", "--nmax", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_plain_q3() {
    let out = hypercut(&["export-dot", "--n", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(" -- ").count(), 12);
    assert_eq!(text.lines().filter(|l| l.contains("[fillcolor=")).count(), 8);
}

#[test]
fn export_c4_removal_leaves_one_component() {
    let out = hypercut(&["export-dot", "--n", "3", "--remove", "000,100,110,010"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 removed, 1 components"));
    assert_eq!(text.matches("shape=box").count(), 4);
}

#[test]
fn export_path_cut_isolates_origin() {
    let out = hypercut(&["export-dot", "--n", "4", "--kind", "path", "--k", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2 components: [1, "));
    assert!(text.contains("\"0000\" [fillcolor=\"#8dd3c7\", group=0]"));
}

#[test]
fn export_rejects_bad_vertex() {
    let out = hypercut(&["export-dot", "--n", "3", "--remove", "0102"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn property_test_needs_seed_and_repeats() {
    assert_eq!(hypercut(&["property-test"]).status.code(), Some(2));
    let args = ["property-test", "--seed", "9", "--trials", "300", "--nmax", "6"];
    let a = json(&hypercut(&args));
    assert_eq!(a["summary"]["failed"], 0);
    assert_eq!(a["parameters"]["seed"], 9);
    assert_eq!(hypercut(&args).stdout, hypercut(&args).stdout);
}
