use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn mublab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mublab"))
        .args(args)
        .env_remove("MUBLAB_OUT")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn certify_seven_is_nonexistent() {
    let out = mublab(&["certify", "--p", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["report"]["verdict"], "NONEXISTENT");
    assert_eq!(v["report"]["branch"], "mersenne");
    assert_eq!(v["report"]["n"], 3);
    assert!(v["report"]["checks"].as_array().unwrap().iter().all(|c| c["outcome"] == "pass"));
    assert_eq!(v["config"]["tolerance"], 1e-9);
    assert!(v["tool_version"].is_string());
}

#[test]
fn certify_nine_is_a_usage_error() {
    let out = mublab(&["certify", "--p", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an odd prime"));
}

#[test]
fn certify_five_uses_the_cited_branch() {
    let v = json_of(&mublab(&["certify", "--p", "5", "--format", "json"]));
    assert_eq!(v["report"]["branch"], "not-mersenne");
    assert!(v["report"].get("n").is_none());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["certify", "--p", "3", "--restarts", "20", "--seed", "9", "--format", "json"];
    let a = mublab(&args);
    let b = mublab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn mub_build_verifies() {
    let out = mublab(&["mub", "build", "--d", "3", "--verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let ver = &v["report"]["verification"];
    assert!(ver["overlap_defect"].as_f64().unwrap() < 1e-9);
    assert!(ver["orthonormality_defect"].as_f64().unwrap() < 1e-9);
}

#[test]
fn impossible_tolerance_fails_the_check() {
    let out = mublab(&["mub", "build", "--d", "7", "--verify", "--tolerance", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["mub", "build", "--d", "4"][..],
        &["gf", "ops", "--q", "12"],
        &["scan", "--order", "30"],
        &["group", "build", "--q", "8", "--sylow", "5"],
        &["certify"],
        &["bogus"],
        &["mub", "ic", "--d", "3", "--tolerance", "-1"],
    ] {
        assert_eq!(mublab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn other_subcommands_succeed() {
    for args in [
        &["gf", "ops", "--q", "16"][..],
        &["gf", "ops", "--q", "9"],
        &["group", "build", "--q", "8", "--sylow", "7", "--kernel"],
        &["rep", "check", "--q", "8"],
        &["mub", "ic", "--d", "5"],
        &["cov", "qubit-witness"],
        &["scan", "--order", "12"],
    ] {
        let out = mublab(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn scan_names_a4_only() {
    let v = json_of(&mublab(&["scan", "--order", "12", "--format", "json"]));
    let faithful: Vec<&str> = v["report"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["faithful_degree_p"] == true)
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(faithful, ["A4"]);
}

#[test]
fn cov_check_round_trips_through_files() {
    let mub_path = scratch("qubit-mub.json");
    let group_path = scratch("qubit-group.json");
    let mub = json_of(&mublab(&["mub", "build", "--d", "2", "--format", "json"]));
    std::fs::write(&mub_path, mub["report"]["mub"].to_string()).unwrap();
    let witness = json_of(&mublab(&["cov", "qubit-witness", "--format", "json"]));
    std::fs::write(&group_path, witness["report"]["group"].to_string()).unwrap();

    let out = mublab(&["cov", "check", "--mub", mub_path.to_str().unwrap(), "--group", group_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // a single generator closes to a group that is too small
    let group: Value = serde_json::from_str(&std::fs::read_to_string(&group_path).unwrap()).unwrap();
    let one = Value::Array(vec![group[1].clone()]);
    std::fs::write(&group_path, one.to_string()).unwrap();
    let out = mublab(&["cov", "check", "--mub", mub_path.to_str().unwrap(), "--group", group_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let missing = mublab(&["cov", "check", "--mub", "/nonexistent.json", "--group", group_path.to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn output_goes_to_file_and_env_directory() {
    let file = scratch("certify-3.json");
    let out = mublab(&["certify", "--p", "3", "--output", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["report"]["p"], 3);

    let dir = scratch("env-out");
    let out = Command::new(env!("CARGO_BIN_EXE_mublab"))
        .args(["mub", "ic", "--d", "3"])
        .env("MUBLAB_OUT", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("mub-ic.json")).unwrap()).unwrap();
    assert_eq!(v["report"]["rank"], 9);
}
