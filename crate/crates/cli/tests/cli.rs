use std::process::{Command, Output};

use serde_json::Value;

fn reslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslat")).args(args).env_remove("RESLAT_MAX_SIZE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn check_property_on_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = reslat(&["enumerate", "--chain", "--size", "3", "--require", "integral", "--emit", dir.path().to_str().unwrap()]);
    assert_eq!(emitted.status.code(), Some(0));
    assert!(stdout(&emitted).starts_with("2 models"));
    for i in 0..2 {
        let path = dir.path().join(format!("model-{i}.json"));
        let o = reslat(&["check", "--structure", path.to_str().unwrap(), "--property", "divisibility", "--json"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json(&o)["holds"], true);
    }
}

#[test]
fn failing_check_reports_witness() {
    let o = reslat(&["check", "--structure", "sugihara3", "--property", "integral", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["witness"].is_object());
    let o = reslat(&["check", "--structure", "godel3", "--equation", "x v y = e"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invalid_structure_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"size":2,"leq":[[1,1],[0,1]],"mul":[[0,1],[1,1]],"unit":1}"#).unwrap();
    let o = reslat(&["check", "--structure", path.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn residuals() {
    let o = reslat(&["residual", "--instance", "m1", "--a", "y", "--b", "x", "--json"]);
    assert_eq!(json(&o)["residual"], "e");
    let o = reslat(&["omon", "residual", "--instance", "s2", "--a", "[0,1,0]", "--b", "[1,0,0]", "--side", "right"]);
    assert_eq!(stdout(&o).trim(), "(1,0,0)/(0,1,0) = (1,0,0)");
    let o = reslat(&["residual", "--instance", "s2", "--a", "e", "--b", "[9,9,0]", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = reslat(&["residual", "--instance", "s2", "--a", "[0,0,1]", "--b", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ore_commands() {
    let o = reslat(&["ore", "cmp", "--f", "x;xy", "--g", "y", "--method", "witness", "--json"]);
    assert_eq!(json(&o)["order"], "=");
    let o = reslat(&["ore", "cmp", "--f", "[-1,0,0]", "--g", "e"]);
    assert_eq!(stdout(&o).trim(), "(-1,0,0) > (0,0,0)");
    let o = reslat(&["ore", "sigma", "--f", "x;xy"]);
    assert_eq!(stdout(&o).trim(), "σ((0,1,0)) = (0,1,0)");
    assert_eq!(reslat(&["ore", "verify", "--samples", "200"]).status.code(), Some(0));
}

#[test]
fn group_commands() {
    assert_eq!(stdout(&reslat(&["heis", "comm", "x", "y"])).trim(), "(0,0,1)");
    assert_eq!(stdout(&reslat(&["heis", "mul", "y", "x"])).trim(), "(1,1,1)");
    assert_eq!(stdout(&reslat(&["heis", "root", "[4,2,10]", "2"])).trim(), "(2,1,4)");
    assert_eq!(stdout(&reslat(&["s2", "cmp", "x", "y"])).trim(), "<");
    assert_eq!(reslat(&["s2", "member", "[0,0,1]"]).status.code(), Some(1));
    let o = reslat(&["dyadic", "claims", "--n", "12", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["rows"].as_array().unwrap().len(), 12);
    let o = reslat(&["omon", "hamvty", "--trunc", "8", "--json"]);
    assert_eq!(json(&o)["certified"], true);
}

#[test]
fn battery_single_claim_and_stability() {
    let args = ["verify-paper", "--only", "unique-roots", "--json"];
    let (a, b) = (reslat(&args), reslat(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["claims"][0]["status"], "pass");
}

#[test]
fn battery_skips_under_small_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(["verify-paper", "--samples", "50", "--json"])
        .env("RESLAT_MAX_SIZE", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let skipped = v["claims"].as_array().unwrap().iter().filter(|c| c["status"] == "skipped").count();
    assert_eq!(skipped, 4);
}

#[test]
fn battery_defect_fails_with_witness() {
    let o = reslat(&["verify-paper", "--only", "heisenberg-matrix", "--inject-defect", "heis-cross-term", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["claims"][0]["id"], "heisenberg-matrix");
    assert!(v["claims"][0]["witness"].is_string());
}

#[test]
fn usage_errors() {
    assert_eq!(reslat(&["verify-paper", "--only", "nope"]).status.code(), Some(2));
    assert_eq!(reslat(&["check", "--structure", "godel3", "--property", "nope"]).status.code(), Some(2));
    assert_eq!(reslat(&["enumerate", "--chain", "--size", "9"]).status.code(), Some(2));
    assert_eq!(reslat(&["frobnicate"]).status.code(), Some(2));
}
