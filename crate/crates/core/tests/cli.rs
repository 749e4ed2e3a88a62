use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crgames")).args(args).env("CRG_JOBS", "2").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn solve_examples() {
    let win = |args: &[&str]| json(args)["results"][0]["result"]["cops_win"].as_bool().unwrap();
    assert!(win(&["solve", "--named", "petersen", "--cops", "3", "--objective", "capture"]));
    assert!(!win(&["solve", "--named", "petersen", "--cops", "2", "--objective", "capture"]));
    assert!(win(&["solve", "--named", "c4", "--cops", "1", "--objective", "confine"]));
    assert!(win(&["solve", "--graph6", "Ch", "--cops", "1", "--objective", "capture"]));
}

#[test]
fn solve_dumps_traces() {
    let v = json(&["solve", "--named", "c5", "--cops", "2", "--dump-trace"]);
    let row = &v["results"][0];
    assert_eq!(row["play"]["target_reached"], true);
    assert!(row["chase"]["v"].as_array().unwrap().len() >= 2);
}

#[test]
fn invariants_examples() {
    let v = json(&["invariants", "--named", "dodecahedron"]);
    let r = &v["rows"][0];
    assert_eq!((r["c"].as_u64(), r["ccn"].as_u64()), (Some(3), Some(3)));
    assert!(r["tcn"].as_u64().unwrap() >= 2);

    let v = json(&["invariants", "--cographs", "5"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r["tcn"] == 1));

    let out = run(&["invariants", "--internal", "4", "--connected", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn verify_examples_and_exit_codes() {
    let v = json(&["verify", "order-chain", "--internal", "1..6"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["graphs"], 143);
    let v = json(&["verify", "girth-degree", "--named", "petersen"]);
    assert_eq!(v["checks"][0]["actual"], "3");
    let v = json(&["verify", "cograph-ccn8"]);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["claim"] == "exactly one order-8 class has ccn = 2" && c["pass"] == true));
}

#[test]
fn search_examples() {
    for target in ["p5free-ccn3", "planar-ccn3"] {
        let v = json(&["search", target, "--internal", "1..6"]);
        let notes = v["notes"].to_string();
        assert!(notes.contains("no counterexample found"), "{notes}");
        assert!(!notes.contains("proved"));
    }
    let v = json(&["search", "planar-ccn3", "--named", "dodecahedron"]);
    assert!(v["notes"].to_string().contains("above the 19-vertex bound"));
}

#[test]
fn gen_examples() {
    let lines = |args: &[&str]| String::from_utf8(run(args).stdout).unwrap().lines().count();
    assert_eq!(lines(&["gen", "cographs", "--n", "4", "--connected"]), 5);
    assert_eq!(lines(&["gen", "all", "--n", "3", "--connected"]), 2);
}

#[test]
fn gen_pipes_into_verify() {
    let gen = run(&["gen", "cographs", "--n", "8", "--connected"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_crgames"))
        .args(["verify", "cograph-ccn8", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let piped: Value = serde_json::from_slice(&out.stdout).unwrap();
    let internal = json(&["verify", "cograph-ccn8", "--cographs", "8"]);
    assert_eq!(piped["checks"], internal["checks"]);
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["verify", "train-chase", "--trials", "200", "--jobs", "1"]);
    let b = run(&["verify", "train-chase", "--trials", "200", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "no-such-suite"]), 2);
    assert_eq!(code(&["solve", "--cops", "1"]), 2);
    assert_eq!(code(&["solve", "--graph6", "C\u{1}", "--cops", "1"]), 2);
    assert_eq!(code(&["solve", "--named", "k5", "--cops", "9"]), 3);
    assert_eq!(code(&["gen", "all", "--n", "9"]), 3);
    // A duplicated class breaks the order-8 census.
    assert_eq!(code(&["verify", "cograph-ccn8", "--graph6", "GmY~tw", "--graph6", "GmY~tw"]), 1);
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("crgames-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(code(&["verify", "petersen", "--out", p]), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["name"], "petersen");
    std::fs::remove_file(path).unwrap();
}
