use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_belief-kernel"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scenario(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "scenarios", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes() {
    let ok = run(&["check", "--operator", "moderate", "--postulate", "IC1", "--signature-size", "2", "--mode", "exhaustive"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(v["status"], "holds");
    assert_eq!(v["checks_performed"], 19200);
    assert!(v.get("witness").is_none());

    let fails = run(&["check", "--operator", "trivial", "--postulate", "IND-C", "--signature-size", "2"]);
    assert_eq!(fails.status.code(), Some(1));
    let v = json(&fails);
    assert_eq!(v["status"], "fails");
    assert!(v["witness"]["state"]["ranks"].is_object());

    let bogus = run(&["check", "--operator", "natural", "--postulate", "BOGUS"]);
    assert_eq!(bogus.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bogus.stderr).contains("BOGUS"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["check", "--operator", "natural", "--postulate", "C1", "--signature-size", "3"],
        vec!["check", "--operator", "lex", "--postulate", "C1"],
        vec!["check", "--operator", "natural", "--postulate", "C1", "--mode", "sometimes"],
        vec!["enumerate", "--signature-size", "4"],
        vec!["frobnicate"],
        vec!["eval", "/nonexistent/scenario.json"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
    let out = bin()
        .env("BELIEF_KERNEL_WORKERS", "zero")
        .args(["enumerate", "--signature-size", "1", "--count-only"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn natural_resolves_by_postulate_flavor() {
    let out = run(&["check", "--operator", "natural", "--postulate", "R1", "--signature-size", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["operator"], "natural-revision");
    let out = run(&["check", "--operator", "natural", "--postulate", "C1", "--signature-size", "1"]);
    assert_eq!(json(&out)["operator"], "natural-contraction");
}

#[test]
fn sampled_check() {
    let args = [
        "check", "--operator", "moderate", "--postulate", "IC2", "--signature-size", "3", "--mode", "sampled",
        "--seed", "11", "--samples", "300",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["scope"]["seed"], 11);
}

#[test]
fn enumerate_counts() {
    for (size, count) in [("1", "3"), ("2", "75"), ("3", "545835")] {
        let out = run(&["enumerate", "--signature-size", size, "--count-only"]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), count);
    }
    let out = run(&["enumerate", "--signature-size", "2"]);
    let lines: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 75);
    assert_eq!(lines[0]["ranks"]["a b"], 0);
}

#[test]
fn counterexample_and_theorem() {
    let out = run(&["counterexample", "--operator", "trivial", "--postulate", "IND-C", "--signature-size", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["witness"].is_object());

    let out = run(&["counterexample", "--operator", "moderate", "--postulate", "C1", "--signature-size", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["witness"].is_null());

    for (op, thm) in [("moderate", "thm1"), ("natural", "prop34"), ("trivial", "thm1")] {
        let out = run(&["verify-theorem", "--operator", op, "--theorem", thm, "--signature-size", "2"]);
        assert_eq!(out.status.code(), Some(0), "{op} {thm}");
        assert_eq!(json(&out)["result"], "PASS");
    }
    let out = run(&["verify-theorem", "--operator", "moderate", "--theorem", "thm1"]);
    let groups = &json(&out)["relations"][0]["groups"];
    assert_eq!(groups.as_array().unwrap().len(), 6);
    assert!(groups.as_array().unwrap().iter().all(|g| g["status"] == "holds"));

    let out = run(&["verify-theorem", "--operator", "natural", "--theorem", "thm99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_empty_steps() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "empty.json", r#"{"signature":["a","b"],"initial":{"beliefs":"a"}}"#);
    let out = run(&["eval", &path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let trace = v["trace"].as_array().unwrap();
    assert_eq!(trace.len(), 1);
    assert_eq!(trace[0]["beliefs"]["formula"], "a & b | a & !b");
    assert_eq!(v["final"]["ranks"]["-a b"], 1);
}

#[test]
fn eval_running_example() {
    let out = run(&["eval", &scenario("running.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let step1 = &v["trace"][1];
    assert_eq!(step1["op"], "contract");
    assert_eq!(step1["beliefs"]["models"], serde_json::json!(["a b", "-a b"]));
}

#[test]
fn eval_party_query_flips() {
    let out = run(&["eval", &scenario("party.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["trace"][0]["queries"][0]["accepted"], true);
    assert_eq!(v["trace"][1]["queries"][0]["accepted"], false);
}

#[test]
fn eval_writes_out_file_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, workers) in [(&a, "1"), (&b, "4")] {
        let out = bin()
            .env("BELIEF_KERNEL_WORKERS", workers)
            .args(["eval", &scenario("penguin.json"), "--operator-revision", "lex", "--out"])
            .arg(p)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["revision"], "lex");
    assert_eq!(v["trace"][0]["queries"][0]["accepted"], true);
}

#[test]
fn eval_inconsistent_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad_init = write_temp(&dir, "init.json", r#"{"signature":["a"],"initial":{"beliefs":"a & !a"}}"#);
    assert_eq!(run(&["eval", &bad_init]).status.code(), Some(3));
    assert_eq!(run(&["eval", &scenario("inconsistent.json")]).status.code(), Some(3));

    let malformed = write_temp(&dir, "bad.json", r#"{"signature":["a"],"initial":{"beliefs":"a &"}}"#);
    assert_eq!(run(&["eval", &malformed]).status.code(), Some(2));
}
