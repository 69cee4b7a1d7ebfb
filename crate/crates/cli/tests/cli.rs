use std::io::Write;
use std::process::{Command, Output, Stdio};

use cfpo::fixtures::*;
use cfpo::json::{parse_poset, to_json};
use cfpo::ColoredPoset;
use serde_json::Value;

fn run_with(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cfpo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(verb: &str, p: &ColoredPoset, extra: &[&str]) -> (i32, Value) {
    let mut args = vec![verb, "-"];
    args.extend_from_slice(extra);
    let out = run_with(&args, &to_json(p));
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn check_reports_cycles() {
    let (code, v) = run("check", &diamond(), &[]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "NotACFPO");
    assert_ne!(v["detail"]["first"], v["detail"]["second"]);
    let (code, v) = run("check", &bowtie(), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["cfpo"], true);
    assert_eq!(v["components"], 1);
}

#[test]
fn classify_fence() {
    let (code, v) = run("classify", &alt(5), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 5);
    assert_eq!(v["witness"]["images"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_bowtie() {
    let (code, v) = run("verify", &bowtie(), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["aut_preserved"], true);
    assert_eq!(v["roundtrip"], true);
}

#[test]
fn aut_orbits_fixed() {
    let (_, v) = run("aut", &bip22(), &[]);
    assert_eq!(v["order"], "4");
    let (_, v) = run("orbits", &lambda(), &["--k", "1"]);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    let (_, v) = run("fixed", &bip22(), &[]);
    assert!(v["fixed"].as_array().unwrap().is_empty());
    assert_eq!(v["completion_fixed"].as_array().unwrap().len(), 1);
    let (code, v) = run("orbits", &chain(4), &["--k", "1", "--materialise-bound", "3"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("TooLarge")));
}

#[test]
fn complete_lists_virtual_points() {
    let (code, v) = run("complete", &bip22(), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["virtual"].as_array().unwrap().len(), 1);
    assert_eq!(v["poset"]["elements"].as_array().unwrap().len(), 5);
}

#[test]
fn treeify_then_interpret() {
    for p in [bowtie(), hbar(), alt(4), antichain(2).disjoint_union(&lambda()).unwrap()] {
        let out = run_with(&["treeify", "-"], &to_json(&p));
        assert_eq!(out.status.code(), Some(0));
        let back = run_with(&["interpret", "-"], &String::from_utf8(out.stdout).unwrap());
        assert_eq!(back.status.code(), Some(0));
        assert_eq!(parse_poset(&String::from_utf8(back.stdout).unwrap()).unwrap(), p);
    }
}

#[test]
fn treeify_routes() {
    let (code, v) = run("treeify", &alt(4), &["--route", "even"]);
    assert_eq!(code, 0);
    assert_eq!(v["provenance"], "even_adjoin");
    let (code, v) = run("treeify", &alt(4), &["--route", "odd"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("NotOddClass")));
    let (code, v) = run("treeify", &bip22(), &["--root", "a"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("NotAFixedPoint")));
    let out = run_with(&["treeify", "-", "--dot"], &to_json(&bowtie()));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn dot_completed() {
    let out = run_with(&["dot", "-", "--completed"], &to_json(&bip22()));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("style=dashed").count(), 1);
}

#[test]
fn malformed_and_unknown() {
    let out = run_with(&["check", "-"], "{\"elements\": [1]}");
    assert_eq!(out.status.code(), Some(2));
    let out = run_with(&["frobnicate", "-"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = run_with(&["check", "-", "--bogus"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_streams_verdicts() {
    let out = run_with(&["enumerate", "--max-n", "4"], "");
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1 + 1 + 3 + 9);
    assert!(lines.iter().all(|l| l["verdict"]["roundtrip"] == true && l["verdict"]["aut_preserved"] == true));
}

#[test]
fn output_is_deterministic() {
    let a = run_with(&["treeify", "-"], &to_json(&hbar()));
    let b = run_with(&["treeify", "-"], &to_json(&hbar()));
    assert_eq!(a.stdout, b.stdout);
}
