use serde_json::Value;
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("tauto-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn tauto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tauto")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = tauto(&a);
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn build_reports_vanishing_at_half() {
    let (r, code) = json(&["build", &instance("quadric_cone"), "--beta", "beta_half"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["result"]["nonzero"], false);
    let (r, _) = json(&["build", &instance("quadric_cone"), "--beta-e", "1"]);
    assert_eq!(r["report"]["result"]["nonzero"], true);
}

#[test]
fn report_body_is_deterministic() {
    let args = ["bfun", &instance("segre")];
    let (a, _) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(a["report"], b["report"]);
    assert_eq!(a["report"]["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn malformed_instance_exits_2() {
    let p = scratch("bad.json", "{ \"name\": \"x\", \"lie\": ");
    let out = tauto(&["build", &p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_character_exits_2() {
    let out = tauto(&["build", &instance("quadric_cone"), "--beta", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn veronese_non_divisor_exits_3() {
    let (r, code) = json(&["cycle", "--veronese", "2", "3"]);
    assert_eq!(code, 3);
    assert_eq!(r["report"]["status"], "error");
}

#[test]
fn slice_limit_exits_4() {
    let out = tauto(&[
        "profile",
        &instance("quadric_cone"),
        "--beta",
        "zero",
        "--cap",
        "6",
        "--slice-limit",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn non_cycle_exits_1_with_residual() {
    let c = scratch("c.txt", "# degree one\n[0] 1\n");
    let (r, code) = json(&["cycle", &instance("quadric_cone"), "--cochain", &c, "--beta", "zero"]);
    assert_eq!(code, 1);
    assert_eq!(r["report"]["result"]["is_cycle"], false);
    assert!(r["report"]["result"]["residual_terms"].as_u64().unwrap() > 0);
}

#[test]
fn text_output_for_lfd() {
    let out = tauto(&["lfd", &instance("lfd_synthetic")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("exception"), "{text}");
}

#[test]
fn selftest_passes() {
    let (r, code) = json(&["selftest"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["result"]["all_passed"], true);
}
