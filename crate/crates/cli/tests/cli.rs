use std::path::Path;
use std::process::{Command, Output};

fn hyperreg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperreg"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

const PASCH: &str = "3 6 4\n0 1 2\n0 3 4\n1 3 5\n2 4 5\n";

#[test]
fn found_certificate_verifies() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("pasch.txt"), PASCH).unwrap();
    let o = hyperreg(
        dir.path(),
        &["detect", "regular", "--r", "2", "pasch.txt", "--out", "c.toml"],
    );
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    assert!(text(&o.stdout).contains("outcome=found"));
    let v = hyperreg(dir.path(), &["verify", "c.toml", "pasch.txt"]);
    assert_eq!(code(&v), 0);
    assert!(text(&v.stdout).contains("outcome=valid"));
}

#[test]
fn corrupted_certificate_is_invalid() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("pasch.txt"), PASCH).unwrap();
    hyperreg(
        dir.path(),
        &["detect", "regular", "--r", "2", "pasch.txt", "--out", "c.toml"],
    );
    let cert = std::fs::read_to_string(dir.path().join("c.toml")).unwrap();
    std::fs::write(dir.path().join("bad.toml"), cert.replace("[0, 1, 2, 3]", "[0, 1, 2]")).unwrap();
    let v = hyperreg(dir.path(), &["verify", "bad.toml", "pasch.txt"]);
    assert_eq!(code(&v), 3, "{}", text(&v.stdout));
    assert!(text(&v.stdout).contains("outcome=invalid"));
}

#[test]
fn exhaustive_miss_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    hyperreg(dir.path(), &["gen", "sts", "--n", "9", "--out", "sts9.txt"]);
    let o = hyperreg(
        dir.path(),
        &["detect", "regular", "--r", "2", "--max-edges", "5", "sts9.txt"],
    );
    assert_eq!(code(&o), 1, "{}", text(&o.stderr));
}

#[test]
fn budget_exhaustion_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    hyperreg(dir.path(), &["gen", "sts", "--n", "31", "--out", "sts31.txt"]);
    let o = hyperreg(
        dir.path(),
        &["--budget", "10", "detect", "regular", "--r", "3", "sts31.txt"],
    );
    assert_eq!(code(&o), 2, "{}", text(&o.stderr));
}

#[test]
fn bad_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&hyperreg(dir.path(), &["gen", "sts", "--n", "8"])), 3);
    assert_eq!(code(&hyperreg(dir.path(), &["detect", "even", "missing.txt"])), 3);
    assert_eq!(code(&hyperreg(dir.path(), &["frobnicate"])), 3);
    std::fs::write(dir.path().join("junk.txt"), "3 2 1\n0 1 5\n").unwrap();
    assert_eq!(code(&hyperreg(dir.path(), &["detect", "even", "junk.txt"])), 3);
}

#[test]
fn artifact_on_stdout_without_out() {
    let dir = tempfile::tempdir().unwrap();
    let o = hyperreg(dir.path(), &["gen", "sts", "--n", "7"]);
    assert_eq!(code(&o), 0);
    let out = text(&o.stdout);
    assert!(out.starts_with("3 7 7"), "{out}");
    assert_eq!(out.lines().count(), 8);
    assert!(text(&o.stderr).contains("outcome=done"));
}

#[test]
fn json_report() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c4.txt"), "2 4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = hyperreg(dir.path(), &["--json", "oracle", "homcount", "--h", "2", "c4.txt"]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], "32");
}
