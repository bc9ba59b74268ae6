use std::path::PathBuf;
use std::process::Command;

use qfrob::cli::{run, SymmetryFile};
use qfrob::hsym::builtin;

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("qfrob-cli-{}-{name}", std::process::id()))
}

fn qfrob(args: &[&str]) -> (String, i32) {
    let out = run(std::iter::once("qfrob").chain(args.iter().copied()));
    (out.stdout, out.code)
}

#[test]
fn birank_of_builtins() {
    let cases = [
        ("r2", "(2|0), series (1+t)^2"),
        ("r11", "(1|1), series (1+t)/(1-t)"),
        ("glN:3", "(3|0), series (1+t)^3"),
        ("glMN:2,1", "(2|1), series (1+t)^2/(1-t)"),
    ];
    for (name, expect) in cases {
        let (out, code) = qfrob(&["birank", name]);
        assert_eq!(code, 0, "{name}");
        assert!(out.contains(expect), "{name}: {out}");
    }
    let (out, _) = qfrob(&["birank", "r2"]);
    assert!(out.contains("dimensions 1,2,1,0,0"));
}

#[test]
fn check_builtins_exit_zero() {
    for name in ["r2", "r11"] {
        let (out, code) = qfrob(&["check", name]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("0 failed"), "{out}");
    }
}

#[test]
fn check_writes_json_report() {
    let path = tmp("report.json");
    let (_, code) = qfrob(&["check", "r11", "--mode", "spectral", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(json["summary"]["failed"], 0);
    assert_eq!(json["subject"], "r11");
    let skip = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "cayley_hamilton")
        .unwrap();
    assert_eq!(skip["status"], "skipped");
}

#[test]
fn export_round_trip() {
    let path = tmp("r11.json");
    let (_, code) = qfrob(&["export", "r11", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let file = SymmetryFile::read(&path).unwrap();
    assert_eq!(file.matrix().unwrap(), *builtin("r11").unwrap().r());
    let (out, code) = qfrob(&["birank", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("(1|1)"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn corrupted_file_fails_validation() {
    let mut file = SymmetryFile::from_symmetry(&builtin("r2").unwrap());
    file.entries[0][0] = "q^2".into();
    let path = tmp("bad.json");
    std::fs::write(&path, file.to_json()).unwrap();
    let (out, code) = qfrob(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] validate"), "{out}");
    assert!(out.contains("[SKIP]"), "{out}");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(qfrob(&["check", "nosuch"]).1, 2);
    let mut file = SymmetryFile::from_symmetry(&builtin("r2").unwrap());
    file.entries[0][0] = "q^".into();
    let path = tmp("syntax.json");
    std::fs::write(&path, file.to_json()).unwrap();
    assert_eq!(qfrob(&["birank", path.to_str().unwrap()]).1, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_qfrob"))
        .args(["birank", path.to_str().unwrap()])
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("entry (0, 0)"), "{err}");
}

#[test]
fn tables() {
    let (out, code) = qfrob(&["table", "characters", "--n", "3"]);
    assert_eq!(code, 0);
    for cell in ["q^2", "q - q^-1", "q^-2", "-q^-1"] {
        assert!(out.contains(cell), "{cell} missing from\n{out}");
    }
    let (out, code) = qfrob(&["table", "power-sums", "--family", "1,1", "--up-to", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("p_1 = (q^-1)*mu1 + (-q)*nu1"), "{out}");
    assert!(out.contains("= (mu1 + nu1)*p_1"), "{out}");
    let (out, code) = qfrob(&["table", "schur", "--family", "2,0", "--up-to", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("s_(1,1,1) = 0"), "{out}");
    assert_eq!(qfrob(&["table", "schur", "--family", "x"]).1, 2);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_qfrob")).args(["birank", "r11"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("(1|1)"));
    let out = Command::new(env!("CARGO_BIN_EXE_qfrob")).args(["check", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
