use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gl3branch")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn list_as_json() {
    let (code, out, _) = run(&["list", "--M", "2", "--N", "2", "--bound", "4,4,4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], gl3branch::SCHEMA);
    assert!(v.to_string().contains("4,4,4") || v.to_string().contains("[4,4,4]"));
}

#[test]
fn intertwine_reports_irreducibility() {
    let (code, out, _) = run(&["intertwine", "--M", "2", "--N", "2", "--c", "2,3,3", "--d", "2,3,3", "--q0", "5"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["i_VV_display"], "2");
    assert_eq!(v["i_VV_at_q0"], "2");
}

#[test]
fn table_as_csv() {
    let (code, out, _) = run(&["table", "--M", "1", "--N", "2", "--sum-bound", "9", "--q0", "5"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("triple,dim_poly,dim_at_q0"));
    assert_eq!(lines.count(), 13);
}

#[test]
fn diagram_as_dot() {
    let (code, out, _) = run(&["diagram", "--M", "1", "--N", "2", "--sum-bound", "9"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("style=dashed").count(), 2);
}

#[test]
fn diagram_to_file() {
    let dir = std::env::temp_dir().join(format!("gl3branch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.dot");
    let (code, _, _) = run(&["diagram", "--M", "2", "--N", "2", "--bound", "4,4,4", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&path).unwrap().contains("c4_4_4"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_level_one() {
    let (code, out, _) = run(&["verify", "--p", "5", "--M", "0", "--N", "1", "--level", "1"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        &["dims", "--M", "3", "--N", "2", "--triple", "3,3,3"][..],
        &["dims", "--triple", "1,2"],
        &["intertwine", "--c", "2,1,1", "--d", "1,1,1"],
        &["verify", "--p", "4", "--level", "1"],
        &["list", "--bound", "1000,1,1"],
        &["no-such-command"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
