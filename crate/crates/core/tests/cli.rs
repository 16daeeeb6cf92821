use std::io::Write;
use std::process::{Command, Output, Stdio};

fn blfsig(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_blfsig"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn emitted_family_spec_computes_through_stdin() {
    let spec = blfsig(&["family", "mgn", "-g", "2", "-n", "2", "--emit-spec"], None);
    assert!(spec.status.success());
    let out = blfsig(&["--format", "json", "compute", "-"], Some(&stdout(&spec)));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["signature"], -16);
    assert_eq!(v["meyer_path_signature"], -16);
    assert_eq!(v["euler"], 30);
    assert_eq!(v["homeomorphism"], "E(2) # 3(S²×S²)");
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&blfsig(&["phi", "-g", "3", "t7"], None)), "4/7\n");
    assert_eq!(stdout(&blfsig(&["sigma-loc", "-g", "2", "--cycle", "I"], None)), "-3/5\n");
    assert_eq!(stdout(&blfsig(&["sigma-loc", "-g", "3", "--cycle", "II:1"], None)), "1/7\n");
    let t = blfsig(&["tau", "-g", "1", "t1", "t2"], None);
    assert!(t.status.success());
    assert!(stdout(&t).trim().parse::<i64>().is_ok());
    let a = blfsig(&["abelianization", "-g", "3", "--cycle", "II_1"], None);
    assert_eq!(stdout(&a).trim(), "Z ⊕ Z/4");
}

#[test]
fn h_command_reports_decomposition() {
    let o = blfsig(&["h", "-g", "2", "--cycle", "I", "t5 t1^2"], None);
    assert!(o.status.success());
    // -2/5 + 2 * (-1/15)
    assert!(stdout(&o).starts_with("-8/15\n"), "{}", stdout(&o));
    assert!(stdout(&o).contains("(agrees)"));
    let bad = blfsig(&["h", "-g", "2", "--cycle", "I", "t4"], None);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let inconsistent = r#"{"spec_version": 1, "higher_fiber": [{"genus": 2}],
        "rounds": [{"component": 0, "cycle": {"type": "I"}, "monodromy": "t1"}]}"#;
    assert_eq!(blfsig(&["compute", "-"], Some(inconsistent)).status.code(), Some(1));
    assert_eq!(blfsig(&["compute", "/nonexistent/spec.json"], None).status.code(), Some(2));
    assert_eq!(blfsig(&["compute", "-"], Some("{\"spec_version\": 1}")).status.code(), Some(2));
    assert_eq!(blfsig(&["phi", "-g", "2", "t1^"], None).status.code(), Some(2));
    assert_eq!(blfsig(&["family", "nope", "-g", "1", "-n", "1"], None).status.code(), Some(2));
}

#[test]
fn verify_runs_small() {
    let o = blfsig(&["verify", "--samples", "5", "--max-genus", "2", "--seed", "7"], None);
    assert!(o.status.success(), "{}", stdout(&o));
}
