mod common;

use std::process::Command;

use common::{cli, data};
use f4g::certificate::{validate_with_pattern, CertificateDocument};
use f4g::named::gamma;
use f4g::parse_diagram_file;

fn path(name: &str) -> String {
    data(name).to_str().unwrap().to_owned()
}

#[test]
fn text_output() {
    let (code, out, _) = cli(&["check", "planar", &path("gamma.fcd")]);
    assert_eq!(code, 1);
    assert!(out.contains("obstruction gamma"), "{out}");
    let (code, out, _) = cli(&["check", "rp2", &path("gamma.fcd")]);
    assert_eq!(code, 0);
    assert!(out.contains("split d1=[] d2=[1]"), "{out}");
    let (code, out, _) = cli(&["check", "rp2", &path("p5.fcd")]);
    assert_eq!(code, 1);
    assert!(out.contains("obstruction gamma1"), "{out}");
}

#[test]
fn quiet_prints_nothing() {
    let (code, out, _) = cli(&["--quiet", "check", "planar", &path("delta.fcd")]);
    assert_eq!((code, out.as_str()), (1, ""));
}

#[test]
fn containment_commands() {
    let (code, out, _) = cli(&["--json", "sminor", &path("delta.fcd"), "--pattern", "gamma"]);
    assert_eq!(code, 0);
    let doc = CertificateDocument::from_json(&out).unwrap();
    let g = parse_diagram_file(&std::fs::read_to_string(data("delta.fcd")).unwrap())
        .unwrap()
        .graph();
    validate_with_pattern(&doc, &g, Some(&gamma())).unwrap();
    assert_eq!(cli(&["minor", &path("delta.fcd"), "--pattern", "gamma"]).0, 1);
    assert_eq!(cli(&["minor", &path("p5.fcd"), "--pattern", "odd_gon(1)"]).0, 0);
    assert_eq!(cli(&["minor", &path("p5.fcd"), "--pattern", &path("gamma1.fcd")]).0, 0);
}

#[test]
fn circuit_prints_a_diagram_file() {
    let (code, out, _) = cli(&["circuit", &path("p5.fcd")]);
    assert_eq!(code, 0);
    let back = parse_diagram_file(&out).unwrap();
    let orig = parse_diagram_file(&std::fs::read_to_string(data("p5.fcd")).unwrap()).unwrap();
    assert!(f4g::is_isomorphic(&back.graph(), &orig.graph()));
}

#[test]
fn malformed_input_reports_position() {
    let dir = std::env::temp_dir().join(format!("f4g-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.fcd");
    std::fs::write(&bad, "fcd 1\nn 2\n1 2 1 2\n0 7\n").unwrap();
    let (code, _, err) = cli(&["check", "planar", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4, column 3"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_f4g");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["check", "planar", &path("gamma.fcd")]), Some(1));
    assert_eq!(status(&["check", "rp2", &path("gamma.fcd")]), Some(0));
    assert_eq!(status(&["check", "rp2", &path("gamma1.fcd")]), Some(1));
    assert_eq!(status(&["check", "nonsense"]), Some(2));
    let out = Command::new(bin)
        .args(["enumerate", "--chords", "3", "--verify"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 disagreements over 37 diagrams"));
}
