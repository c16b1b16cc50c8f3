use std::io::Write;
use std::process::{Command, Output};

fn linkinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkinv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn qtilde_of_trefoil() {
    let o = linkinv(&["invariant", "qtilde", "torus2(3)"]);
    assert_eq!(o.status.code(), Some(0));
    let p = |s: &str| linkinv::rings::parse_poly(s).unwrap();
    let expected = &p("3") - &(&p("sp - sm") * &p("2 + sm"));
    assert_eq!(p(&stdout(&o)), expected);
}

#[test]
fn trefoil_homfly_and_v2() {
    let p = linkinv(&["invariant", "homfly", "braid:2:[1,1,1]"]);
    assert_eq!(p.status.code(), Some(0));
    let expected = linkinv::rings::parse_poly("2*v^2 + v^2*z^2 - v^4").unwrap();
    assert_eq!(linkinv::rings::parse_poly(&stdout(&p)).unwrap(), expected);
    let v = linkinv(&["invariant", "v2", "braid:2:[1,1,1]"]);
    assert_eq!(stdout(&v), "1");
}

#[test]
fn input_from_file_matches_inline() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "braid:3:[1,-2,1,-2]").unwrap();
    let path = format!("@{}", f.path().display());
    let a = linkinv(&["invariant", "kauffman", &path]);
    let b = linkinv(&["invariant", "kauffman", "braid:3:[1,-2,1,-2]"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_output_round_trips() {
    let o = linkinv(&["invariant", "homfly", "braid:2:[1,1,1]", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = linkinv(&["invariant", "homfly", "braid:2:[1,1,1]"]);
    let from_json = linkinv::rings::from_json(&stdout(&o)).unwrap();
    assert_eq!(from_json, linkinv::rings::parse_poly(&stdout(&text)).unwrap());
}

#[test]
fn output_is_deterministic() {
    let a = linkinv(&["invariant", "homfly-ad", "braid:2:[1,1,1]"]);
    let b = linkinv(&["invariant", "homfly-ad", "braid:2:[1,1,1]", "--memo", "off"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn truncated_adjoint_series() {
    let o = linkinv(&["invariant", "homfly-ad", "frame(torus2(3),-3)", "--truncate", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("-2 + 5*z^2 + z^4"), "{out}");
    assert!(out.ends_with("O(d^3)"), "{out}");
}

#[test]
fn tables() {
    let o = linkinv(&["table", "i-values", "-2..2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1], "-1\t-1");
    assert_eq!(lines[3], "1\t-1");
    let empty = linkinv(&["table", "qtilde-torus", "3..2"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(stdout(&empty).is_empty());
    assert_eq!(linkinv(&["table", "i-values", "0..500"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(linkinv(&["invariant", "homfly", "braid:2:[1,"]).status.code(), Some(2));
    assert_eq!(linkinv(&["invariant", "qtilde", "braid:2:[1,1,1]"]).status.code(), Some(2));
    assert_eq!(linkinv(&["invariant", "homfly", "@/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(linkinv(&["table", "i-values", "1-2"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = linkinv(&["invariant", "homfly-ad", "braid:2:[1,1,1]", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn verify_qtilde_suite_passes() {
    let o = linkinv(&["verify", "qtilde", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_reports_failed_printed_forms_with_exit_1() {
    let o = linkinv(&["verify", "conjecture"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("k3.z2_in_place_of_inverse"));
}
