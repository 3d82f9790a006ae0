use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finmagma")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn table_of_l5_2() {
    let o = run(&["table", "Ln(5,2)"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(2).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[2], "2 | 2 5 e 4 1 3");
}

#[test]
fn classify_reports_lagrange() {
    let o = run(&["classify", "N(Ln(5,3))"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "LAGRANGE=lagrange"));
}

#[test]
fn parse_errors_show_position() {
    let o = run(&["build", "Ln(5;2)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("at 4"), "{err}");
    assert!(err.contains("    ^"), "{err}");
}

#[test]
fn verify_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wip.txt");
    let o = run(&["verify", "T-wip", "--range", "5..=21", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("[T-wip]\nsource=library\nrange=5..=21\nstatus=pass\n"));
}

#[test]
fn mutant_run_exits_nonzero() {
    let o = run(&["verify", "T-golden", "--mutant", "cell-shift"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL T-golden"));
}

#[test]
fn unknown_check_is_an_error() {
    let o = run(&["verify", "T-nothing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let o = run(&["verify-all", "--out", p.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stdout(&o));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn subs_props_scan() {
    let o = run(&["subs", "U(N(Set(5;mul;1,2,3,4)),C(9))", "--flavor", "neutrosophic", "--deficit"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("count="));
    let o = run(&["props", "Zn(2,3;10;Z)"]);
    assert!(stdout(&o).contains("kind=groupoid"));
    let o = run(&["scan", "Ln", "--n-range", "5..=9"]);
    assert!(stdout(&o).contains("n=9 count=3 formula=3"));
}
