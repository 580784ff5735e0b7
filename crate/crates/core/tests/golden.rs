//! Regression against the committed reference values.

use std::io::Write;
use std::process::{Command, Stdio};

use secdef::certify::Certifier;
use secdef::linalg::Stream;
use secdef::zoo;

#[test]
fn catalog_reproduces_golden_values() {
    for e in zoo::catalog() {
        let want = zoo::expected(&e).expect("golden record");
        let got = zoo::compute_expected(&e, &Stream::new(0), &Certifier::default()).unwrap();
        assert_eq!(got, want, "{}", e.name);
    }
}

#[test]
fn severi_r_report_matches_fixture() {
    let bin = env!("CARGO_BIN_EXE_secdef");
    let map = Command::new(bin).args(["zoo", "severi", "R"]).output().unwrap();
    assert!(map.status.success());
    let mut child = Command::new(bin)
        .args(["analyze", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&map.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let fixture = include_str!("fixtures/severi_R_report.json");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), fixture);
}
