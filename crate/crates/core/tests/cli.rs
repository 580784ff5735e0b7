//! Command-line contracts: subcommands, formats and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_secdef");

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child =
        Command::new(BIN).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn zoo(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["zoo"];
    full.extend_from_slice(args);
    let out = run(&full, b"");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

#[test]
fn severi_h_pipeline_passes_every_verdict() {
    let map = zoo(&["severi", "--algebra", "H"]);
    let out = run(&["analyze", "--format", "json"], &map);
    assert_eq!(out.status.code(), Some(0));
    let report = secdef::report::parse_report(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(report.all_pass());
    for name in ["rank_restriction", "zak_bound", "clifford_relation", "so_membership", "tau_gauss_delta_plus_two"] {
        assert_eq!(report.verdict(name).unwrap().status, secdef::report::Status::Pass, "{name}");
    }
}

#[test]
fn text_report_has_one_line_per_verdict() {
    let map = zoo(&["segre", "3", "3"]);
    let text = run(&["analyze"], &map);
    let json = run(&["analyze", "--format", "json"], &map);
    let report = secdef::report::parse_report(std::str::from_utf8(&json.stdout).unwrap()).unwrap();
    let text = String::from_utf8(text.stdout).unwrap();
    let verdict_lines = text.lines().filter(|l| l.starts_with('[')).count();
    assert_eq!(verdict_lines, report.verdicts.len());
}

#[test]
fn reports_are_deterministic() {
    let map = zoo(&["grassmannian", "6"]);
    let a = run(&["analyze", "--format", "json", "--seed", "9"], &map);
    let b = run(&["analyze", "--format", "json", "--seed", "9"], &map);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let again = secdef::report::render(&secdef::report::parse_report(&text).unwrap(), secdef::report::Format::Json);
    assert_eq!(again, text);
}

#[test]
fn quadric_system_input_marks_oracles_unavailable() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/diagonal_6.json");
    let out = run(&["analyze", "--input", fixture, "--format", "json"], b"");
    assert_eq!(out.status.code(), Some(0));
    let report = secdef::report::parse_report(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert!(report.cross_checks.iter().all(|c| c.oracle.is_none()));
}

#[test]
fn malformed_input_exits_one_with_location() {
    let out = run(&["analyze"], b"{\"kind\": \"poly_map\",\n \"domain_dim\": }");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let out = run(&["analyze"], b"{\"kind\": \"surface\"}");
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["zoo", "segre", "1", "3"], b"");
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frobnicate"], b"");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_subcommands() {
    let cubic = zoo(&["veronese", "3", "1"]);
    let join = run(&["oracle", "join", "--k", "2"], &cubic);
    assert_eq!(String::from_utf8(join.stdout).unwrap(), "3\n");
    let tangent = run(&["oracle", "tangent"], &cubic);
    assert_eq!(String::from_utf8(tangent.stdout).unwrap(), "2\n");
}

#[test]
fn clifford_subcommand() {
    let map = zoo(&["severi", "O"]);
    let out = run(&["clifford"], &map);
    assert_eq!(out.status.code(), Some(0));
    let v: secdef::defect::CliffordVerdict = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.relation_holds);
    assert_eq!((v.module_dim, v.kernel_dim), (8, 7));
    let cubic = zoo(&["veronese", "3", "1"]);
    assert_eq!(run(&["clifford"], &cubic).status.code(), Some(1));
}

#[test]
fn zoo_list_names_every_entry() {
    let out = String::from_utf8(zoo(&["list"])).unwrap();
    for e in secdef::zoo::catalog() {
        assert!(out.contains(&e.name));
    }
}
