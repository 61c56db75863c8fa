use std::path::Path;
use std::process::{Command, Output};

use binmat::constructions::{self, Family, FamilyParams, FamilySpec};
use binmat_cli::format::{parse_matroid, write_matroid};
use serde_json::Value;

fn binmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(args)
        .env_remove("BINMAT_THREADS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn family_cases() -> Vec<(Family, FamilyParams)> {
    let p = |r, c, k, n| FamilyParams { r, c, k, n };
    vec![
        (Family::Pg, p(Some(4), None, None, None)),
        (Family::Ag, p(Some(5), None, None, None)),
        (Family::Bb, p(Some(5), Some(2), None, None)),
        (Family::Circuit, p(None, None, Some(7), None)),
        (Family::ExtremalOddGirth, p(Some(6), None, Some(5), None)),
        (Family::ExtremalGs, p(Some(6), None, None, Some(3))),
    ]
}

fn construct_args(family: Family, p: FamilyParams) -> Vec<String> {
    let mut args = vec!["construct".to_string(), "--family".into(), family.name().into()];
    for (flag, v) in [("--r", p.r), ("--c", p.c), ("--k", p.k), ("--n", p.n)] {
        if let Some(v) = v {
            args.push(flag.into());
            args.push(v.to_string());
        }
    }
    args
}

#[test]
fn every_family_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for (family, params) in family_cases() {
        let expected = FamilySpec::from_params(family, params).unwrap().build().unwrap();
        let path = dir.path().join(format!("{family}.txt"));
        let mut args = construct_args(family, params);
        args.push("--out".into());
        args.push(path.display().to_string());
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = binmat(&args);
        assert_eq!(code(&out), 0, "{family}: {}", String::from_utf8_lossy(&out.stderr));

        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_matroid(&text).unwrap();
        assert_eq!(parsed, expected, "{family}");
        assert_eq!(write_matroid(&parsed), text);

        let out = binmat(&["analyze", path.to_str().unwrap(), "--json"]);
        assert_eq!(code(&out), 0);
        let rep = stdout_json(&out);
        assert_eq!(rep["size"], expected.len());
        assert_eq!(rep["rank"], expected.ambient_rank());
        assert_eq!(rep["critical_number"], expected.critical_number().0);
    }
}

#[test]
fn construct_without_out_writes_the_file_format() {
    let out = binmat(&["construct", "--family", "ag", "--r", "3"]);
    assert_eq!(code(&out), 0);
    let m = parse_matroid(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(m, constructions::ag(3).unwrap());
}

#[test]
fn analyze_table_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, "# five-circuit\nrank 4\n1000\n0100\n0010\n0001\n1111\n").unwrap();
    let table = binmat(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&table), 0);
    let table = String::from_utf8(table.stdout).unwrap();
    assert!(table.lines().any(|l| l.starts_with("odd girth") && l.ends_with(" 5")));
    let rep = stdout_json(&binmat(&["analyze", path.to_str().unwrap(), "--json"]));
    assert_eq!(rep["odd_girth"], 5);
    assert_eq!(rep["affine"], false);
    assert_eq!(rep["max_pg_order"], 1);
}

#[test]
fn malformed_files_report_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("dup.txt", "rank 3\n001\n# c\n001\n", "line 4"),
        ("zero.txt", "rank 3\n000\n", "line 2"),
        ("length.txt", "rank 3\n0011\n", "line 2"),
        ("chars.txt", "rank 3\n0x1\n", "line 2"),
        ("header.txt", "3\n001\n", "line 1"),
    ];
    for (name, text, needle) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let out = binmat(&["analyze", path.to_str().unwrap()]);
        assert_eq!(code(&out), 65, "{name}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{name}: {err}");
    }
    let out = binmat(&["analyze", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 74);
}

#[test]
fn verify_exit_codes() {
    let out = binmat(&["verify", "main", "--k", "5", "--r", "5"]);
    assert_eq!(code(&out), 0);
    let rep = stdout_json(&out);
    assert_eq!(rep["outcome"], "pass");
    assert_eq!(rep["bound"], 10);
    assert_eq!(rep["optimum"], 10);

    // a zero budget cannot finish a search that needs more than one batch of nodes
    let out = binmat(&["verify", "gs", "--n", "3", "--r", "5", "--budget", "0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_json(&out)["outcome"], "inconclusive");
}

#[test]
fn usage_errors_exit_64() {
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["construct", "--family", "nope", "--r", "3"],
        &["construct", "--family", "circuit", "--k", "4"],
        &["construct", "--family", "extremal-gs", "--n", "3", "--r", "4"],
        &["verify", "main", "--k", "4", "--r", "5"],
        &["verify", "main", "--k", "7", "--r", "7"],
        &["verify", "bose-burton", "--r", "4"],
        &["search", "--r", "4"],
        &["search", "--r", "4", "--min-odd-girth", "4"],
        &["search", "--r", "4", "--pg-free", "1", "--forbid-affine"],
        &["search", "--r", "4", "--min-critical", "5"],
        &["search", "--r", "11", "--pg-free", "2"],
        &["search", "--r", "4", "--forbid-affine", "--complement"],
        &["search", "--r", "4", "--forbid-affine", "--threads", "0"],
        &["search", "--r", "x"],
    ];
    for args in cases {
        let out = binmat(args);
        assert_eq!(code(&out), 64, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn search_emits_a_valid_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    let out = binmat(&[
        "search", "--r", "5", "--pg-free", "2", "--forbid-affine", "--emit-witness",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let rep = stdout_json(&out);
    assert_eq!(rep["optimum"], 10);
    assert_eq!(rep["exhaustive"], true);
    let m = parse_matroid(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m.len(), 10);
    assert!(!m.has_pg_restriction(2).unwrap());
    assert!(!m.is_affine());
}

#[test]
fn complement_and_direct_agree_from_the_command_line() {
    let direct = stdout_json(&binmat(&["search", "--r", "4", "--pg-free", "3"]));
    let comp = stdout_json(&binmat(&["search", "--r", "4", "--pg-free", "3", "--complement"]));
    assert_eq!(direct["optimum"], 12);
    assert_eq!(comp["optimum"], 12);
    assert_eq!(comp["method"], "complement");
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(["search", "--r", "5", "--min-odd-girth", "5", "--forbid-affine"])
        .env("BINMAT_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["optimum"], 10);
    let out = Command::new(env!("CARGO_BIN_EXE_binmat"))
        .args(["search", "--r", "4", "--forbid-affine"])
        .env("BINMAT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(code(&out), 64);
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&binmat(&["--help"])), 0);
    assert!(Path::new(env!("CARGO_BIN_EXE_binmat")).exists());
}
