//! End-to-end checks of the `qrat` binary: output contents, exit codes, and
//! byte-stable scan output.

use std::process::{Command, Output};

fn qrat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrat"))
        .args(args)
        .env("QRAT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn compute_paper_example() {
    let out = qrat(&["compute", "7/5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R = q^4+2q^3+2q^2+q+1"), "{text}");
    assert!(text.contains("S = q^3+2q^2+q+1"), "{text}");
    assert!(text.contains("regular_cf = [1,2,2]"), "{text}");
    assert!(text.contains("negative_cf = [[2,2,3]]"), "{text}");
    assert!(text.contains("farey_parent = 4/3 # 3/2"), "{text}");
    assert!(text.contains("S_palindromic = false"), "{text}");
}

#[test]
fn compute_integer() {
    let out = qrat(&["compute", "5/1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("R = q^4+q^3+q^2+q+1"), "{text}");
    assert!(text.contains("S = 1"), "{text}");
}

#[test]
fn compute_infinite_is_domain_error() {
    let out = qrat(&["compute", "5/0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compute_malformed_is_parse_error() {
    let out = qrat(&["compute", "seven/fifths"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_regular_path_and_parity() {
    let out = qrat(&["compute", "7/5", "--cf", "regular", "--parity", "even"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("regular_cf = [1,2,1,1]"), "{text}");
    assert!(text.contains("R = q^4+2q^3+2q^2+q+1"), "{text}");
}

#[test]
fn compute_json_round_trips() {
    let out = qrat(&["compute", "7/5", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["alpha"], "7/5");
    assert_eq!(value["s"]["coeffs"][0], 1);
    assert_eq!(value["farey_parent"][0], "4/3");
    // the polynomial objects parse back through the documented schema
    let s = qrat::poly::QPoly::from_json(&value["s"].to_string()).unwrap();
    assert_eq!(s.to_string(), "q^3+2q^2+q+1");
    let r = qrat::poly::LaurentPoly::from_json(&value["r"].to_string()).unwrap();
    assert_eq!(r.to_string(), "q^4+2q^3+2q^2+q+1");
}

#[test]
fn compute_negative_fraction_has_laurent_numerator() {
    let out = qrat(&["compute", "-7/5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("q^-"), "{text}");
    assert!(text.contains("farey_parent = n/a"), "{text}");
}

#[test]
fn closure_worked_examples() {
    let out = qrat(&["closure", "--seq", "1,3,1,1", "--method", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("methods agree"), "{text}");
    assert!(
        text.contains("cl = q^7+2q^6+4q^5+5q^4+5q^3+4q^2+3q+1"),
        "{text}"
    );

    let out = qrat(&["closure", "--seq", "0,3,1,5,1"]);
    assert!(
        stdout(&out).contains("cl = q^11+3q^10+5q^9+7q^8+8q^7+9q^6+9q^5+8q^4+6q^3+4q^2+2q+1")
    );

    let out = qrat(&["closure", "--seq", "0"]);
    assert!(stdout(&out).contains("cl = q+1"));
}

#[test]
fn closure_malformed_is_parse_error() {
    let out = qrat(&["closure", "--seq", "1,x,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qrat(&["closure", "--seq", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jones_examples() {
    let out = qrat(&["jones", "7/5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("J = q^5+q^4+q^3+2q^2+q+1"));

    let out = qrat(&["jones", "1/2"]);
    assert_eq!(out.status.code(), Some(3));

    let out = qrat(&["jones", "3/1", "--eval", "omega"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("J(omega) = 1-w"), "{text}");
    assert!(text.contains("unit*(1-w)"), "{text}");

    let out = qrat(&["jones", "2/1", "--eval", "i"]);
    assert!(stdout(&out).contains("J(i) = 0"));

    let out = qrat(&["jones", "7/5", "--eval", "-1"]);
    assert!(stdout(&out).contains("J(-1) = "));
}

#[test]
fn scan_composite_reproduces_table() {
    let out = qrat(&["scan", "composite", "--max", "60"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("kind,p,a,b,polynomial,verdict\n"), "{text}");
    assert!(text.contains("composite-counterexample,24,5,11"), "{text}");
    assert!(text.contains("composite-counterexample,51,11,20"), "{text}");
    assert!(text.contains("composite-counterexample,57,13,16"), "{text}");
    assert!(text.contains("composite-counterexample,60,11,19"), "{text}");
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn scan_output_is_byte_identical_across_runs() {
    let first = qrat(&["scan", "denominator", "--max", "24"]);
    let second = qrat(&["scan", "denominator", "--max", "24"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn scan_writes_csv_and_jsonl_files() {
    let dir = std::env::temp_dir().join(format!("qrat-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv_path = dir.join("scan.csv");
    let jsonl_path = dir.join("scan.jsonl");

    let out = qrat(&["scan", "palindromic", "--max", "12", "--out", csv_path.to_str().unwrap()]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("kind,p,a,b,polynomial,verdict\n"));
    assert!(csv.contains("palindromic-status,12,,,,set-matches-r^2=1"), "{csv}");

    let out = qrat(&["scan", "irreducible", "--max", "7", "--out", jsonl_path.to_str().unwrap()]);
    assert!(out.status.success());
    let jsonl = std::fs::read_to_string(&jsonl_path).unwrap();
    for line in jsonl.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["kind"], "irreducible");
        assert_eq!(value["verdict"], "irreducible");
        assert!(value["polynomial"]["coeffs"].is_array());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = qrat(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
