use std::path::PathBuf;
use std::process::{Command, Output};

use splitalg::document::Document;
use splitalg::identity::{check, CheckOptions};
use splitalg::operators::OperatorVerdict;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitalg"))
        .args(args)
        .env("SPLITALG_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let poly = fixture("polynomials.json");
    let ok = run(&["check", poly.to_str().unwrap(), "--object", "A", "--catalog", "associative"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS"));

    let fail = run(&["check-operator", poly.to_str().unwrap(), "--map", "Swap", "--kind", "averaging", "--on", "AG"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("witness"));

    let bad = run(&["check", fixture("bad_rational.json").to_str().unwrap(), "--object", "Z", "--catalog", "dendriform"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("algebras.Z.operations.prec[0][0][0]"), "{err}");
}

#[test]
fn json_verdict_round_trips() {
    let poly = fixture("polynomials.json");
    let o = run(&["check-operator", poly.to_str().unwrap(), "--map", "R", "--kind", "rota-baxter", "--on", "A", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let verdict = OperatorVerdict::from_json(&text).unwrap();
    assert!(verdict.passed());
    assert_eq!(verdict.to_json().trim(), text.trim());
}

#[test]
fn construct_writes_a_checkable_document() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dend.json");
    let o = run(&[
        "construct",
        fixture("polynomials.json").to_str().unwrap(),
        "--recipe",
        "aguiar-dendriform",
        "--object",
        "A",
        "--map",
        "R",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc = Document::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let d = doc.algebra("A_dendriform").unwrap();
    assert!(check(d, "dendriform", CheckOptions::default()).unwrap().passed());

    let again = run(&["check", out.to_str().unwrap(), "--object", "A_dendriform", "--catalog", "dendriform"]);
    assert_eq!(again.status.code(), Some(0));
}

#[test]
fn construct_rejects_a_non_operator() {
    let o = run(&[
        "construct",
        fixture("polynomials.json").to_str().unwrap(),
        "--recipe",
        "aguiar-dendriform",
        "--object",
        "AG",
        "--map",
        "Swap",
        "--out",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error:"));
}

#[test]
fn search_lists_sorted_operators() {
    let o = run(&["search", fixture("small.json").to_str().unwrap(), "--object", "D10", "--kind", "dend-averaging", "--grid=-1,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(rows, ["[[-1]]", "[[0]]", "[[1]]"]);
}

#[test]
fn search_respects_cap() {
    let o = run(&[
        "search",
        fixture("small.json").to_str().unwrap(),
        "--object",
        "Z3",
        "--kind",
        "dend-averaging",
        "--grid=-1,0,1",
        "--cap",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
