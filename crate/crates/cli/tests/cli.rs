use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use semicov::record::{CovarietyRecord, SemigroupRecord};
use semicov::NumericalSemigroup;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_semicov"))
        .args(args)
        .env_remove("SEMICOV_THREADS")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn records(stream: &str) -> Vec<&str> {
    let lines: Vec<&str> = stream.lines().collect();
    lines[1..lines.len() - 1].to_vec()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn records_round_trip() {
    let (code, out) = run(&["enumerate", "-F", "11"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], r#"{"F":11}"#);
    let body = records(&out);
    assert_eq!(
        lines.last().unwrap(),
        &format!("{{\"count\":{}}}", body.len())
    );
    for line in body {
        let r: SemigroupRecord = serde_json::from_str(line).unwrap();
        let s = r.to_semigroup().unwrap();
        assert_eq!(
            serde_json::to_string(&SemigroupRecord::from(&s)).unwrap(),
            line
        );
    }
}

#[test]
fn streams_agree_across_modes() {
    let (_, base) = run(&["enumerate", "-F", "13"]);
    let (_, low) = run(&["enumerate", "-F", "13", "--low-memory", "--parallel", "3"]);
    assert_eq!(base, low);
    let (_, loose) = run(&[
        "enumerate",
        "-F",
        "13",
        "--order-insensitive",
        "--parallel",
        "4",
    ]);
    let a: BTreeSet<&str> = records(&base).into_iter().collect();
    let b: BTreeSet<&str> = records(&loose).into_iter().collect();
    assert_eq!(a, b);
    assert_eq!(base.lines().last(), loose.lines().last());
    let (_, oracle) = run(&["verify", "-F", "13", "--format", "jsonl"]);
    let c: BTreeSet<&str> = records(&oracle).into_iter().collect();
    assert_eq!(a, c);
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_semicov"))
        .args(["enumerate", "-F", "12"])
        .env("SEMICOV_THREADS", "4")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        run(&["enumerate", "-F", "12"]).1
    );
    let bad = Command::new(env!("CARGO_BIN_EXE_semicov"))
        .args(["enumerate", "-F", "12"])
        .env("SEMICOV_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn small_cases() {
    let (_, out) = run(&["enumerate", "-F", "1"]);
    assert_eq!(records(&out).len(), 1);
    let (_, out) = run(&["enumerate", "-F", "5", "--format", "plain"]);
    assert_eq!(
        out,
        "{0,6,->}\n{0,3,6,->}\n{0,4,6,->}\n{0,2,4,6,->}\n{0,3,4,6,->}\n"
    );
    let (_, out) = run(&["closure", "-F", "15", "6"]);
    let r: SemigroupRecord = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(r.genus, 13);
    let (_, out) = run(&["count-rank1", "-F", "72"]);
    assert_eq!(out.trim(), "60");
    let (code, out) = run(&["verify", "-F", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("match"));
}

#[test]
fn analyze_reports() {
    let (code, out) = run(&["analyze", "5", "7", "9"]);
    assert_eq!(code, 0);
    for line in [
        "frobenius: 13",
        "multiplicity: 5",
        "embedding_dimension: 3",
        "med: false",
    ] {
        assert!(out.contains(line), "{out}");
    }
    let (_, out) = run(&["analyze", "4", "6", "9"]);
    assert!(out.contains("frobenius: 11") && out.contains("genus: 6"));
    assert!(out.contains("irreducible: true"));
    let (_, out) = run(&["analyze", "1"]);
    assert!(out.contains("frobenius: -1") && out.contains("genus: 0"));
    let (_, out) = run(&["analyze", "--gaps", "1,2,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["msg"], serde_json::json!([3, 5, 7]));
    assert_eq!(v["special_gaps"], serde_json::json!([4]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["enumerate", "-F", "0"]).0, 2);
    assert_eq!(run(&["enumerate", "-F", "-4"]).0, 2);
    assert_eq!(run(&["analyze", "4", "6"]).0, 2);
    assert_eq!(run(&["analyze", "--gaps", "1,2,4,5,6,7"]).0, 2);
    assert_eq!(run(&["closure", "-F", "6", "2", "4"]).0, 2);
    assert_eq!(run(&["verify", "-F", "23"]).0, 2);
    assert_eq!(run(&["tree", "-F", "4", "--format", "csv"]).0, 2);
    assert_eq!(run(&["cov-generate", "/nonexistent/records.jsonl"]).0, 3);
    assert_eq!(
        run(&["enumerate", "-F", "4", "-o", "/nonexistent/dir/out"]).0,
        3
    );
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn chain_and_tree() {
    let (_, out) = run(&["chain", "5", "7", "9", "--format", "csv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.last().unwrap().starts_with("13,14,13,13,14,0,"));
    let (_, out) = run(&["chain", "4", "6", "9", "-F", "13"]);
    assert_eq!(records(&out).len(), 8);
    let (_, dot) = run(&["tree", "-F", "5"]);
    assert!(dot.starts_with("digraph covariety {"));
    assert_eq!(dot.matches(" -> ").count(), 4);
    let (_, json) = run(&["tree", "-F", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn cov_generate_from_files() {
    let a = tmp("s1.json");
    let b = tmp("s2.jsonl");
    let s1 = NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap();
    let s2 = NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap();
    std::fs::write(
        &a,
        serde_json::to_string_pretty(&SemigroupRecord::from(&s1)).unwrap(),
    )
    .unwrap();
    // an enumeration-style stream is accepted as is
    let line = serde_json::to_string(&SemigroupRecord::from(&s2)).unwrap();
    std::fs::write(&b, format!("{{\"F\":11}}\n{line}\n{{\"count\":1}}\n")).unwrap();
    let (code, out) = run(&["cov-generate", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code, 0);
    let c: CovarietyRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(c.members.len(), 13);
    assert_eq!(c.delta.frobenius, 13);
    for r in &c.members {
        r.to_semigroup().unwrap();
    }

    let out_path = tmp("cov.json");
    let (code, _) = run(&[
        "cov-generate",
        a.to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let again = tmp("again.json");
    std::fs::copy(&out_path, &again).unwrap();
    let (_, out) = run(&["cov-generate", again.to_str().unwrap(), "--format", "plain"]);
    assert_eq!(out.lines().count(), 6);

    let junk = tmp("junk.json");
    std::fs::write(&junk, "[1, 2]").unwrap();
    assert_eq!(run(&["cov-generate", junk.to_str().unwrap()]).0, 2);
}
