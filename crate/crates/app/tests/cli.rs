use std::path::PathBuf;
use std::process::{Command, Output};

use flexi_app::RunRecord;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flexiclique"))
}

fn karate() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../datasets/karate.txt")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_json_on_karate() {
    let path = karate();
    let o = run(&["solve", "--input", path.to_str().unwrap(), "--tau", "9/10", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: RunRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.size, 5);
    assert_eq!(r.tau, "9/10");
    assert!(r.optimal);
    assert!(r.stats.is_some());
}

#[test]
fn solve_text_with_stats_and_ablation_flags() {
    let path = karate();
    let o = run(&[
        "solve", "--input", path.to_str().unwrap(), "--tau", "0.75", "--stats",
        "--disable-rule", "6", "--disable-rule", "2", "--no-sort", "--no-heuristic-seed",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("size       8"), "{text}");
    assert!(text.contains("explored"));
}

#[test]
fn heuristic_and_oracle() {
    let path = karate();
    let o = run(&["heuristic", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("algorithm  fpa"));

    let dir = tempfile::tempdir().unwrap();
    let small = dir.path().join("k33.txt");
    std::fs::write(&small, "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n").unwrap();
    let o = run(&["oracle", "--input", small.to_str().unwrap(), "--tau", "3/4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: RunRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.size, 6);

    let o = run(&["oracle", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "karate is above the oracle cap");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--input", "x", "--tau", "1.5"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--input", "x", "--disable-rule", "7"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["solve", "--input", "/definitely/missing"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1 2\noops\n").unwrap();
    let o = run(&["solve", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn timeout_reports_incumbent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let o = run(&["gen", "--model", "er", "--n", "300", "--m", "9000", "--seed", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["solve", "--input", out.to_str().unwrap(), "--tau", "0.5", "--timeout-s", "0", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let r: RunRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.optimal);
    assert!(r.size >= 2);
}

#[test]
fn gen_is_deterministic_and_parsable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let o = run(&["gen", "--model", "planted", "--n", "40", "--m", "60", "--clique-size", "7", "--seed", "3", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let o = run(&["solve", "--input", a.to_str().unwrap(), "--tau", "3/4", "--json"]);
    let r: RunRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.size >= 7);
    assert_eq!(run(&["gen", "--n", "3", "--m", "4"]).status.code(), Some(1));
}

#[test]
fn bench_csv_and_json() {
    let path = karate();
    let o = run(&["bench", "--input", path.to_str().unwrap(), "--tau", "0.9", "--tau", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap().get(6), Some("size"));
    assert_eq!(rdr.records().count(), 4);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.json");
    let o = run(&["bench", "--input", path.to_str().unwrap(), "--ablation", "--json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<RunRecord> = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(rows.len(), 9);

    let o = run(&["bench"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}
