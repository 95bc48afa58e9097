use std::process::{Command, Output};

use rank2_crystal_cli::graph::GraphDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank2-crystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn orbit_table_and_empty_range() {
    let out = run(&["orbit", "--from", "-2", "--to", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let ps: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(2).unwrap().to_string())
        .collect();
    assert_eq!(ps, ["5", "2", "1", "1", "2", "5"]);
    let out = run(&["orbit", "--from", "3", "--to", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "m\tweight\tp\tnext\n");
}

#[test]
fn invalid_shape_is_a_validation_failure() {
    let out = run(&["--a1", "3", "--k1", "2", "--k2", "1", "orbit"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("k1 < (a1-1)*k2"), "{err}");
    assert_eq!(run(&["--a1", "2", "--a2", "2", "graph"]).status.code(), Some(1));
}

#[test]
fn graph_json_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let p = path.to_str().unwrap();
    let out = run(&["graph", "--depth", "3", "--format", "json", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    let doc: GraphDocument = serde_json::from_str(&first).unwrap();
    assert_eq!(doc.vertices[0].path, "0:0:[]");
    assert_eq!(doc.edges.len(), doc.edges.iter().filter(|e| e.i == 1 || e.i == 2).count());
    let reserialized = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(reserialized, first);
    run(&["graph", "--depth", "3", "--format", "json", "--out", p]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
}

#[test]
fn graph_depth_one_dot() {
    let out = stdout(&run(&["graph", "--depth", "1"]));
    assert!(out.starts_with("digraph crystal {\n") && out.ends_with("}\n"));
    assert_eq!(out.matches("label=\"f").count(), 2);
    assert_eq!(out.lines().filter(|l| l.contains("wt=")).count(), 3);
    let out = stdout(&run(&["graph", "--depth", "0"]));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn mult_table() {
    let out = run(&["mult", "--n1-max", "2", "--n2-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n1\tn2\tmult\n"));
    for row in ["0\t0\t1", "1\t0\t1", "1\t1\t1", "2\t2\t2", "2\t0\t0"] {
        assert!(text.lines().any(|l| l == row), "{row} missing from\n{text}");
    }
    let out = run(&["--a2", "4", "mult"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("symmetric"));
}

#[test]
fn verify_exit_codes() {
    for a in ["3", "4"] {
        let out = run(&["--a1", a, "--a2", a, "--depth", "6", "verify"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["passed"], true);
    }
    let out = run(&["--depth", "2", "verify", "--corrupt-theta"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("morphism"));
}

#[test]
fn f_table_agrees() {
    let out = stdout(&run(&["f-table", "--x-max", "5"]));
    let fs: Vec<&str> = out.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(fs, ["0", "2", "5", "7", "10", "13"]);
    assert!(out.lines().skip(1).all(|l| l.ends_with("\ttrue")));
}

#[test]
fn json_config_mirror() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("config.json");
    std::fs::write(&path, r#"{"a1": 4, "a2": 4, "k1": 1, "k2": 1, "depth": 2, "format": "json"}"#).unwrap();
    let p = path.to_str().unwrap();
    let out = run(&["--json", p, "graph"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: GraphDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((doc.config.a1, doc.config.depth), (4, 2));
    assert_eq!(run(&["--json", p, "--a1", "5", "graph"]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["--json", missing.to_str().unwrap(), "graph"]).status.code(), Some(3));
}

#[test]
fn unwritable_output_is_an_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("no/such/dir/out.dot");
    assert_eq!(run(&["graph", "--out", bad.to_str().unwrap()]).status.code(), Some(3));
}
