use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unicyclic")).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_unicyclic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn compute_family_values() {
    let o = run(&["compute", "--family", "u1", "--segments", "4,4,1,1", "--indices", "wiener"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["wiener"], "120");

    let o = run(&["compute", "--family", "path", "--n", "1"]);
    let v = json(&o);
    assert_eq!((v["n"].as_str(), v["wiener"].as_str(), v["sigma"].as_str(), v["hosoya"].as_str()), (Some("2"), Some("0"), Some("2"), Some("1")));
}

#[test]
fn compute_on_cycle_edge_list() {
    let cycle = stdout(&run(&["family", "cycle", "--n", "5"]));
    assert!(cycle.starts_with("5 5\n"));
    let o = run_with_stdin(&["compute", "--input", "-", "--indices", "subtrees,girth"], &cycle);
    let v = json(&o);
    assert_eq!(v["n"], "26");
    assert_eq!(v["girth"], "5");
}

#[test]
fn family_round_trip_matches_direct_compute() {
    for family in [
        vec!["utwo", "--arcs", "4,4", "--left", "1", "--right", "1"],
        vec!["us", "--n", "6", "--girth", "3"],
        vec!["up", "--n", "7", "--girth", "4"],
        vec!["u2", "--segments", "6,4"],
        vec!["pendants", "--girth", "4", "--attach", "0:1,1;2:3"],
        vec!["starlike", "--segments", "3,2,2"],
    ] {
        let edges = stdout(&run(&[&["family"], family.as_slice()].concat()));
        let via_file = stdout(&run_with_stdin(&["compute", "--input", "-"], &edges));
        let direct = stdout(&run(&[&["compute", "--family"], family.as_slice()].concat()));
        assert_eq!(via_file, direct, "{family:?}");
    }
}

#[test]
fn enumerate_counts_and_records() {
    assert_eq!(stdout(&run(&["enumerate", "--order", "4", "--emit", "count"])), "2\n");
    assert_eq!(stdout(&run(&["enumerate", "--order", "3", "--emit", "count"])), "1\n");
    assert_eq!(stdout(&run(&["enumerate", "--trees", "--order", "7", "--emit", "count"])), "11\n");
    let listed = stdout(&run(&["enumerate", "--order", "5", "--girth", "3"]));
    assert_eq!(listed.lines().filter(|l| l.starts_with('#')).count(), 3);
    let total: Value = json(&run_with_stdin(&["compute", "--input", "-", "--indices", "girth"], &listed));
    assert_eq!(total["girth"], "3");
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--theorem", "T3", "--segments", "4,4,1,1", "--report", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(v["theorem"], "T3_subtree_segseq");
    assert_eq!(v["holds"], true);
    assert!(v["extremal_value"].is_string());

    let bad = run(&["verify", "--theorem", "T8", "--n", "7", "--segment-count", "3"]);
    assert_eq!(bad.status.code(), Some(3));

    let hyp = run(&["verify", "--theorem", "T3", "--segments", "2,1"]);
    assert_eq!(hyp.status.code(), Some(2));

    let parse = run(&["verify", "--theorem", "T99"]);
    assert_eq!(parse.status.code(), Some(2));

    let malformed = run_with_stdin(&["compute", "--input", "-"], "3 2\n0 1\n");
    assert_eq!(malformed.status.code(), Some(2));
}

#[test]
fn verify_lemma_and_counterexamples() {
    let o = run(&["verify", "--theorem", "L4_5", "--report", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("L4_5"));
    let o = run(&["verify", "--counterexamples"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn sweep_is_identical_across_workers() {
    let one = run(&["verify", "--theorem", "T6", "--sweep", "8", "--workers", "1"]);
    let four = run(&["verify", "--theorem", "T6", "--sweep", "8", "--workers", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn correlate_csv() {
    let o = run(&["correlate", "--order", "4"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("key,order,subtrees,wiener,sigma,hosoya"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with("# kendall_tau_b")).count(), 6);
    let again = run(&["correlate", "--order", "4", "--workers", "3"]);
    assert_eq!(o.stdout, again.stdout);
}
