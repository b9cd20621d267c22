//! End-to-end tests of the binary: exit codes, output formats,
//! determinism, and JSON round trips.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_lg(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).expect("write test graph");
    path.to_str().expect("utf-8 path").to_string()
}

const G5_2: &str = "vertices: x1 x2 x3\nedge x1 -> x2 : x4\nedge x1 -> x3 : x5\n";

#[test]
fn verify_lists_four_checks_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for check in ["antisymmetry: ok", "jacobi: ok", "nilpotency: ok", "generation: ok"] {
        assert!(text.contains(check), "missing `{check}` in: {text}");
    }
    assert!(text.contains("dim=5"));
}

#[test]
fn ideals_summary_matches_the_two_subalgebra_graph() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["ideals", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("nontrivial subalgebras=2 nontrivial graph-ideals=0"));
}

#[test]
fn ideals_subset_flag_analyzes_one_span() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["ideals", &file, "--subset", "x1,x2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("<x1,x2,x4> subalgebra=yes graph-ideal=no"));

    let out = run(&["ideals", &file, "--subset", "x1,zz"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zz"));
}

#[test]
fn parse_errors_exit_two_with_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "bad.lg", "vertices: a b\nedge a -> zz : u\n");
    let out = run(&["info", &file]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad.lg:2:"), "no file:line in: {err}");
    assert!(stdout(&out).is_empty());
}

#[test]
fn missing_file_and_bad_flags_exit_two() {
    let out = run(&["verify", "/definitely/not/here.lg"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["kmn", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kmn_check_prints_the_exact_verdict_line() {
    let out = run(&["kmn", "--m", "2", "--n", "3", "--labeling", "single", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "dim=19 formula=19 OK\n");

    let out = run(&["kmn", "--m", "2", "--n", "2", "--labeling", "distinct", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "dim=8 formula=8 OK\n");
}

#[test]
fn kmn_degenerate_distinct_check_fails_with_the_solver_value() {
    let out = run(&["kmn", "--m", "1", "--n", "1", "--labeling", "distinct", "--check"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("dim=4 formula=unavailable"), "got: {text}");
}

#[test]
fn kmn_emit_produces_a_parseable_graph() {
    let out = run(&["kmn", "--m", "2", "--n", "2", "--labeling", "distinct", "--emit"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("edge x1 -> y1 : c11"));
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "kmn.lg", &text);
    assert_eq!(run(&["verify", &file]).status.code(), Some(0));
}

#[test]
fn reverse_output_is_a_valid_graph_with_the_map_in_comments() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["reverse", &file, "--edge", "x1:x2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("edge x2 -> x1 : x4"));
    assert!(text.contains("block_minus_one"));
    // '#' lines are comments, so the whole output parses as a graph again
    let back = write_lg(dir.path(), "back.lg", &text);
    assert_eq!(run(&["verify", &back]).status.code(), Some(0));
}

#[test]
fn reverse_rejects_repeated_labels_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(
        dir.path(),
        "g.lg",
        "vertices: a b c d\nedge a -> b : u\nedge c -> d : u\n",
    );
    let out = run(&["reverse", &file, "--edge", "a:b"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));

    let out = run(&["reverse", &file, "--edge", "b:a"]);
    assert_eq!(out.status.code(), Some(2), "absent edge is a usage error");

    let out = run(&["reverse", &file, "--edge", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orientations_pass_on_uniquely_labeled_graphs_and_fail_otherwise() {
    let dir = tempfile::tempdir().unwrap();
    let unique = write_lg(dir.path(), "u.lg", G5_2);
    let out = run(&["orientations", &unique]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("passed=4 failed=0"));

    let repeated = write_lg(
        dir.path(),
        "r.lg",
        "vertices: a b c\nedge a -> b : u\nedge a -> c : u\n",
    );
    let out = run(&["orientations", &repeated]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn catalog_lookup_emit_and_errors() {
    let out = run(&["catalog", "g5_1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("subalgebras: <x1,x2,x5> <x3,x4,x5>"));
    assert!(text.contains("graph-ideals: <x1,x2,x5> <x3,x4,x5>"));

    let out = run(&["catalog", "k4_free", "--emit"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 7); // vertices line + 6 edges

    let out = run(&["catalog", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("available"));

    let out = run(&["catalog", "g6_3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("out of scope"));
}

#[test]
fn catalog_verify_all_reports_every_entry_ok() {
    let out = run(&["catalog", "--verify-all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("entries=15 ok=15 failed=0"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn json_mode_emits_parseable_documents() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    for args in [
        vec!["verify", &file, "--json"],
        vec!["info", &file, "--json"],
        vec!["components", &file, "--json"],
        vec!["ideals", &file, "--json"],
        vec!["der0", &file, "--basis", "--json"],
        vec!["kmn", "--m", "2", "--n", "2", "--labeling", "single", "--json"],
        vec!["reverse", &file, "--edge", "x1:x2", "--json"],
        vec!["orientations", &file, "--json"],
        vec!["catalog", "--verify-all", "--json"],
        vec!["catalog", "g6_2", "--json"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "args: {args:?}");
        let doc: serde_json::Value =
            serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(doc.is_object(), "args: {args:?}");
    }
    // error documents are JSON too
    let out = run(&["catalog", "nope", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["error"].is_string());
}

#[test]
fn json_info_round_trips_the_relation_count() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["info", &file, "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["dim"], 5);
    assert_eq!(doc["relations"].as_array().unwrap().len(), 2);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    for args in [
        vec!["ideals", &file],
        vec!["der0", &file, "--basis"],
        vec!["catalog", "--verify-all"],
        vec!["orientations", &file],
        vec!["info", &file, "--json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn der0_prints_dimension_and_optional_basis() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_lg(dir.path(), "g.lg", G5_2);
    let out = run(&["der0", &file]);
    assert_eq!(out.status.code(), Some(0));
    let plain = stdout(&out);
    assert!(plain.starts_with("dim="));
    assert_eq!(plain.lines().count(), 1);

    let out = run(&["der0", &file, "--basis"]);
    let with_basis = stdout(&out);
    let dim: usize = plain.trim().trim_start_matches("dim=").parse().unwrap();
    assert_eq!(with_basis.lines().count(), 1 + dim);
}
