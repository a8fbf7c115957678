//! End-to-end tests driving the built `bipenum` binary.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bipenum"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().expect("stdin piped").write_all(input.as_bytes()).expect("write stdin");
    child.wait_with_output().expect("binary runs")
}

fn write_file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).expect("write test input");
    path
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .expect("utf8 stdout")
        .lines()
        .map(str::to_string)
        .collect()
}

fn path_arg(path: &Path) -> &str {
    path.to_str().expect("utf8 path")
}

const TRIANGLE: &str = "0 1\n1 2\n2 0\n";
const PATH3: &str = "0 1\n1 2\n";

#[test]
fn streams_induced_solutions_in_the_inputs_label_space() {
    let dir = TempDir::new().unwrap();
    // A star whose center appears first and carries the largest label.
    let star = write_file(&dir, "star.txt", "9 1\n9 2\n9 3\n");
    let output = run(&["enumerate", path_arg(&star), "--mode", "induced"]);
    assert!(output.status.success());
    let got: BTreeSet<String> = stdout_lines(&output).into_iter().collect();
    let want: BTreeSet<String> =
        ["9", "1", "2", "3", "1 9", "2 9", "3 9", "1 2 9", "1 3 9", "2 3 9", "1 2 3 9"]
            .into_iter()
            .map(str::to_string)
            .collect();
    assert_eq!(got, want);
}

#[test]
fn count_only_agrees_with_streaming() {
    let dir = TempDir::new().unwrap();
    // A hexagon with one chord: bipartite, assorted cycle interactions.
    let graph = write_file(&dir, "g.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n");
    for mode in ["induced", "edge"] {
        let streamed = run(&["enumerate", path_arg(&graph), "--mode", mode]);
        assert!(streamed.status.success());
        let counted = run(&["enumerate", path_arg(&graph), "--mode", mode, "--count-only"]);
        assert!(counted.status.success());
        assert_eq!(
            stdout_lines(&counted),
            vec![stdout_lines(&streamed).len().to_string()],
            "mode {mode}"
        );
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let graph = write_file(&dir, "g.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n");
    for mode in ["induced", "edge"] {
        let first = run(&["enumerate", path_arg(&graph), "--mode", mode]);
        let second = run(&["enumerate", path_arg(&graph), "--mode", mode]);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "mode {mode}");
    }
}

#[test]
fn edge_mode_emits_canonical_edge_ids_in_dfs_order() {
    let dir = TempDir::new().unwrap();
    let p3 = write_file(&dir, "p3.txt", PATH3);
    let output = run(&["enumerate", path_arg(&p3), "--mode", "edge"]);
    assert!(output.status.success());
    assert_eq!(stdout_lines(&output), vec!["0", "0 1", "1"]);
}

#[test]
fn expand_edges_prints_endpoint_pairs() {
    let dir = TempDir::new().unwrap();
    let star = write_file(&dir, "star.txt", "9 1\n9 2\n9 3\n");
    let output = run(&["enumerate", path_arg(&star), "--mode", "edge", "--expand-edges"]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines.len(), 7, "a 3-star has 2^3 - 1 connected edge subsets");
    assert!(lines.contains(&"(1,9) (2,9)".to_string()));
    assert!(lines.contains(&"(1,9) (2,9) (3,9)".to_string()));
}

#[test]
fn expand_edges_is_rejected_for_induced_mode() {
    let dir = TempDir::new().unwrap();
    let p3 = write_file(&dir, "p3.txt", PATH3);
    let output = run(&["enumerate", path_arg(&p3), "--mode", "induced", "--expand-edges"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn reads_dimacs_from_stdin() {
    let output = run_with_stdin(
        &["enumerate", "-", "--format", "dimacs", "--mode", "induced", "--count-only"],
        "c path on three vertices\np edge 3 2\ne 1 2\ne 2 3\n",
    );
    assert!(output.status.success());
    assert_eq!(stdout_lines(&output), vec!["6"]);
}

#[test]
fn empty_graph_yields_zero_solutions_and_success() {
    let output = run_with_stdin(&["enumerate", "-", "--count-only"], "");
    assert!(output.status.success());
    assert_eq!(stdout_lines(&output), vec!["0"]);
}

#[test]
fn verify_passes_on_correct_enumeration() {
    let dir = TempDir::new().unwrap();
    let k3 = write_file(&dir, "k3.txt", TRIANGLE);
    for mode in ["induced", "edge"] {
        let output = run(&["verify", path_arg(&k3), "--mode", mode]);
        assert!(output.status.success(), "mode {mode}");
        let text = String::from_utf8(output.stdout).unwrap();
        assert!(text.contains("verified"), "mode {mode}: {text}");
        assert!(text.contains("6 solutions"), "mode {mode}: {text}");
    }
}

#[test]
fn verify_reports_petersen_count() {
    let dir = TempDir::new().unwrap();
    let petersen = write_file(&dir, "petersen.txt", &bipenum::families::petersen().to_edge_list());
    let output = run(&["verify", path_arg(&petersen), "--mode", "induced"]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("verified (induced)"), "{text}");
}

#[test]
fn verify_catches_an_injected_fault() {
    let dir = TempDir::new().unwrap();
    let k3 = write_file(&dir, "k3.txt", TRIANGLE);
    for mode in ["induced", "edge"] {
        let output = run(&["verify", path_arg(&k3), "--mode", mode, "--inject-fault"]);
        assert_eq!(output.status.code(), Some(1), "mode {mode}");
        let text = String::from_utf8(output.stderr).unwrap();
        // The fault admits the odd triangle as a spurious solution.
        assert!(text.contains("spurious solution: 0 1 2"), "mode {mode}: {text}");
    }
}

#[test]
fn verify_refuses_graphs_beyond_the_oracle_limit() {
    let dir = TempDir::new().unwrap();
    let long_path: String = (0..25).map(|i| format!("{} {}\n", i, i + 1)).collect();
    let file = write_file(&dir, "long.txt", &long_path);
    let output = run(&["verify", path_arg(&file), "--mode", "induced"]);
    assert_eq!(output.status.code(), Some(2));
    let text = String::from_utf8(output.stderr).unwrap();
    assert!(text.contains("too large"), "{text}");
}

#[test]
fn cap_streams_a_prefix_and_exits_3() {
    let dir = TempDir::new().unwrap();
    let k3 = write_file(&dir, "k3.txt", TRIANGLE);
    let output = run(&["enumerate", path_arg(&k3), "--mode", "induced", "--cap", "2"]);
    assert_eq!(output.status.code(), Some(3));
    assert_eq!(stdout_lines(&output).len(), 2);
    let text = String::from_utf8(output.stderr).unwrap();
    assert!(text.contains("cap of 2 reached"), "{text}");
}

#[test]
fn malformed_input_exits_2() {
    let cases: &[(&str, &str)] = &[
        ("1 1\n", "edgelist self-loop"),
        ("1 2 3\n", "edgelist token count"),
        ("a b\n", "edgelist bad token"),
    ];
    for (body, what) in cases {
        let output = run_with_stdin(&["enumerate", "-"], body);
        assert_eq!(output.status.code(), Some(2), "{what}");
    }
    let dimacs = run_with_stdin(&["enumerate", "-", "--format", "dimacs"], "e 1 2\n");
    assert_eq!(dimacs.status.code(), Some(2), "dimacs edge before header");
    let missing = run(&["enumerate", "/nonexistent/input.txt"]);
    assert_eq!(missing.status.code(), Some(2), "missing file");
}

#[test]
fn report_json_carries_the_run_statistics() {
    let dir = TempDir::new().unwrap();
    let k3 = write_file(&dir, "k3.txt", TRIANGLE);
    let report = dir.path().join("report.json");
    let output = run(&[
        "enumerate",
        path_arg(&k3),
        "--mode",
        "induced",
        "--count-only",
        "--report-json",
        path_arg(&report),
    ]);
    assert!(output.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["mode"], "induced");
    assert_eq!(parsed["solutions"], 6);
    assert_eq!(parsed["vertices"], 3);
    assert_eq!(parsed["edges"], 3);
    assert_eq!(parsed["degeneracy"], 2);
    assert!(parsed["edits"]["total"].as_u64().unwrap() > 0);
    assert!(parsed["edits_per_solution"].as_f64().unwrap() > 0.0);
    assert!(parsed["peak_log_entries"].as_u64().unwrap() > 0);
}

#[test]
fn bench_prints_one_row_per_size_and_a_json_sweep() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("sweep.json");
    let output = run(&[
        "bench",
        "--family",
        "cycle",
        "--sizes",
        "8,10,12",
        "--mode",
        "edge",
        "--report-json",
        path_arg(&report),
    ]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines.len(), 4, "header plus three rows: {lines:?}");
    // Cycle counts are n(n-1) + 1 for even n.
    assert!(lines[1].contains("57"), "{}", lines[1]);
    assert!(lines[2].contains("91"), "{}", lines[2]);
    assert!(lines[3].contains("133"), "{}", lines[3]);
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["family"], "cycle");
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 3);
    assert_eq!(parsed["rows"][0]["size"], "8");
    assert_eq!(parsed["rows"][0]["solutions"], 57);
}

#[test]
fn bench_refuses_a_size_that_exceeds_the_cap() {
    let output = run(&[
        "bench", "--family", "path", "--sizes", "4,200", "--mode", "induced", "--cap", "100",
    ]);
    assert_eq!(output.status.code(), Some(3));
    let text = String::from_utf8(output.stderr).unwrap();
    assert!(text.contains("size 200"), "{text}");
    // The size-4 row still printed before the refusal.
    assert!(String::from_utf8(output.stdout).unwrap().contains("10"));
}

#[test]
fn bench_rejects_malformed_size_tokens() {
    let output = run(&["bench", "--family", "grid", "--sizes", "9"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn degeneracy_prints_k_and_the_peel_order() {
    let dir = TempDir::new().unwrap();
    // Star with the center first: the center wins the final degree-1 tie, so
    // it is peeled third out of four.
    let star = write_file(&dir, "star.txt", "0 1\n0 2\n0 3\n");
    let output = run(&["degeneracy", path_arg(&star)]);
    assert!(output.status.success());
    assert_eq!(stdout_lines(&output), vec!["degeneracy: 1", "order: 1 2 0 3"]);
}

#[test]
fn induced_and_edge_counts_match_library_oracles_via_cli() {
    let dir = TempDir::new().unwrap();
    let listing = bipenum::families::gnp(7, 0.45, 20260814).to_edge_list();
    let file = write_file(&dir, "random.txt", &listing);
    // Serializing drops isolated vertices, so the reference sweeps run on
    // the same reparsed graph the binary sees.
    let graph = bipenum::Graph::parse_edge_list(&listing).unwrap();
    let induced = run(&["enumerate", path_arg(&file), "--mode", "induced", "--count-only"]);
    let want_induced = bipenum::oracle::brute_force_induced(&graph).unwrap().len();
    assert_eq!(stdout_lines(&induced), vec![want_induced.to_string()]);
    let edge = run(&["enumerate", path_arg(&file), "--mode", "edge", "--count-only"]);
    let want_edge = bipenum::oracle::brute_force_edge(&graph).unwrap().len();
    assert_eq!(stdout_lines(&edge), vec![want_edge.to_string()]);
}
