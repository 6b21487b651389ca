use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use short_cycles::generators;
use short_cycles::graph::{parse_alist, parse_edge_list, to_alist, to_edge_list};
use short_cycles::report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_short-cycles"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("short-cycles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_heawood_from_stdin() {
    let out = run_with_stdin(&["count"], &to_alist(&generators::heawood()));
    assert!(out.status.success());
    let parsed = report::from_json(&stdout(&out)).unwrap();
    let counts: Vec<_> = parsed.census.iter().map(|e| (e.length, e.count.to_string())).collect();
    assert_eq!(counts, [(6, "28".into()), (8, "21".into()), (10, "84".into())]);
    // Stable re-emission.
    assert_eq!(report::to_json(&parsed) + "\n", stdout(&out));
}

#[test]
fn count_acyclic_graph() {
    let out = run_with_stdin(&["count"], &to_alist(&generators::complete_bipartite(1, 3).unwrap()));
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["graph"]["girth"], "INFINITE");
    assert_eq!(value["census"], serde_json::json!([]));
    assert!(!value["notes"].as_array().unwrap().is_empty());
}

#[test]
fn verify_complete_graph_passes() {
    let out = run_with_stdin(
        &["verify", "--output", "human"],
        &to_alist(&generators::complete_bipartite(3, 3).unwrap()),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("   4             9             9  pass"), "{text}");
    assert!(text.contains("   6             6             6  pass"), "{text}");
}

#[test]
fn verify_json_and_guard() {
    let big = to_alist(&generators::even_cycle(20).unwrap());
    let refused = run_with_stdin(&["verify"], &big);
    assert_eq!(refused.status.code(), Some(2));
    let allowed = run_with_stdin(&["verify", "--max-vertices-override", "40"], &big);
    assert_eq!(allowed.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&allowed)).unwrap();
    assert_eq!(value["pass"], true);
}

#[test]
fn format_follows_extension() {
    let graph = generators::subdivision_k4();
    let edges = temp_file("sub.edges", &to_edge_list(&graph));
    let alist = temp_file("sub.alist", &to_alist(&graph));
    for path in [&edges, &alist] {
        let out = bin().args(["count", "--output", "csv", "--input"]).arg(path).output().unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        assert!(text.lines().last().unwrap().ends_with(",0"), "{text}");
    }
    // Forcing the wrong format is an input error.
    let out = bin().args(["count", "--format", "alist", "--input"]).arg(&edges).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: ") && err.lines().count() == 1, "{err}");
}

#[test]
fn malformed_input_exits_two() {
    let out = run_with_stdin(&["count"], "3 3\n3 3\n3 3 3\n");
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["count", "--input", "/nonexistent/graph.alist"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eigen_method_adds_columns_only() {
    let text = to_alist(&generators::heawood());
    let exact = report::from_json(&stdout(&run_with_stdin(&["count"], &text))).unwrap();
    let with_eigen = report::from_json(&stdout(&run_with_stdin(&["count", "--method", "eigen"], &text))).unwrap();
    assert_eq!(exact.census, with_eigen.census);
    assert!(with_eigen.eigen_diagnostic.unwrap().all_within_tolerance());
    let csv = stdout(&run_with_stdin(&["count", "--method", "eigen", "--output", "csv"], &text));
    assert!(csv.lines().next().unwrap().ends_with("eigen_trace,eigen_rel_error"));
}

#[test]
fn human_output_shows_breakdown() {
    let out = run_with_stdin(&["count", "--output", "human"], &to_alist(&generators::heawood()));
    let text = stdout(&out);
    assert!(text.contains("psi breakdown"));
    assert!(text.contains("L =  10, j =   8"), "{text}");
}

#[test]
fn series_subcommand() {
    let out = bin().args(["series", "--c", "3", "--d", "2", "--kmax", "5"]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["b_c"], serde_json::json!([1, 3, 12, 54, 258, 1278]));
}

#[test]
fn girth_subcommand() {
    let out = run_with_stdin(&["girth", "--output", "human"], &to_alist(&generators::heawood()));
    assert_eq!(stdout(&out), "6\n");
    let out = run_with_stdin(&["girth"], &to_alist(&generators::complete_bipartite(1, 2).unwrap()));
    assert_eq!(stdout(&out).trim(), r#"{"girth":"INFINITE"}"#);
}

#[test]
fn gen_subcommand() {
    let out = bin().args(["gen", "--family", "heawood"]).output().unwrap();
    assert_eq!(parse_alist(&stdout(&out)).unwrap(), generators::heawood());

    let args = ["gen", "--family", "random-biregular", "--n", "6", "--m", "9", "--c", "3", "--d", "2", "--seed", "7", "--format", "edges"];
    let first = stdout(&bin().args(args).output().unwrap());
    let second = stdout(&bin().args(args).output().unwrap());
    assert_eq!(first, second);
    assert_eq!(parse_edge_list(&first).unwrap().biregular_profile(), (3, 2));

    let out = bin().args(["gen", "--family", "random-biregular", "--n", "4", "--m", "5", "--c", "3", "--d", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["gen", "--family", "complete", "--n", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
