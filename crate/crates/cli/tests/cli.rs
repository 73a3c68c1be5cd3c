use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const FIXTURES: [&str; 6] = ["pair-with-exit", "monomial-cycle", "four-loops-open", "four-loops-closed", "square-central", "infinite-center"];

/// Square-free, orthogonal ideal admissible, and the 2-cycle's rotation sum
/// is central: the clique description and the oracle part ways.
const TWO_CYCLE: &str = "\
vertices: x, y
arrows: l: y->y, e0: x->y, e1: y->x
zero: l*e1, e0*l
";

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(format!("{name}.qa"))
}

fn pacq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pacq"))
        .args(args)
        .env_remove("PACQ_MAX_DEGREE")
        .output()
        .unwrap()
}

fn pacq_stdin(args: &[&str], input: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pacq"));
    cmd.args(args)
        .env_remove("PACQ_MAX_DEGREE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn admissibility_witness() {
    let out = pacq(&["admissible", fixture("four-loops-open").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("NOT ADMISSIBLE, cycle: c -> d -> c"));
}

#[test]
fn hochschild_of_the_monomial_example() {
    let out = pacq(&["hochschild", fixture("monomial-cycle").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("finitely generated; HH*/N is trivial"));
}

#[test]
fn oracle_check_agrees_on_every_fixture() {
    for name in FIXTURES {
        let out = pacq(&["oracle-check", "--max-degree", "6", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out).lines().any(|l| l == "all engines agree"), "{name}");
    }
}

#[test]
fn disagreement_exits_with_two() {
    let out = pacq_stdin(&["center", "--max-degree", "2"], TWO_CYCLE, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("DISAGREEMENT"));
    assert!(stdout(&out).contains("[long-cycles]"));
    let out = pacq_stdin(&["oracle-check", "--max-degree", "4"], TWO_CYCLE, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("center: DISAGREE"));
}

#[test]
fn input_errors_exit_with_one() {
    let out = pacq_stdin(&["validate"], "vertices: x\narrows: a: x->x\nzero: a*b\n", &[]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("<stdin>:3:7:"), "{err}");
    let out = pacq(&["validate", "/nonexistent/input.qa"]);
    assert_eq!(out.status.code(), Some(1));
    let out = pacq(&["frobnicate"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn degree_bound_sources() {
    let text = std::fs::read_to_string(fixture("pair-with-exit")).unwrap();
    let bound = |o: &Output| -> u64 {
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["max_degree"].as_u64().unwrap()
    };
    assert_eq!(bound(&pacq_stdin(&["center", "--json"], &text, &[])), 8);
    assert_eq!(bound(&pacq_stdin(&["center", "--json"], &text, &[("PACQ_MAX_DEGREE", "3")])), 3);
    let with_doc = format!("{text}max_degree: 4\n");
    assert_eq!(bound(&pacq_stdin(&["center", "--json"], &with_doc, &[("PACQ_MAX_DEGREE", "3")])), 4);
    assert_eq!(
        bound(&pacq_stdin(&["center", "--json", "--max-degree", "2"], &with_doc, &[])),
        2
    );
}

#[test]
fn dot_graphs() {
    let path = fixture("four-loops-open");
    let out = pacq(&["dot", "--graph", "gen-perp", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph gen_perp {\n"));
    assert!(dot.contains("  \"c\" -> \"d\";\n"));
    assert!(dot.contains("  \"d\" -> \"c\";\n"));
    assert!(dot.contains("  \"a\" -> \"b\" [dir=none];\n"));
    assert_eq!(dot, stdout(&pacq(&["dot", "--graph", "gen-perp", path.to_str().unwrap()])));
}

#[test]
fn square_central_report_flags_odd_powers() {
    let out = pacq(&["center", "--json", fixture("square-central").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["max_degree"], 6);
    assert_eq!(v["result"]["mode"], "theorem");
    assert_eq!(v["result"]["agree"], true);
    assert!(v["notices"].as_array().unwrap().iter().any(|n| n["code"] == "anti-odd-power"));
    assert_eq!(v["hypotheses"]["square_free"], true);
    assert_eq!(v["hypotheses"]["orthogonal_admissible"], true);
    assert_eq!(v["hypotheses"]["koszul"], "unknown");
}
