use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn icc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icc")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let p = path(dir, name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", s(&p)]);
    let out = icc(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    p
}

#[test]
fn cycle_feasible_set() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c5.json", &["cycle", "5"]);
    let out = icc(&["solve", "-g", s(&g), "--feasible-set"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["members"], serde_json::json!([3, 5]));
    assert_eq!(v["exhausted"], true);
}

#[test]
fn jobs_do_not_change_members() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "q3.json", &["hypercube", "3"]);
    let one = json(&icc(&["solve", "-g", s(&g), "--feasible-set", "--no-bounds"]));
    let four = json(&icc(&["solve", "-g", s(&g), "--feasible-set", "--no-bounds", "--jobs", "4"]));
    assert_eq!(one["members"], serde_json::json!([3, 4, 5, 6, 7, 8]));
    assert_eq!(one["members"], four["members"]);
}

#[test]
fn single_t_decisions() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "k113.json", &["tripartite", "1", "1", "3"]);
    let four = icc(&["solve", "-g", s(&g), "--t", "4"]);
    assert_eq!(code(&four), 1);
    assert_eq!(json(&four)["decision"], "infeasible");
    let five = icc(&["solve", "-g", s(&g), "--t", "5"]);
    assert_eq!(code(&five), 0);
    assert_eq!(json(&five)["decision"], "feasible");
}

#[test]
fn budget_exhaustion_exits_three() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "k7.json", &["complete", "7"]);
    let out = icc(&["solve", "-g", s(&g), "--t", "9", "--budget", "5"]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["decision"], "timeout");
}

#[test]
fn color_then_check() {
    let dir = TempDir::new().unwrap();
    let (g, c) = (path(&dir, "g.json"), path(&dir, "c.json"));
    let out = icc(&["color", "tripartite", "1", "1", "3", "-o", s(&g), "-c", s(&c)]);
    assert_eq!(code(&out), 0);
    let out = icc(&["check", "-g", s(&g), "-c", s(&c)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdict"], "valid");
}

#[test]
fn unused_color_is_reported() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "p3.json", &["path", "3"]);
    let c = path(&dir, "c.json");
    std::fs::write(&c, r#"{"t":3,"colors":[1,2]}"#).unwrap();
    let out = icc(&["check", "-g", s(&g), "-c", s(&c)]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["verdict"], "invalid");
    assert!(String::from_utf8_lossy(&out.stdout).contains("color-unused"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&icc(&["bounds", "-g", s(&bad)])), 2);
    assert_eq!(code(&icc(&["solve", "-g", s(&path(&dir, "missing.json")), "--t", "3"])), 2);
    assert_eq!(code(&icc(&["gen", "cycle", "2"])), 2);
    assert_eq!(code(&icc(&["frobnicate"])), 2);

    let g = gen(&dir, "c4.json", &["cycle", "4"]);
    let short = path(&dir, "short.json");
    std::fs::write(&short, r#"{"t":2,"colors":[1,2]}"#).unwrap();
    assert_eq!(code(&icc(&["check", "-g", s(&g), "-c", s(&short)])), 2);
}

#[test]
fn gen_output_round_trips_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    for args in [&["gdn", "3", "4"][..], &["kstar", "2", "11"], &["fish"], &["hub-tree", "3", "2"]] {
        let p = gen(&dir, "g.json", args);
        let first = std::fs::read(&p).unwrap();
        let again = icc(&[&["gen"][..], args].concat());
        assert_eq!(again.stdout, first, "{args:?}");
        let graph = cyclic_coloring::Graph::from_json(std::str::from_utf8(&first).unwrap()).unwrap();
        assert_eq!(graph.to_json().into_bytes(), first);
    }
}

#[test]
fn certify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let colorable = gen(&dir, "c6.json", &["cycle", "6"]);
    let out = icc(&["certify", "-g", s(&colorable)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["outcome"], "witness");

    let hard = gen(&dir, "k511.json", &["kstar", "2", "11"]);
    let out = icc(&["certify", "-g", s(&hard)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["outcome"], "certified");

    let undecided = gen(&dir, "k5.json", &["kstar", "2", "6"]);
    let out = icc(&["certify", "-g", s(&undecided), "--budget", "10"]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["outcome"], "inconclusive");
}

#[test]
fn noncolorable_generation() {
    let dir = TempDir::new().unwrap();
    let cert = path(&dir, "cert.json");
    let g = path(&dir, "g.json");
    let out = icc(&["gen", "noncolorable", "--rule", "kstar", "--certificate", s(&cert), "-o", s(&g)]);
    assert_eq!(code(&out), 0);
    let cert: Value = serde_json::from_slice(&std::fs::read(&cert).unwrap()).unwrap();
    assert_eq!(cert["rule"], "kstar");
    assert!(cert["premises"].as_array().unwrap().iter().all(|p| p["pass"] == true));

    let out = icc(&["gen", "noncolorable", "--rule", "tree-hat", "--hubs", "10", "--leaves", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["vertex_count"], 112);

    let out = icc(&["gen", "noncolorable", "--rule", "kstar", "--n", "1", "--m", "3"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("rejected"));
}

#[test]
fn export_dot_labels_edges() {
    let dir = TempDir::new().unwrap();
    let (g, c) = (path(&dir, "g.json"), path(&dir, "c.json"));
    assert_eq!(code(&icc(&["color", "complete-odd", "1", "-o", s(&g), "-c", s(&c)])), 0);
    let out = icc(&["export-dot", "-g", s(&g), "-c", s(&c)]);
    assert_eq!(code(&out), 0);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph G {"));
    for label in ["label=\"1\"", "label=\"2\"", "label=\"3\""] {
        assert!(dot.contains(label), "{dot}");
    }
    let plain = String::from_utf8(icc(&["export-dot", "-g", s(&g)]).stdout).unwrap();
    assert_eq!(plain.matches(" -- ").count(), 3);
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let g = gen(&dir, "c5.json", &["cycle", "5"]);
    let out = icc(&["bounds", "-g", s(&g)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["best_upper"], 5);
    assert!(!out.stderr.is_empty());
}

#[test]
fn scan_reports_counterexamples_and_skips() {
    let dir = TempDir::new().unwrap();
    gen(&dir, "a.json", &["cycle", "4"]);
    gen(&dir, "b.json", &["path", "5"]);
    let corpus = s(dir.path());
    let out = icc(&["scan", "--corpus", corpus]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["records"].as_array().unwrap().len(), 2);

    gen(&dir, "c.json", &["complete", "7"]);
    let out = icc(&["scan", "--corpus", corpus, "--budget", "5"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn every_construction_checks_out() {
    let dir = TempDir::new().unwrap();
    let (g, c) = (path(&dir, "g.json"), path(&dir, "c.json"));
    let mut cases: Vec<(Vec<String>, &str)> = Vec::new();
    let args = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    for d in 2..=5 {
        for n in 3..=6 {
            cases.push(([vec!["gdn".into()], args(&[d, n])].concat(), "cyclic"));
        }
    }
    for n in 1..=4 {
        cases.push(([vec!["complete-odd".into()], args(&[n])].concat(), "cyclic"));
    }
    for m in 2..=4 {
        for n in 2..=4 {
            cases.push(([vec!["bipartite".into()], args(&[m, n])].concat(), "cyclic"));
            cases.push(([vec!["bipartite-interval".into()], args(&[m, n])].concat(), "interval"));
            for t in m.max(n)..m + n {
                cases.push(([vec!["bipartite-reduced".into()], args(&[m, n, t])].concat(), "cyclic"));
            }
        }
    }
    for (l, m, n) in [(1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 1, 2)] {
        cases.push(([vec!["tripartite".into()], args(&[l, m, n])].concat(), "cyclic"));
    }
    for n in 2..=4 {
        cases.push(([vec!["hypercube".into()], args(&[n])].concat(), "cyclic"));
        cases.push(([vec!["hypercube-interval".into()], args(&[n])].concat(), "interval"));
    }
    for (construction, mode) in cases {
        let mut full: Vec<&str> = vec!["color"];
        full.extend(construction.iter().map(String::as_str));
        full.extend(["-o", s(&g), "-c", s(&c)]);
        let out = icc(&full);
        assert_eq!(code(&out), 0, "{construction:?}: {}", String::from_utf8_lossy(&out.stderr));
        let out = icc(&["check", "-g", s(&g), "-c", s(&c), "--mode", mode]);
        assert_eq!(code(&out), 0, "{construction:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
