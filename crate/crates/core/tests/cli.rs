use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_interval-coloring"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn gen_m6() {
    let out = run(&["gen", "--n", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    assert_eq!(v["family"], "moebius");
    assert_eq!(v["n"], 3);
}

#[test]
fn color_feeds_verify() {
    let colored = run(&["color", "--family", "moebius", "--n", "3", "--t", "max"], None);
    assert_eq!(colored.status.code(), Some(0));
    let text = String::from_utf8(colored.stdout).unwrap();
    let verified = run(&["verify", "--n", "3"], Some(&text));
    assert_eq!(
        verified.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&verified.stderr)
    );
    assert_eq!(json(&verified)["verdict"], true);
}

#[test]
fn verify_rejects_bad_coloring() {
    let bad = r#"{"t":5,"colors":[{"edge":[1,2],"color":5},{"edge":[3,4],"color":5},
        {"edge":[1,3],"color":2},{"edge":[2,4],"color":2},{"edge":[1,4],"color":3},{"edge":[2,3],"color":3}]}"#;
    let out = run(&["verify", "--n", "2"], Some(bad));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["surjective"], false);
}

#[test]
fn verify_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let coloring = dir.path().join("c.json");
    let g = run(&["gen", "--n", "4", "--out", graph.to_str().unwrap()], None);
    assert_eq!(g.status.code(), Some(0));
    let c = run(&["solve", "--in", graph.to_str().unwrap(), "--t", "5"], None);
    assert_eq!(c.status.code(), Some(0));
    let witness = json(&c)["coloring"].to_string();
    std::fs::write(&coloring, witness).unwrap();
    let v = run(
        &[
            "verify",
            "--in",
            graph.to_str().unwrap(),
            "--coloring",
            coloring.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn spectrum_m4() {
    let out = run(&["spectrum", "--n", "2", "--cap", "auto"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["feasible_t"], serde_json::json!([3, 4]));
    assert_eq!(v["w"], 3);
    assert_eq!(v["W"], 4);
    assert!(v["witnesses"]["4"]["colors"].is_array());
}

#[test]
fn spectrum_csv() {
    let out = run(&["spectrum", "--n", "2", "--format", "csv"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,t,feasible,nodes_searched,millis");
    assert!(lines[1].starts_with("2,3,true,"));
    assert!(lines[3].starts_with("2,5,false,"));
}

#[test]
fn solve_exit_codes() {
    assert_eq!(
        run(&["solve", "--n", "2", "--t", "4"], None).status.code(),
        Some(0)
    );
    let none = run(&["solve", "--n", "2", "--t", "5"], None);
    assert_eq!(none.status.code(), Some(1));
    assert_eq!(json(&none)["status"], "infeasible");
    let petersen = r#"{"vertices":10,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1],[6,8],[8,10],[10,7],[7,9],[9,6],
        [1,6],[2,7],[3,8],[4,9],[5,10]]}"#;
    let limited = run(&["solve", "--t", "3", "--node-limit", "3"], Some(petersen));
    assert_eq!(limited.status.code(), Some(2));
    assert_eq!(json(&limited)["status"], "inconclusive");
    let chi = run(&["chi-prime"], Some(petersen));
    assert_eq!(chi.status.code(), Some(1));
    assert_eq!(json(&chi)["chromatic_index_is_delta"], false);
}

#[test]
fn bounds_and_diameter() {
    let b = json(&run(&["bounds", "--n", "4"], None));
    assert_eq!(b["odd_cycle_bound"], 7);
    assert_eq!(b["applicable_bound"], 7);
    assert!(b.get("bipartite_bound").is_none());
    let d = json(&run(&["diameter", "--n", "7"], None));
    assert_eq!(d["diameter"], 4);
    assert_eq!(d["closed_form"], 4);
}

#[test]
fn export_dot_with_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = dir.path().join("c.json");
    run(&["color", "--n", "2", "--out", coloring.to_str().unwrap()], None);
    let out = run(
        &["export-dot", "--n", "2", "--coloring", coloring.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches("label=").count(), 6);
    let again = run(
        &["export-dot", "--n", "2", "--coloring", coloring.to_str().unwrap()],
        None,
    );
    assert_eq!(again.stdout, dot.as_bytes());
}

#[test]
fn errors_have_exit_codes_above_two() {
    assert_eq!(run(&["gen", "--n", "1"], None).status.code(), Some(3));
    assert_eq!(run(&["gen", "--n", "3", "--nope"], None).status.code(), Some(3));
    let missing = run(&["bounds", "--in", "/nonexistent/g.json"], None);
    assert_eq!(missing.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/nonexistent/g.json"));
    let malformed = run(&["bounds"], Some("{\"vertices\":3,\n\"edges\":[[1,2],]}"));
    assert_eq!(malformed.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 2"));
}

#[test]
fn color_intermediate_t_by_search() {
    let out = run(&["color", "--n", "4", "--t", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(run(&["verify", "--n", "4"], Some(&text)).status.code(), Some(0));
    assert_eq!(
        run(&["color", "--n", "4", "--t", "7"], None).status.code(),
        Some(1)
    );
}
