use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cbu(args: &[&str], stdin: Option<&[u8]>, dir: &Path) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cbu"))
        .args(args)
        .current_dir(dir)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn grid_pipeline_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&cbu(&["gen", "grid", "--n", "4", "-o", "grid4.json"], None, d)), 0);
    let graph = cbu(&["gen", "grid", "--n", "4"], None, d);
    let rep = cbu(&["build", "grid-2cbu"], Some(&graph.stdout), d);
    assert_eq!(code(&rep), 0, "{}", String::from_utf8_lossy(&rep.stderr));
    let v = cbu(&["verify", "-", "grid4.json"], Some(&rep.stdout), d);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["verified"], true);
}

#[test]
fn triangle_is_a_non_member() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k3.json"), r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
    let o = cbu(&["decide", "k3.json"], None, dir.path());
    assert_eq!(code(&o), 1);
    let c = json(&o);
    assert_eq!(c["verdict"], "non-member");
    assert_eq!(c["reason"]["kind"], "triangle");
    assert_eq!(c["reason"]["vertices"], serde_json::json!([0, 1, 2]));
}

#[test]
fn quasi_cycle_orientation_has_a_bad_cycle() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c4-quasi.json"), r#"{"n":4,"arcs":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let o = cbu(&["check-orientation", "c4-quasi.json"], None, dir.path());
    assert_eq!(code(&o), 1);
    let c = json(&o);
    assert_eq!(c["kind"], "bad-cycle");
    assert_eq!(c["cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn labelable_orientation_gets_a_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let o = cbu(&["check-orientation"], Some(b"digraph { 0 -> 1; 2 -> 1; 2 -> 3; 0 -> 3 }"), dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["kind"], "labeling");
}

#[test]
fn certificate_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = cbu(&["gen", "crown", "--n", "4"], None, d);
    let o = cbu(&["decide", "-", "--certificate", "cert.json", "--jobs", "2"], Some(&g.stdout), d);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "member");
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(d.join("cert.json")).unwrap()).unwrap();
    assert_eq!(cert["verdict"], "member");
    assert!(cert["witness"]["arcs"].is_array());
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let g = cbu(&["gen", "g3"], None, dir.path());
    let o = cbu(&["decide", "--budget", "5"], Some(&g.stdout), dir.path());
    assert_eq!(code(&o), 3);
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&cbu(&["frobnicate"], None, d)), 2);
    assert_eq!(code(&cbu(&["gen", "no-such-family"], None, d)), 2);
    assert_eq!(code(&cbu(&["gen", "grid"], None, d)), 2);
    assert_eq!(code(&cbu(&["decide"], Some(b"{ not json"), d)), 2);
    assert_eq!(code(&cbu(&["decide", "missing.json"], None, d)), 2);
    assert_eq!(code(&cbu(&["build", "grid-2cbu"], Some(b"0 1\n1 2\n"), d)), 2);
    let shift = cbu(&["build", "shift", "--m", "4"], None, d);
    assert_eq!(code(&cbu(&["svg"], Some(&shift.stdout), d)), 2);
}

#[test]
fn every_construction_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases: &[(&[&str], &[&str])] = &[
        (&["gen", "r-prime", "--n1", "3", "--n2", "5"], &["build", "r-prime-2cbu", "--n1", "3", "--n2", "5"]),
        (&["gen", "shift", "--m", "5"], &["build", "shift", "--m", "5"]),
        (&["gen", "grid", "--rows", "2", "--cols", "6"], &["build", "outerplanar", "in.json"]),
        (&["gen", "cycle", "--n", "5"], &["build", "cbu", "in.json"]),
        (&["gen", "jones", "--i", "2"], &["build", "cbu", "in.json"]),
        (&["gen", "crown", "--n", "4"], &["build", "bipartite", "in.json"]),
        (&["gen", "grid", "--rows", "2", "--cols", "3"], &["build", "grid-2cbu", "--rows", "2", "--cols", "3"]),
    ];
    for (gen, build) in cases {
        let g = cbu(&[gen, &["-o", "in.json"][..]].concat(), None, d);
        assert_eq!(code(&g), 0);
        let rep = cbu(&[build, &["-o", "rep.json"][..]].concat(), None, d);
        assert_eq!(code(&rep), 0, "{build:?}: {}", String::from_utf8_lossy(&rep.stderr));
        let v = cbu(&["verify", "rep.json", "in.json"], None, d);
        assert_eq!(code(&v), 0, "{build:?}: {}", String::from_utf8_lossy(&v.stdout));
    }
}

#[test]
fn derived_graph_constructions_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("c4.txt"), "0 1\n1 2\n2 3\n3 0\n").unwrap();
    let c4 = cbu_core::generators::cycle(4);
    let sub = cbu_core::graph::subdivide(&c4, &[2; 4]).graph;
    std::fs::write(d.join("c12.json"), serde_json::to_string(&sub).unwrap()).unwrap();
    let rep = cbu(&["build", "double-subdivision", "c4.txt"], None, d);
    assert_eq!(code(&rep), 0);
    let v = cbu(&["verify", "-", "c12.json"], Some(&rep.stdout), d);
    assert_eq!(code(&v), 0);
    let wrong = cbu(&["verify", "-", "c4.txt"], Some(&rep.stdout), d);
    assert_eq!(code(&wrong), 1);
    assert_eq!(json(&wrong)["verified"], false);
    assert!(json(&wrong)["vertex_count"].is_object());

    let k3 = cbu(&["build", "cbu"], Some(b"0 1\n1 2\n0 2\n"), d);
    assert_eq!(code(&k3), 1);
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let run = |args: &[&str], input: Option<&[u8]>| cbu(args, input, d).stdout;
    let rep = run(&["build", "grid-2cbu", "--n", "3"], None);
    assert_eq!(run(&["svg"], Some(&rep)), run(&["svg"], Some(&rep)));
    assert!(String::from_utf8_lossy(&run(&["svg"], Some(&rep))).starts_with("<svg"));
    let g = run(&["gen", "double-wheel", "--g", "4"], None);
    assert_eq!(run(&["decide"], Some(&g)), run(&["decide"], Some(&g)));
    let dot = run(&["gen", "cycle", "--n", "6", "--format", "dot"], None);
    assert_eq!(run(&["analyze", "--girth"], Some(&dot)), run(&["analyze", "--girth"], Some(&dot)));
}

#[test]
fn emitted_json_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let g = cbu(&["gen", "hypercube", "--d", "3"], None, d);
    let back: cbu_core::Graph = serde_json::from_slice(&g.stdout).unwrap();
    assert_eq!(back, cbu_core::generators::hypercube(3));
    let rep = cbu(&["build", "shift", "--m", "4"], None, d);
    let r: cbu_core::BoxRepresentation = serde_json::from_slice(&rep.stdout).unwrap();
    assert_eq!(r, cbu_core::constructors::shift_graph_representation(4).unwrap());
    let c = cbu(&["decide"], Some(&g.stdout), d);
    let cert: cbu_core::recognition::CbuCertificate = serde_json::from_slice(&c.stdout).unwrap();
    assert!(cert.is_member());
}

#[test]
fn analyze_reports_exact_values() {
    let dir = tempfile::tempdir().unwrap();
    let g = cbu(&["gen", "jones", "--i", "2"], None, dir.path());
    let o = cbu(&["analyze", "-", "--alpha", "--chif"], Some(&g.stdout), dir.path());
    assert_eq!(code(&o), 0);
    let a = json(&o);
    assert_eq!(a["alpha"]["value"], 3);
    assert!(a.get("girth").is_none());
    let value = a["chif"]["value"].as_str().unwrap();
    let (p, q) = value.split_once('/').unwrap();
    let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
    assert!(3 * p >= 8 * q);
}

#[test]
fn selftest_quick_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = cbu(&["selftest", "--seed", "4"], None, dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    let j = cbu(&["selftest", "--seed", "4", "--json"], None, dir.path());
    assert_eq!(json(&j)["seed"], 4);
}
