use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn sixblock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixblock")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn complete(n: usize) -> String {
    (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| format!("v{u} v{v}\n"))).collect()
}

#[test]
fn gen_certify_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let graph = dir.path().join("g.txt");
    let report = dir.path().join("r.json");
    let (g, r) = (graph.to_str().unwrap(), report.to_str().unwrap());
    let o = sixblock(&["gen", "--n", "20", "--density", "0.2", "--seed", "7", "--oriented", "--out", g]);
    assert_eq!(code(&o), 0);
    let o = sixblock(&["certify", "--input", g, "--k", "2", "--out", r]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&report);
    assert_eq!(doc["schema"], 1);
    assert!(doc["status"] == "colored" || doc["status"] == "subdivided");
    let o = sixblock(&["verify", "--input", g, "--certificate", r, "--k", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "valid");
}

#[test]
fn certify_is_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "a b\nb c\nc a\nc d\nd a\n");
    let a = sixblock(&["certify", "--input", &g, "--k", "1"]);
    let b = sixblock(&["certify", "--input", &g, "--k", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tampered_colouring_is_rejected() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "a b\nb c\nc a\n");
    let r = dir.path().join("r.json");
    assert_eq!(code(&sixblock(&["certify", "--input", &g, "--k", "1", "--out", r.to_str().unwrap()])), 0);
    let mut doc = json(&r);
    for c in doc["certificate"]["colors"].as_object_mut().unwrap().values_mut() {
        *c = Value::from(0);
    }
    let bad = write(&dir, "bad.json", &doc.to_string());
    assert_eq!(code(&sixblock(&["verify", "--input", &g, "--certificate", &bad])), 1);
}

#[test]
fn subdivision_certificate_for_complete_digraph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k10.txt", &complete(10));
    assert_eq!(code(&sixblock(&["certify", "--input", &g, "--k", "1"])), 2);
    let r = dir.path().join("r.json");
    let o = sixblock(&["certify", "--input", &g, "--k", "1", "--allow-antiparallel", "--out", r.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let doc = json(&r);
    assert_eq!(doc["status"], "subdivided");
    assert_eq!(doc["certificate"]["branch_vertices"].as_array().unwrap().len(), 6);
    assert_eq!(code(&sixblock(&["verify", "--input", &g, "--certificate", r.to_str().unwrap(), "--k", "1"])), 0);
    assert_eq!(code(&sixblock(&["verify", "--input", &g, "--certificate", r.to_str().unwrap(), "--k", "2"])), 1);
}

#[test]
fn invalid_inputs_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "path.txt", "a b\n");
    assert_eq!(code(&sixblock(&["certify", "--input", &path, "--k", "1"])), 2);
    let loops = write(&dir, "loop.txt", "a a\n");
    assert_eq!(code(&sixblock(&["certify", "--input", &loops, "--k", "1"])), 2);
    let tri = write(&dir, "tri.txt", "a b\nb c\nc a\n");
    assert_eq!(code(&sixblock(&["certify", "--input", &tri, "--k", "0"])), 2);
    assert_eq!(code(&sixblock(&["certify", "--input", &tri, "--k", "1", "--root", "zz"])), 2);
    assert_eq!(code(&sixblock(&["certify", "--input", "/nonexistent/graph", "--k", "1"])), 2);
    assert_eq!(code(&sixblock(&["oracle", "--input", &tri, "--pattern", "1,2,x"])), 2);
}

#[test]
fn oracle_verdicts_and_budget() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k8.txt", &complete(8));
    let o = sixblock(&["oracle", "--input", &g, "--pattern", "2,1,1,1,1,1"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["verdict"], "found");
    let o = sixblock(&["oracle", "--input", &g, "--pattern", "5,1,1,1,1,1"]);
    assert_eq!(serde_json::from_slice::<Value>(&o.stdout).unwrap()["verdict"], "not-found");
    assert_eq!(code(&sixblock(&["oracle", "--input", &g, "--pattern", "2,1,1,1,1,1", "--budget", "1"])), 3);
}

#[test]
fn dot_input_and_decompose() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.dot", "digraph g { r -> a -> b -> r; a -> c; c -> r; }\n");
    let o = sixblock(&["decompose", "--input", &g, "--k", "2", "--root", "r"]);
    assert_eq!(code(&o), 0);
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["root"], "r");
    assert_eq!(doc["classes"].as_array().unwrap().len(), 2);
    assert_eq!(doc["tree"]["r"]["level"], 1);
}

#[test]
fn gen_dot_parses_back() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.dot");
    let o = sixblock(&["gen", "--n", "9", "--density", "0.3", "--format", "dot", "--out", g.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = sixblock(&["certify", "--input", g.to_str().unwrap(), "--k", "3", "--allow-antiparallel"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&sixblock(&["gen", "--n", "5", "--density", "1.5"])), 2);
}
