use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_compaut"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(&[&["--format", "json"], args].concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

struct Files {
    _dir: TempDir,
    root: PathBuf,
}

impl Files {
    fn new() -> Self {
        let dir = TempDir::new().unwrap();
        let root = dir.path().to_path_buf();
        let files = [
            ("p3.txt", "3 2\n0 1\n1 2\n"),
            ("p4.txt", "4 3\n0 1\n1 2\n2 3\n"),
            ("k2.txt", "2 1\n0 1\n"),
            ("k3.txt", "3 3\n0 1\n0 2\n1 2\n"),
            ("k4.g6", "C~\n"),
            ("2k2.txt", "4 2\n0 1\n2 3\n"),
            ("k13.txt", "4 3\n0 1\n0 2\n0 3\n"),
            ("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"),
            ("k23.txt", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n"),
            ("empty.txt", ""),
        ];
        for (name, text) in files {
            write(&root, name, text);
        }
        Files { _dir: dir, root }
    }

    fn path(&self, name: &str) -> String {
        self.root.join(name).display().to_string()
    }
}

#[test]
fn decompose_shapes() {
    let f = Files::new();
    let t = json(&["decompose", &f.path("p4.txt")]);
    let nodes = t["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 1);
    assert_eq!(nodes[0]["kind"], "prime");

    let t = json(&["decompose", &f.path("p3.txt")]);
    let root = &t["nodes"][0];
    assert_eq!(root["kind"], "complete");
    assert_eq!(root["children"].as_array().unwrap().len(), 2);

    let dot = stdout(&run(&["--format", "dot", "decompose", &f.path("p3.txt")]));
    assert!(dot.starts_with("digraph") || dot.starts_with("graph"));
}

#[test]
fn aut_examples() {
    let f = Files::new();
    for (file, group, order) in [("2k2.txt", Some("S2 wr S2"), 8), ("k3.txt", Some("S3"), 6), ("k23.txt", None, 12)] {
        let v = json(&["aut", "--verify", &f.path(file)]);
        assert_eq!(v["order"], order, "{file}");
        assert_eq!(v["verified"], true);
        if let Some(g) = group {
            assert_eq!(v["group"], g);
        }
    }
}

#[test]
fn orientation_counts() {
    let f = Files::new();
    assert_eq!(stdout(&run(&["orientations", "--count", &f.path("k4.g6")])), "24\n");
    assert_eq!(json(&["orientations", "--count", &f.path("p4.txt")])["count"], 2);
    let listed = json(&["orientations", "--list", &f.path("p4.txt")]);
    assert_eq!(listed.as_array().unwrap().len(), 2);

    let o = run(&["orientations", "--count", &f.path("c5.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a comparability graph"));
}

#[test]
fn permutation_recognition() {
    let f = Files::new();
    let v = json(&["perm", &f.path("p4.txt")]);
    assert_eq!(v["permutation_graph"], true);
    assert_eq!(v["representation"]["l1"].as_array().unwrap().len(), 4);
    assert!(v["symmetry_class"].is_object());
    assert_eq!(json(&["perm", &f.path("c5.txt")])["permutation_graph"], false);
    let svg = stdout(&run(&["--format", "svg", "perm", &f.path("p4.txt")]));
    assert!(svg.starts_with("<svg"));
}

#[test]
fn dim4_gadgets() {
    let f = Files::new();
    let v = json(&["dim4", &f.path("k2.txt")]);
    assert_eq!(v["gadget"]["n"], 5);
    assert_eq!(v["chains"].as_array().unwrap().len(), 4);
    assert_eq!(v["verification"]["pass"], true);
    assert_eq!(json(&["dim4", &f.path("k23.txt")])["gadget"]["n"], 23);
    assert!(json(&["dim4", &f.path("k3.txt")])["chains"].is_null());
    let text = stdout(&run(&["dim4", &f.path("k2.txt")]));
    assert!(text.contains("verification PASS"));
}

#[test]
fn reduce_writes_manifest() {
    let f = Files::new();
    let out = f.root.join("out");
    let o = run(&["reduce", &f.path("k13.txt"), &f.path("p4.txt"), "--out", &out.display().to_string()]);
    assert!(o.status.success());
    let manifest: Value = serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["isomorphic"], false);
    assert!(out.join("reduced_1.txt").exists() && out.join("reduced_2.txt").exists());

    let o = run(&["reduce", &f.path("k3.txt"), &f.path("k3.txt"), "--out", &out.display().to_string()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let f = Files::new();
    assert_eq!(run(&["aut", &f.path("empty.txt")]).status.code(), Some(2));
    assert_eq!(run(&["aut", &f.path("missing.txt")]).status.code(), Some(2));
    let big = write(&f.root, "big.txt", &stdout(&run(&["--seed", "3", "random", "12", "--p", "0.6"])));
    let o = run(&["aut", "--verify", &big.display().to_string()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    let o = run(&["--oracle-bound", "12", "aut", "--verify", &big.display().to_string()]);
    assert!(o.status.success());
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    for args in [
        vec!["--format", "json", "aut", "k23.txt"],
        vec!["--format", "json", "perm", "p4.txt"],
        vec!["dim4", "k23.txt"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".txt") { f.path(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
    let a = run(&["--seed", "9", "random", "8", "--bipartite"]).stdout;
    assert_eq!(a, run(&["--seed", "9", "random", "8", "--bipartite"]).stdout);
}
