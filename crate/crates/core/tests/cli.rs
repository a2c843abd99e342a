use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use spr::cli::run;
use spr::fixtures;
use spr::io::serialize_graph;
use spr::recognition::chordality_check;
use spr::{find_claw, Graph, Vertex};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn spr(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["spr"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn graph_file(dir: &Path, name: &str, (g, s, t): (Graph, Vertex, Vertex)) -> String {
    write(dir, name, &serialize_graph(&g, s, t))
}

#[test]
fn reach_diamond_auto() {
    let dir = tempfile::tempdir().unwrap();
    let g = graph_file(dir.path(), "d.graph", fixtures::diamond());
    let p = write(dir.path(), "p.path", "path 1 2 4\n");
    let q = write(dir.path(), "q.path", "path 1 3 4\n");
    let out = spr(&["reach", &g, &p, &q]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "path 1 2 4\npath 1 3 4\n");
    for algo in ["chordal", "clawfree", "oracle"] {
        let out = spr(&["reach", &g, &p, &q, "--algo", algo]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().count(), 2);
    }
}

#[test]
fn reach_c6_unreachable() {
    let dir = tempfile::tempdir().unwrap();
    let g = graph_file(dir.path(), "c6.graph", fixtures::c6());
    let p = write(dir.path(), "p.path", "path 1 2 3 4\n");
    let q = write(dir.path(), "q.path", "path 1 6 5 4\n");
    let out = spr(&["reach", &g, &p, &q]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stdout, "UNREACHABLE\n");
    assert_eq!(spr(&["reach", &g, &p, &q, "--algo", "oracle"]).code, 1);
    // the chordal algorithm reports its witness cycle as an error
    let out = spr(&["reach", &g, &p, &q, "--algo", "chordal"]);
    assert_eq!(out.code, 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "p 3 1\ne 1 9\nst 1 2\n");
    let p = write(dir.path(), "p.path", "path 1 2\n");
    let out = spr(&["reach", &bad, &p, &p]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let g = graph_file(dir.path(), "d.graph", fixtures::diamond());
    let not_shortest = write(dir.path(), "x.path", "path 1 2 3 4\n");
    assert_eq!(spr(&["reach", &g, &not_shortest, &p]).code, 2);
    assert_eq!(spr(&["count-isolated", "/nonexistent/file"]).code, 2);
    assert_eq!(spr(&["frobnicate"]).code, 2);
    assert_eq!(spr(&["gen", "cycle", "2"]).code, 2);
    assert_eq!(spr(&["gen", "ktree", "3", "3"]).code, 2);
    assert_eq!(spr(&["--help"]).code, 0);
}

#[test]
fn connected_and_count() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = graph_file(dir.path(), "c6.graph", fixtures::c6());
    let out = spr(&["connected", &c6]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "NO\n"));
    assert_eq!(spr(&["connected", &c6, "--algo", "oracle"]).stdout, "NO\n");
    let d = graph_file(dir.path(), "d.graph", fixtures::diamond());
    let out = spr(&["connected", &d]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "YES\n"));

    let strand = dir.path().join("strand.graph");
    let strand = strand.to_str().unwrap();
    assert_eq!(spr(&["gen", "main-strand", "2", "--out", strand]).code, 0);
    assert_eq!(spr(&["count-isolated", strand]).stdout, "16\n");
    assert_eq!(spr(&["count-isolated", &c6]).stdout, "2\n");
}

#[test]
fn validate_and_layers() {
    let dir = tempfile::tempdir().unwrap();
    let g = graph_file(dir.path(), "d.graph", fixtures::diamond());
    let seq = write(
        dir.path(),
        "s.seq",
        "# two steps\npath 1 2 4\npath 1 3 4\npath 1 2 4\n",
    );
    let out = spr(&["validate", &g, &seq]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "OK\n"));
    let c6 = graph_file(dir.path(), "c6.graph", fixtures::c6());
    let jump = write(dir.path(), "j.seq", "path 1 2 3 4\npath 1 6 5 4\n");
    let out = spr(&["validate", &c6, &jump]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("INVALID"));
    assert_eq!(spr(&["layers", &c6]).stdout, "1\n2 6\n3 5\n4\n");
}

#[test]
fn reduce_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(
        dir.path(),
        "k2.col",
        "p 2 1\ne 1 2\nk 4\nalpha 1 2\nbeta 3 4\n",
    );
    let prefix = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let out = spr(&["reduce", &inst, "--out", &prefix("a")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with("d 11\n"));
    assert_eq!(spr(&["reduce", &inst, "--out", &prefix("b")]).code, 0);
    for ext in [".graph", ".atlas", ".alpha.path", ".beta.path"] {
        let a = fs::read(prefix("a") + ext).unwrap();
        assert_eq!(a, fs::read(prefix("b") + ext).unwrap(), "{ext}");
    }
    let out = spr(&[
        "validate",
        &(prefix("a") + ".graph"),
        &(prefix("a") + ".alpha.path"),
    ]);
    assert_eq!(out.stdout, "OK\n");
    let layers = spr(&["layers", &(prefix("a") + ".graph")]).stdout;
    assert_eq!(layers.lines().count(), 12);

    let improper = write(
        dir.path(),
        "bad.col",
        "p 2 1\ne 1 2\nk 4\nalpha 1 1\nbeta 3 4\n",
    );
    assert_eq!(spr(&["reduce", &improper, "--out", &prefix("c")]).code, 2);
}

#[test]
fn generators() {
    let gen = |args: &[&str]| {
        let out = spr(args);
        assert_eq!(out.code, 0, "{}", out.stderr);
        spr::io::parse_graph(&out.stdout).unwrap()
    };
    assert_eq!(gen(&["gen", "main-strand", "1"]).graph.vertex_count(), 16);
    let kt = gen(&["gen", "ktree", "12", "3", "--seed", "5"]);
    assert!(chordality_check(&kt.graph).is_chordal());
    assert_eq!(
        spr(&["gen", "ktree", "12", "3", "--seed", "5"]).stdout,
        spr(&["gen", "ktree", "12", "3", "--seed", "5"]).stdout
    );
    let lg = gen(&["gen", "linegraph", "8", "0.4", "--seed", "2"]);
    assert!(find_claw(&lg.graph).is_none());
    let c = gen(&["gen", "cycle", "7"]);
    assert_eq!((c.s, c.t), (0, 3));
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c6: PathBuf = dir.path().join("c6.graph");
    fs::write(&c6, serialize_graph(&fixtures::cycle(6), 0, 3)).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_spr"))
        .arg("connected")
        .arg(&c6)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&status.stdout), "NO\n");
}
