use std::io::Write;
use std::path::PathBuf;

use isk4::graph::families::{complete_multipartite, cycle, petersen};
use isk4::io::{to_dimacs, to_edge_list, to_graph6};
use isk4_cli::{run, run_with, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use tempfile::TempDir;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn isk4(args: &[&str]) -> Out {
    let mut argv = vec!["isk4".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, body: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn color_c5_auto_json() {
    let dir = TempDir::new().unwrap();
    let c5 = file(&dir, "c5.col", &to_dimacs(&cycle(5)));
    let o = isk4(&["color", &c5, "--algorithm", "auto", "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["colors"], 3);
    let colors: Vec<u64> = v["result"]["coloring"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    for i in 0..5 {
        assert_ne!(colors[i], colors[(i + 1) % 5]);
    }
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn color_text_output() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", &to_edge_list(&cycle(4)));
    let o = isk4(&["color", &c4]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert!(o.stdout.ends_with("colors=2\n"));
}

#[test]
fn detect_k33() {
    let dir = TempDir::new().unwrap();
    let k33 = file(&dir, "k33.col", &to_dimacs(&complete_multipartite(&[3, 3])));
    let o = isk4(&["detect", "--pattern", "k33", &k33]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("found k33"));
    let o = isk4(&["detect", "--pattern", "triangle", &k33]);
    assert_eq!(o.code, EXIT_NEGATIVE);
    let o = isk4(&["detect", "--pattern", "k33", &k33, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["witness"]["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_commands() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "petersen.g6", &(to_graph6(&petersen()) + "\n"));
    let o = isk4(&["oracle", "isk4", &p]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("isk4 branch="));
    let o = isk4(&["oracle", "chi", &p, "--json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["chi"], 3);
    let c6 = file(&dir, "c6.g6", &to_graph6(&cycle(6)));
    assert_eq!(isk4(&["oracle", "isk4", &c6]).code, EXIT_NEGATIVE);
}

#[test]
fn strict_and_tolerant_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "petersen.g6", &to_graph6(&petersen()));
    let o = isk4(&["color", &p, "--algorithm", "triangle-free", "--strict"]);
    assert_eq!(o.code, EXIT_NEGATIVE);
    assert!(o.stderr.starts_with("error:"));
    let o = isk4(&["color", &p, "--algorithm", "triangle-free", "--tolerant", "--json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(!v["violations"].as_array().unwrap().is_empty());
    let o = isk4(&["color", &p, "--verify-input"]);
    assert_eq!(o.code, EXIT_NEGATIVE);
    assert!(o.stderr.contains("ISK4"));
}

#[test]
fn usage_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(isk4(&["color"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["frobnicate"]).code, EXIT_USAGE);
    let c5 = file(&dir, "c5.col", &to_dimacs(&cycle(5)));
    assert_eq!(isk4(&["color", &c5, "--bogus"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["color", &c5, "--strict", "--tolerant"]).code, EXIT_USAGE);
    let bad = file(&dir, "bad.col", "p edge 3 1\ne 1 9\n");
    let o = isk4(&["color", &bad]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("line 2"), "{}", o.stderr);
    assert_eq!(isk4(&["color", "/nonexistent/file.col"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["enumerate", "--n", "12"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["enumerate", "--n", "4", "--check", "nope"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["enumerate", "--n", "4", "--filter", "nope"]).code, EXIT_USAGE);
    assert_eq!(isk4(&["--help"]).code, EXIT_OK);
}

#[test]
fn format_flag_overrides_extension() {
    let dir = TempDir::new().unwrap();
    let p = file(&dir, "c5.col", &to_graph6(&cycle(5)));
    assert_eq!(isk4(&["color", &p]).code, EXIT_USAGE);
    assert_eq!(isk4(&["color", &p, "--format", "graph6"]).code, EXIT_OK);
}

#[test]
fn stdin_input() {
    let argv: Vec<String> = ["isk4", "oracle", "chi", "-"].iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut input = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n".as_bytes();
    let code = run_with(&argv, &mut input, &mut out, &mut err, false);
    assert_eq!(code, EXIT_OK);
    assert_eq!(String::from_utf8(out).unwrap(), "chi=3\n");
}

#[test]
fn enumerate_counts_and_suites() {
    let o = isk4(&["enumerate", "--n", "5", "--connected"]);
    assert_eq!(o.stdout.lines().count(), 21);
    let o = isk4(&["enumerate", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["counts"][0]["graphs"], 11);
    let o = isk4(&["enumerate", "--n", "1..6", "--check", "layer-forests", "--jobs", "2", "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["result"]["violations"].as_array().unwrap().len(), 0);
    assert!(v["result"].get("wall_time_ms").is_none());
    let o = isk4(&["enumerate", "--n", "4", "--check", "layer-forests", "--timing", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(v["result"]["wall_time_ms"].is_u64());
}

#[test]
fn styled_errors_only_when_asked() {
    let argv: Vec<String> = ["isk4", "color", "/nonexistent.col"].iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    run_with(&argv, &mut std::io::empty(), &mut out, &mut err, true);
    assert!(String::from_utf8(err).unwrap().contains("\x1b["));
    let o = isk4(&["color", "/nonexistent.col"]);
    assert!(!o.stderr.contains('\x1b'));
}
