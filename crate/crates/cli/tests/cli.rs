use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn girthlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthlab"))
        .args(args)
        .env_remove("GIRTHLAB_THREADS")
        .output()
        .expect("binary runs")
}

/// The last JSON line on stdout.
fn report(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().last().unwrap_or_else(|| panic!("no stdout; stderr: {}", String::from_utf8_lossy(&out.stderr)));
    serde_json::from_str(line).unwrap()
}

fn strip_clock(mut v: Value) -> Value {
    v["manifest"]["wall_clock_ms"] = Value::Null;
    v
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn construct_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = girthlab(&["construct", "--family", "D", "--k", "3", "--q", "9", "--out", &path(dir.path(), "d.edges")]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["vertices"], 1458);
    assert_eq!(r["edges"], 1458 / 2 * 9);
    assert_eq!(r["manifest"]["parameters"]["family"], "D");
    let text = std::fs::read_to_string(dir.path().join("d.edges")).unwrap();
    assert!(text.starts_with("# family=D k=3 p=3 n=2 modulus=1,0,1 part_sizes=729,729"));

    let out = girthlab(&["construct", "--family", "g2rs", "--r", "3", "--s", "2", "--out", &path(dir.path(), "g.edges")]);
    assert_eq!(report(&out)["vertices"], 1024);

    let out = girthlab(&["construct", "--family", "D3", "--k", "2", "--q", "3", "--out", &path(dir.path(), "t.edges")]);
    assert_eq!(report(&out)["counts"]["hyperedges"], 243);
    let out = girthlab(&["analyze", &path(dir.path(), "t.edges"), "--suspension-free", "2"]);
    assert_eq!(report(&out)["suspension_free"], true);
}

#[test]
fn gate_violations_fail_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let target = path(dir.path(), "x.edges");
    let out = girthlab(&["construct", "--family", "g2rs", "--r", "4", "--s", "2", "--out", &target]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!Path::new(&target).exists());
    let out = girthlab(&["construct", "--family", "D", "--k", "3", "--q", "6", "--out", &target]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let d23 = path(dir.path(), "d23.edges");
    girthlab(&["construct", "--family", "D", "--k", "2", "--q", "3", "--out", &d23]);
    let r = report(&girthlab(&["analyze", &d23, "--girth", "--diameter", "--cycles", "0,0,auto"]));
    assert_eq!(r["girth"], 6);
    assert_eq!(r["diameter"], 4);
    assert_eq!(r["min_cycle_len"], 6);
    assert_eq!(r["base_edge"], serde_json::json!([0, 9]));
    assert!(r["runtime_ms"].is_number());

    let capped = report(&girthlab(&["analyze", &d23, "--girth", "--girth-cap", "5"]));
    assert_eq!(capped["girth_lb"], 6);

    let empty = path(dir.path(), "empty.edges");
    std::fs::write(&empty, "# family=- k=0 p=0 n=0 modulus=- part_sizes=3\nA:(0)\nA:(1)\nA:(2)\n").unwrap();
    assert_eq!(report(&girthlab(&["analyze", &empty, "--girth"]))["girth"], "infinite");
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.edges");
    std::fs::write(&bad, "# family=D k=2 p=3 n=1 modulus=0,1 part_sizes=9,9\nA:(0,0) B:(0,0)\nA:(0,0) B:(0,x)\n").unwrap();
    let out = girthlab(&["analyze", &bad, "--girth"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn modulus_choice_does_not_change_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let mut sigs = Vec::new();
    for (name, q) in [("a", "9"), ("b", "3^2:2,2,1")] {
        let file = path(dir.path(), name);
        assert!(girthlab(&["construct", "--family", "D", "--k", "3", "--q", q, "--out", &file]).status.success());
        let r = report(&girthlab(&["analyze", &file, "--signature", "--cycles", "0,0,auto"]));
        sigs.push(r["signature"].clone());
    }
    assert_eq!(sigs[0], sigs[1]);
    assert_eq!(sigs[0]["girth"]["Exact"], 8);
}

#[test]
fn verify_exit_codes() {
    let out = girthlab(&["verify", "thm10", "--r", "3", "--s", "2"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["measured"][0]["c6_free"], true);
    let out = girthlab(&["verify", "prop6", "--k", "3", "--q", "4"]);
    assert_eq!(report(&out)["measured"][0]["iso"], true);
    assert_eq!(girthlab(&["verify", "no-such-claim"]).status.code(), Some(2));
    let list = report(&girthlab(&["verify", "list"]));
    assert_eq!(list["claims"].as_array().unwrap().len(), 14);
}

#[test]
fn random_delete_is_reproducible() {
    let args = ["random-delete", "--n", "30", "--seed", "5"];
    let a = girthlab(&args);
    let b = girthlab(&args);
    assert!(a.status.success());
    let (ra, rb) = (strip_clock(report(&a)), strip_clock(report(&b)));
    assert_eq!(ra, rb);
    assert_eq!(ra["suspension_free"], true);
    assert_eq!(ra["manifest"]["seed"], 5);
    // thread count does not change the sample
    let c = Command::new(env!("CARGO_BIN_EXE_girthlab")).args(args).env("GIRTHLAB_THREADS", "1").output().unwrap();
    assert_eq!(strip_clock(report(&c))["initial_edges"], ra["initial_edges"]);
    // seed is required
    assert!(!girthlab(&["random-delete", "--n", "30"]).status.success());
}

#[test]
fn normalize_and_isocheck() {
    let r = report(&girthlab(&["normalize", "--q", "3", "--vertex", "A:(1,2)"]));
    assert_eq!(r["chain"], "t11(;2)");
    assert_eq!(r["image"], "A:(1,0)");
    let r = report(&girthlab(&["--threads", "1", "isocheck", "--map", "link", "--q", "3", "--vertex", "B:(0,2,1)"]));
    assert_eq!((r["iso"].clone(), r["map"].clone()), (Value::Bool(true), Value::from("link -> D")));
    let r = report(&girthlab(&["isocheck", "--map", "table2", "--k", "5", "--q", "3"]));
    assert_eq!(r["iso"], true);
    let r = report(&girthlab(&["isocheck", "--map", "arc-wenger", "--k", "3", "--q", "5"]));
    assert_eq!(r["iso"], true);
}
