mod common;

use std::fs;

use common::{coxlink, coxlink_with_input};
use coxlink_core::fixtures;
use serde_json::Value;

fn temp_graph(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("coxlink-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

const TRIANGLE: &str = "vertex a +\nvertex b -\nvertex c +\nedge a b\nedge b c\nedge c a\n";

#[test]
fn analyze_five_vertex_fixture_prints_alexander() {
    let r = coxlink(&["analyze", "paper-5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r
        .stdout
        .contains("Δ(t) = t^5 - 10t^4 + 27t^3 - 27t^2 + 10t - 1"));
    assert!(r
        .stdout
        .contains("c(t) = t^5 + 10t^4 + 27t^3 + 27t^2 + 10t + 1"));
}

#[test]
fn analyze_a2_radius_line() {
    let r = coxlink(&["analyze", "a2"]);
    assert_eq!(r.code, 0);
    let line = r
        .stdout
        .lines()
        .find(|l| l.starts_with("spectral radius"))
        .unwrap();
    assert!(line.contains("[2.6180339884, 2.6180339894]"), "{line}");
}

#[test]
fn analyze_json_schema() {
    let r = coxlink(&["analyze", "paper-5", "--json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["mode"], "alternating");
    assert_eq!(v["graph"]["n"], 5);
    assert_eq!(
        v["polynomials"]["alexander"],
        serde_json::json!([-1, 10, -27, 27, -10, 1])
    );
    for flag in [
        "real_stable",
        "sign_alternating",
        "trapezoidal",
        "log_concave",
        "biorderable_implied",
    ] {
        assert_eq!(v["flags"][flag], true, "{flag}");
    }
    assert!(v["spectral_radius"]["lo"].as_str().unwrap().contains('/'));
}

#[test]
fn example_round_trips_through_analyze() {
    for name in fixtures::NAMES {
        let ex = coxlink(&["example", name]);
        assert_eq!(ex.code, 0);
        let classical =
            !coxlink_core::graph::is_alternating_sign(&fixtures::by_name(name).unwrap());
        let mut args = vec!["analyze", "-", "--json"];
        if classical {
            args.push("--classical");
        }
        let piped = coxlink_with_input(&args, Some(&ex.stdout));
        assert_eq!(piped.code, 0, "{name}: {}", piped.stderr);
        let mut direct_args = args.clone();
        direct_args[1] = name;
        let direct = coxlink(&direct_args);
        assert_eq!(piped.stdout, direct.stdout, "{name}");
    }
}

#[test]
fn example_shapes() {
    let a2 = coxlink(&["example", "a2"]).stdout;
    assert_eq!(
        (a2.matches("vertex").count(), a2.matches("edge").count()),
        (2, 1)
    );
    let e10 = coxlink(&["example", "e10-classical"]).stdout;
    assert_eq!(e10.matches("vertex").count(), 10);
    assert_eq!(e10.matches("edge").count(), 9);
    assert!(e10
        .lines()
        .filter(|l| l.starts_with("vertex"))
        .all(|l| l.ends_with('+')));
}

#[test]
fn unknown_example_lists_names() {
    let r = coxlink(&["example", "e8"]);
    assert_eq!(r.code, 2);
    for name in fixtures::NAMES {
        assert!(r.stderr.contains(name));
    }
}

#[test]
fn triangle_is_a_contract_violation() {
    let path = temp_graph("triangle.txt", TRIANGLE);
    let r = coxlink(&["analyze", path.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("not alternating-sign"));
    let r = coxlink(&["analyze", path.to_str().unwrap(), "--classical"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("odd cycle"));
}

#[test]
fn parse_error_reports_line() {
    let path = temp_graph("bad.txt", "vertex a +\nvertex b -\nedge a c\n");
    let r = coxlink(&["analyze", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
}

#[test]
fn missing_input_is_an_input_error() {
    assert_eq!(coxlink(&["analyze", "/nonexistent/graph.txt"]).code, 2);
}

#[test]
fn single_vertex_is_too_small() {
    let r = coxlink_with_input(&["analyze", "-"], Some("vertex a +\n"));
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn classical_report() {
    let r = coxlink(&["analyze", "e10-classical"]);
    assert_eq!(r.code, 3);
    let r = coxlink(&["analyze", "e10-classical", "--classical", "--json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["mode"], "classical");
    assert_eq!(
        v["polynomials"]["coxeter"],
        serde_json::json!([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    );
    assert!(v["max_real_root"]["lo"].is_string());
}

#[test]
fn epsilon_validation() {
    assert_eq!(coxlink(&["analyze", "a2", "--epsilon", "0"]).code, 3);
    assert_eq!(coxlink(&["analyze", "a2", "--epsilon=-1/2"]).code, 3);
    assert_eq!(coxlink(&["analyze", "a2", "--epsilon", "tiny"]).code, 2);
    let coarse = coxlink(&["analyze", "a2", "--epsilon", "1/4", "--json"]);
    assert_eq!(coarse.code, 0);
}

#[test]
fn compare_examples() {
    let r = coxlink(&["compare", "a2", "p3-alt"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("extension: yes\ninterlaced: yes\n"));
    let r = coxlink(&["compare", "p5", "k33"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("extension: no\ninterlaced: no\n"));
    assert!(r.stdout.contains("adjacency interlaced: no"));
    let r = coxlink(&["compare", "a2", "a2"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("degree mismatch"));
}

#[test]
fn compare_json() {
    let r = coxlink(&["compare", "a2", "p3-alt", "--json"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["extension"], true);
    assert_eq!(v["alexander_interlaced"], true);
}

#[test]
fn verify_small_sweep() {
    let r = coxlink(&["verify", "--nmax", "5", "--trials", "10", "--json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["counterexample"].is_null());
    assert_eq!(v["config"]["n_max"], 5);
    assert!(r.stderr.contains("wall time"));
    assert!(!r.stdout.contains("wall"));
}

#[test]
fn verify_rejects_small_nmax() {
    let r = coxlink(&["verify", "--nmax", "1"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("out of range"));
    assert_eq!(coxlink(&["min-search", "--nmax", "1"]).code, 3);
}

#[test]
fn min_search_finds_two_vertex_tree() {
    let r = coxlink(&["min-search", "--nmax", "6"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("attained at n=2"));
    assert!(r.stdout.contains("[2.618033988"));
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["analyze", "paper-5", "--json"][..],
        &["compare", "p5", "k33", "--json"],
        &[
            "verify", "--nmax", "5", "--trials", "20", "--seed", "7", "--json",
        ],
        &["min-search", "--nmax", "5", "--json"],
    ] {
        assert_eq!(coxlink(args).stdout, coxlink(args).stdout, "{args:?}");
    }
}
