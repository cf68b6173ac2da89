use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn freeprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeprod")).args(args).output().expect("binary runs")
}

fn config(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

const W3: &str = r#"{"free_rank": 0, "factors": [[2], [2], [2]], "exponents": {"uniform": 2}}"#;

#[test]
fn relations_exact_on_w3() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w3.json", W3);
    let out = freeprod(&["relations", "--config", &cfg, "--level", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["total"], v["summary"]["passed"]);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn relations_mod_inner_n_needs_coprime_exponent() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w3.json", W3);
    let out = freeprod(&["relations", "--config", &cfg, "--level", "innN"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not coprime"));
}

#[test]
fn relations_mod_inner_n_on_w4() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w4.json", r#"{"free_rank": 0, "factors": [[2], [2], [2], [2]], "exponents": {"uniform": 2}}"#);
    let out = freeprod(&["relations", "--config", &cfg, "--level", "innN"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["level"], "innN");
}

#[test]
fn malformed_config_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "bad.json", "{ not json");
    assert_eq!(freeprod(&["relations", "--config", &cfg]).status.code(), Some(2));
    let cfg = config(&dir, "pf.json", r#"{"free_rank": 1, "factors": [[2]], "exponents": {"per_factor": [2, 2]}}"#);
    assert_eq!(freeprod(&["cover", "--config", &cfg]).status.code(), Some(2));
    let cfg = config(&dir, "fac.json", r#"{"free_rank": 0, "factors": [[4, 2]], "exponents": {"uniform": 2}}"#);
    assert_eq!(freeprod(&["cover", "--config", &cfg]).status.code(), Some(2));
    assert_eq!(freeprod(&["relations", "--config", "/nonexistent/config.json"]).status.code(), Some(2));
    assert_eq!(freeprod(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cover_of_w2_is_a_cycle() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w2.json", r#"{"free_rank": 0, "factors": [[2], [2]], "exponents": {"uniform": 2}}"#);
    let dot = dir.path().join("w2.dot");
    let out = freeprod(&["cover", "--config", &cfg, "--emit-dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 1);
    let text = std::fs::read_to_string(&dot).unwrap();
    let edges: Vec<&str> = text.lines().filter(|l| l.contains(" -- ")).collect();
    assert_eq!(edges.len(), 8);
    // every vertex has degree two
    let mut degree = std::collections::BTreeMap::new();
    for e in &edges {
        let names: Vec<&str> = e.split('"').collect();
        *degree.entry(names[1]).or_insert(0) += 1;
        *degree.entry(names[3]).or_insert(0) += 1;
    }
    assert!(degree.values().all(|&d| d == 2));
    assert_eq!(edges.iter().filter(|l| l.contains("dashed")).count(), 1);
}

#[test]
fn cover_summaries() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w3.json", W3);
    let v = json(&freeprod(&["cover", "--config", &cfg]));
    assert_eq!(v["rank"], 5);
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);

    let cfg = config(&dir, "z4.json", r#"{"free_rank": 0, "factors": [[4], [4]], "exponents": {"uniform": 2}}"#);
    let out = freeprod(&["cover", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["note"], "non-free cover");
    assert_eq!(v["vertex_labels"], serde_json::json!(["2Z/4"]));
    assert!(v["rank"].is_null());
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w3.json", W3);
    let a = freeprod(&["relations", "--config", &cfg]).stdout;
    let b = freeprod(&["relations", "--config", &cfg]).stdout;
    assert_eq!(a, b);
    let out = dir.path().join("cover.json");
    freeprod(&["cover", "--config", &cfg, "--out", out.to_str().unwrap()]);
    let c = std::fs::read(&out).unwrap();
    assert_eq!(c, freeprod(&["cover", "--config", &cfg]).stdout);
}

#[test]
fn options_in_config_are_honoured() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("rel.json");
    let body = format!(
        r#"{{"free_rank": 0, "factors": [[2], [2], [2], [2]], "exponents": {{"uniform": 2}},
            "options": {{"level": "innN", "out": "{}"}}}}"#,
        out.display()
    );
    let cfg = config(&dir, "w4.json", &body);
    assert_eq!(freeprod(&["relations", "--config", &cfg]).status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(Path::new(&out)).unwrap()).unwrap();
    assert_eq!(v["level"], "innN");
    // flags override options
    let o = freeprod(&["relations", "--config", &cfg, "--level", "exact", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(Path::new(&out)).unwrap()).unwrap();
    assert_eq!(v["level"], "exact");
}

#[test]
fn embed_pipeline() {
    let dir = TempDir::new().unwrap();
    let cfg = config(&dir, "w4.json", r#"{"free_rank": 0, "factors": [[2], [2], [2], [2]], "exponents": {"uniform": 2}}"#);
    let out = freeprod(&["embed", "--config", &cfg, "--max-len", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["m"], 17);
    assert!(v["generators"].as_array().unwrap().iter().all(|g| g["image"]["verified"] == true));

    // gcd(2, 3) = 1 puts the Z/3 factors inside N: no free basis
    let cfg = config(&dir, "f2.json", r#"{"free_rank": 2, "factors": [[3], [3]], "exponents": {"uniform": 2}}"#);
    let out = freeprod(&["embed", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-trivial vertex groups"));
}

#[test]
fn wn_subcommand() {
    let out = freeprod(&["wn", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["m"], 17);
    let out = freeprod(&["wn", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n-1 even"));
}

#[test]
fn w3f4_subcommand() {
    let out = freeprod(&["w3f4", "--max-len", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["inner"].as_array().unwrap().is_empty());
    assert_eq!(v["probed"], 46 * 6 - 1);
}
