use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn expander(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expander"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = expander(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    expander(args).status.code().expect("exit code")
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &Path, name: &str, spec: &str) -> PathBuf {
    let p = path(dir, name);
    ok(&["gen", spec, "-o", s(&p)]);
    p
}

fn write_edges(dir: &Path, name: &str, n: usize, edges: &[(usize, usize)]) -> PathBuf {
    let mut text = format!("{n} {}\n", edges.len());
    for (u, v) in edges {
        text.push_str(&format!("{u} {v}\n"));
    }
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn gen_writes_edge_lists_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.el", "random-regular:n=10,d=3,seed=1");
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("10 15\n"));
    assert_eq!(text.lines().count(), 16);

    let c = gen(dir.path(), "c.el", "cayley:recipe=elementary,p=3");
    assert!(fs::read_to_string(&c).unwrap().starts_with("24 "));
    let labels = fs::read_to_string(dir.path().join("c.el.labels")).unwrap();
    assert_eq!(labels.lines().count(), 24);
    assert!(labels.starts_with("0 1 0 0 1\n"));

    let again = path(dir.path(), "g2.el");
    ok(&["gen", "random-regular:n=10,d=3,seed=1", "-o", s(&again)]);
    assert_eq!(fs::read(&g).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn malformed_spec_names_the_key() {
    let out = expander(&["gen", "random-regular:n=10,d=3,sed=1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sed"));
}

#[test]
fn measure_reports_known_values() {
    let dir = tempfile::tempdir().unwrap();
    let c8 = gen(dir.path(), "c8.el", "cycle:n=8");
    let m: Value = serde_json::from_str(&ok(&["measure", s(&c8)])).unwrap();
    assert_eq!((m["girth"].as_u64(), m["diameter"].as_u64()), (Some(8), Some(4)));
    assert_eq!((m["h_exact_num"].as_u64(), m["h_exact_den"].as_u64()), (Some(2), Some(3)));

    let pet = gen(dir.path(), "p.el", "petersen");
    let m: Value = serde_json::from_str(&ok(&["measure", s(&pet)])).unwrap();
    assert_eq!((m["girth"].as_u64(), m["diameter"].as_u64()), (Some(5), Some(2)));

    let big = gen(dir.path(), "c30.el", "cycle:n=30");
    let m: Value = serde_json::from_str(&ok(&["measure", s(&big), "--exact-max", "24"])).unwrap();
    assert!(m["h_exact_num"].is_null());
    assert!(m["gap"].as_f64().unwrap() > 0.0);
    assert!(m["rho_star"].as_f64().is_some());
}

#[test]
fn percolation_endpoints_and_condition() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.el", "random-regular:n=20,d=3,seed=4");
    let (header, rows) = csv_rows(&ok(&["percolate", s(&g), "--p", "1", "--check-condition"]));
    assert_eq!(header, ["p", "seed", "retained", "components", "giant_fraction", "condition_value", "condition_ok"]);
    assert_eq!(rows[0][4], "1");

    let (header, rows) = csv_rows(&ok(&["sweep", s(&g), "--grid", "0,0.5,1", "--seeds", "3", "--check-condition"]));
    assert_eq!(header, ["p", "seed_count", "giant_mean", "giant_std", "condition_value", "condition_ok"]);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][2].parse::<f64>().unwrap(), 1.0 / 20.0);
    assert_eq!(rows[2][2], "1");

    // Condition value is rho_star * d * p, cross-checked against measure.
    let m: Value = serde_json::from_str(&ok(&["measure", s(&g)])).unwrap();
    let expected = m["rho_star"].as_f64().unwrap() * 3.0 * 0.5;
    let got: f64 = rows[1][4].parse().unwrap();
    assert!((got - expected).abs() <= 1e-8 * expected.max(1.0), "{got} vs {expected}");
    assert_eq!(rows[1][5], (expected < 1.0).to_string());

    let (_, plain) = csv_rows(&ok(&["sweep", s(&g), "--grid", "0.5"]));
    assert_eq!(plain[0][4], "");
}

#[test]
fn trim_leaves_girth_six_input_alone() {
    let dir = tempfile::tempdir().unwrap();
    let hex = gen(dir.path(), "c6.el", "cycle:n=6");
    let out = path(dir.path(), "t.el");
    ok(&["trim", s(&hex), "--girth", "6", "-o", s(&out)]);
    assert_eq!(fs::read(&hex).unwrap(), fs::read(&out).unwrap());
}

#[test]
fn search_reports_a_valid_result() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.el", "random-regular:n=24,d=4,seed=2");
    for strategy in ["trim", "anneal", "percolate-repair"] {
        let r: Value = serde_json::from_str(&ok(&["search", s(&g), "--ratio", "0.5", "--strategy", strategy, "--budget", "200"])).unwrap();
        assert_eq!(r["n"].as_u64(), Some(24), "{strategy}");
    }
}

#[test]
fn probe_on_a_cycle_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "probe.csv");
    ok(&["probe", "--family", "cycle:n=10", "--ratio", "0.5", "-o", s(&out)]);
    let (header, rows) = csv_rows(&fs::read_to_string(&out).unwrap());
    assert_eq!(header.len(), 18);
    assert_eq!(rows.len(), 1);
    let col = |name: &str| rows[0][header.iter().position(|h| h == name).unwrap()].clone();
    assert_eq!(col("success"), "true");
    assert_eq!(col("best_girth"), "10");
    assert_eq!(col("diameter"), "5");
    assert_eq!(col("ratio_achieved"), "2");
    let json: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("probe.json")).unwrap()).unwrap();
    assert!(json["summaries"].is_array());
}

#[test]
fn ball_profile_on_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c10 = gen(dir.path(), "c10.el", "cycle:n=10");
    let b: Value = serde_json::from_str(&ok(&["balls", s(&c10), "--radius", "2"])).unwrap();
    assert_eq!(b["summary"]["min_h_exact"], "1/2");
    assert_eq!(b["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn exit_codes_follow_the_taxonomy() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["gen", "cycle:n=2"]), 1);
    assert_eq!(code(&["sweep", "x.el", "--grid", "0.5", "--threads", "0"]), 1);
    assert_eq!(code(&["measure", s(&dir.path().join("missing.el"))]), 2);
    let bad = path(dir.path(), "bad.el");
    fs::write(&bad, "3 1\n0 0\n").unwrap();
    assert_eq!(code(&["measure", s(&bad)]), 2);
    let split = write_edges(dir.path(), "split.el", 4, &[(0, 1), (2, 3)]);
    assert_eq!(code(&["search", s(&split), "--girth", "4"]), 2);
    assert_eq!(code(&["tower", "--p", "5", "--order-cap", "10"]), 3);
    assert_eq!(code(&["probe", "--family", "complete:n=1"]), 3);
    let unwritable = dir.path().join("no/such/dir/out.el");
    assert_eq!(code(&["gen", "cycle:n=5", "-o", s(&unwritable)]), 4);
}

#[test]
fn manifest_replays_identically() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(dir.path(), "g.el", "random-regular:n=16,d=3,seed=9");
    let sweep = path(dir.path(), "sweep.csv");
    ok(&["sweep", s(&g), "--grid", "0.2,0.6", "--seeds", "4", "--seed", "3", "-o", s(&sweep)]);
    let manifest = dir.path().join("sweep.csv.manifest.json");
    let m: Value = serde_json::from_str(&fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(m["command"], "sweep");
    assert_eq!(m["inputs"][0]["role"], "graph");
    assert_eq!(m["config"]["seeds"], 4);

    let rerun = dir.path().join("rerun");
    let report = ok(&["replay", s(&manifest), "--out-dir", s(&rerun)]);
    assert!(report.starts_with("identical\t"), "{report}");
    assert_eq!(fs::read(&sweep).unwrap(), fs::read(rerun.join("sweep.csv")).unwrap());

    // In-place replay also reproduces the file.
    ok(&["replay", s(&manifest)]);

    // A changed input is refused as bad input data.
    fs::write(&g, "16 0\n").unwrap();
    assert_eq!(code(&["replay", s(&manifest), "--out-dir", s(&rerun)]), 2);
}

#[test]
fn tower_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "tower.csv");
    ok(&["tower", "--p", "3", "--levels", "2", "--recipe", "sanov", "-o", s(&out)]);
    let (header, rows) = csv_rows(&fs::read_to_string(&out).unwrap());
    assert_eq!(header[..5], ["recipe", "p", "level", "modulus", "vertices"]);
    let vertices: Vec<&str> = rows.iter().map(|r| r[4].as_str()).collect();
    assert_eq!(vertices, ["24", "648"]);
}
