use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn shiftcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftcs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn solve_three_collinear_points() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pts.txt", "0 0 3\n1 0 2\n3 0 2\n");
    let out = shiftcs(&["solve", "--problem", "wis-udg", "--eps", "4", "--input", &f]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["objective"], 5.0);
    assert_eq!(v["feasible"], true);
    assert_eq!(v["k"], 7);
    assert_eq!(v["shifts_evaluated"], 49);
    assert_eq!(v["indices"], serde_json::json!([0, 2]));
    for key in ["problem", "eps", "n", "size", "best_shift", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn vertex_cover_of_edgeless_input_is_empty() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "far.txt", "0 0 1\n10 0 1\n0 10 1\n");
    let out = shiftcs(&["solve", "--problem", "vc-udg", "--eps", "1", "--input", &f]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["size"], 0);
}

#[test]
fn weighted_vertex_cover_is_rejected() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "w.txt", "0 0 2\n");
    let out = shiftcs(&["solve", "--problem", "vc-udg", "--eps", "1", "--input", &f]);
    assert_eq!(code(&out), 2);
}

#[test]
fn rectangles_need_lambda() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "r.txt", "0 0 1 1 5\n0.9 0 1 1 4\n2 0 1 1 3\n");
    let out = shiftcs(&["solve", "--problem", "wis-rect", "--eps", "6", "--input", &f]);
    assert_eq!(code(&out), 2);
    let out = shiftcs(&[
        "solve", "--problem", "wis-rect", "--eps", "6", "--lambda", "1", "--input", &f,
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["feasible"], true);
    let out = shiftcs(&["oracle", "--problem", "wis-rect", "--input", &f]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["objective"], 8.0);
    assert_eq!(v["exact"], true);
}

#[test]
fn oracle_reports_exact_values() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "line.txt", "0 0 1\n2 0 1\n4 0 1\n");
    let out = shiftcs(&["oracle", "--problem", "ds-udg", "--input", &f]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["indices"], serde_json::json!([1]));
    assert_eq!(v["exact"], true);
    let out = shiftcs(&["oracle", "--problem", "vc-udg", "--input", &f]);
    assert_eq!(json(&out)["indices"], serde_json::json!([1]));
}

#[test]
fn oracle_cap_exits_with_budget_code() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "line.txt", "0 0 1\n2 0 1\n4 0 1\n");
    let out = shiftcs(&["oracle", "--problem", "wis-udg", "--input", &f, "--max-coreset", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn partial_domination_reads_target_flags() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pds.txt", "0 0 1 0\n2 0 1 0\n4 0 1 1\n");
    let out = shiftcs(&["oracle", "--problem", "pds-udg", "--input", &f]);
    assert_eq!(json(&out)["indices"], serde_json::json!([1]));
    let out = shiftcs(&["solve", "--problem", "pds-udg", "--eps", "4", "--input", &f]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["feasible"], true);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "0 0 1\n0 0 -1\n");
    let out = shiftcs(&["solve", "--problem", "wis-udg", "--eps", "4", "--input", &f]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = shiftcs(&["solve", "--problem", "nope", "--eps", "4", "--input", &f]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pts.txt", "0 0 3\n1 0 2\n3 0 2\n");
    let j = dir.path().join("out.json");
    let out = shiftcs(&[
        "solve", "--problem", "ds-udg", "--eps", "4", "--input", &f, "--json",
        j.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&j).unwrap()).unwrap();
    assert_eq!(v["feasible"], true);
}

#[test]
fn verify_wis_within_guarantee() {
    let out = shiftcs(&[
        "verify", "--problem", "wis-udg", "--n", "20", "--trials", "200", "--eps", "4", "--seed", "1",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert!(v["max_ratio"].as_f64().unwrap() <= 8.0);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn verify_ds_within_guarantee() {
    let out = shiftcs(&[
        "verify", "--problem", "ds-udg", "--n", "16", "--trials", "200", "--eps", "4",
    ]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["max_ratio"].as_f64().unwrap() <= 8.0);
}

#[test]
fn verify_other_problems() {
    for (p, eps) in [("vc-udg", "1"), ("pds-udg", "4"), ("wis-rect", "6")] {
        let out = shiftcs(&["verify", "--problem", p, "--n", "12", "--trials", "20", "--eps", eps]);
        assert_eq!(code(&out), 0, "{p}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn verify_zero_trials_is_empty() {
    let out = shiftcs(&["verify", "--problem", "wis-udg", "--n", "10", "--trials", "0", "--eps", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["trials"], 0);
    assert!(v["max_ratio"].is_null());
}

fn strip_elapsed(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn gen_then_solve_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = shiftcs(&[
            "gen", "--n", "300", "--box", "30", "--seed", "5", "--weights", "0.5,2",
            "--out", p.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let run = |p: &Path| {
        strip_elapsed(json(&shiftcs(&[
            "solve", "--problem", "wis-udg", "--eps", "4", "--input", p.to_str().unwrap(),
        ])))
    };
    assert_eq!(run(&a), run(&a));
    let threaded = strip_elapsed(json(&shiftcs(&[
        "solve", "--problem", "wis-udg", "--eps", "4", "--threads", "3", "--input",
        a.to_str().unwrap(),
    ])));
    assert_eq!(run(&a), threaded);
}

#[test]
fn gen_rects_and_clusters() {
    let dir = TempDir::new().unwrap();
    let r = dir.path().join("r.txt");
    let out = shiftcs(&[
        "gen", "--kind", "rects", "--n", "40", "--box", "10", "--lambda", "1.5", "--out",
        r.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = shiftcs(&[
        "solve", "--problem", "wis-rect", "--eps", "6", "--lambda", "1.5", "--input",
        r.to_str().unwrap(),
    ]);
    assert_eq!(json(&out)["feasible"], true);
    let c = dir.path().join("c.txt");
    let out = shiftcs(&[
        "gen", "--kind", "clustered", "--clusters", "3", "--n", "20", "--radius", "0.3", "--box",
        "50", "--out", c.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = shiftcs(&["solve", "--problem", "ds-udg", "--eps", "4", "--input", c.to_str().unwrap()]);
    assert_eq!(json(&out)["feasible"], true);
}

#[test]
fn bench_emits_csv() {
    let out = shiftcs(&[
        "bench", "--problem", "ds-udg", "--sizes", "200,400", "--repeats", "1",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "problem,n,eps,k,elapsed_ms,objective,baseline_objective,time_per_point_ns"
    );
    assert_eq!(lines.len(), 3);
    for row in &lines[1..] {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 8);
        assert_eq!(cells[0], "ds-udg");
        assert!(cells[7].parse::<f64>().unwrap() > 0.0);
    }
    let out = shiftcs(&["bench", "--problem", "bogus", "--sizes", "10"]);
    assert_eq!(code(&out), 2);
}
