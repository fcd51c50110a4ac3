use std::process::{Command, Output};

use serde_json::Value;

fn hypzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypzero"))
        .args(args)
        .env_remove("HYPZERO_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn zeros_of_the_quadratic() {
    let out = hypzero(&["zeros", "--N", "2", "--alphas", "1", "--betas", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "zeros");
    assert_eq!(v["pass"], true);
    let zeros = v["result"]["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 2);
    for z in zeros {
        assert!((z[0].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-14);
        assert!((z[1].as_f64().unwrap().abs() - 2f64.sqrt() / 6.0).abs() < 1e-14);
    }
}

#[test]
fn spectrum_passes_and_reports_integers() {
    let out = hypzero(&["spectrum", "--N", "2", "--alphas", "1", "--betas", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let expected = v["result"]["expected"].as_array().unwrap();
    let re: Vec<f64> = expected.iter().map(|e| e[0].as_f64().unwrap()).collect();
    assert_eq!(re, vec![3.0, 8.0]);
}

#[test]
fn special_case_residual() {
    let out = hypzero(&[
        "residual", "--N", "4", "--alphas", "1.7", "--betas", "2.3", "--case", "jac2",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert!(v["result"]["max_abs"].as_f64().unwrap() < 1e-8);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["spectrum", "--N", "0", "--alphas", "1", "--betas", "3"][..],
        &["zeros", "--N", "2", "--alphas", "1", "--betas", "0"],
        &[
            "residual", "--N", "3", "--alphas", "1.2", "--betas", "0.7", "--case", "p2q2",
        ],
        &["frobnicate"],
    ] {
        let out = hypzero(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn sweep_csv_is_deterministic() {
    let args = ["sweep", "--draws", "6", "--seed", "11", "--max-N", "8"];
    let a = hypzero(&args);
    let b = hypzero(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("draw_index,N,p,q,max_residual,spectrum_max_rel_err,pass")
    );
    assert_eq!(lines.filter(|l| l.ends_with(",true")).count(), 6);
}

#[test]
fn env_seed_overrides_flag() {
    let flag = hypzero(&["sweep", "--draws", "4", "--seed", "5"]);
    let env = Command::new(env!("CARGO_BIN_EXE_hypzero"))
        .args(["sweep", "--draws", "4", "--seed", "99"])
        .env("HYPZERO_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn out_writes_file() {
    let dir = std::env::temp_dir().join(format!("hypzero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lambda.json");
    let out = hypzero(&[
        "lambda",
        "--N",
        "3",
        "--alphas",
        "1.5",
        "--betas",
        "2.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "lambda");
    assert_eq!(v["pass"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_text_lines() {
    let out = hypzero(&["verify-all", "--draws", "10", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let passing = text.lines().filter(|l| l.starts_with("PASS [")).count();
    assert_eq!(passing, 9, "{text}");
}
