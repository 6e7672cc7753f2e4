//! End-to-end tests of the command-line surface: exit codes, schemas, and
//! the golden fixtures.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyplines"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn CLI");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("collect CLI output")
}

fn parse_stdout(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn classify_fixtures_match_the_golden_outputs() {
    for name in ["rotation", "translation", "g1_orbit", "relifted_rotation"] {
        let input = fixtures().join(format!("{name}.json"));
        let out = binary()
            .args(["classify", "--input", input.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let got = parse_stdout(&out);
        let expected: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(fixtures().join(format!("{name}.expected.json"))).unwrap(),
        )
        .unwrap();
        assert_eq!(got, expected, "{name} drifted from the golden output");
    }
}

#[test]
fn classify_labels_per_family() {
    let expect = [
        ("rotation", "timelike"),
        ("translation", "spacelike"),
        ("g1_orbit", "null"),
    ];
    for (name, label) in expect {
        let input = fixtures().join(format!("{name}.json"));
        let out = binary()
            .args(["classify", "--input", input.to_str().unwrap()])
            .output()
            .unwrap();
        let v = parse_stdout(&out);
        for s in v["samples"].as_array().unwrap() {
            assert_eq!(s["label"], label, "{name}");
        }
    }
}

#[test]
fn classify_rejects_malformed_json_with_exit_2() {
    let out = run_with_stdin(&["classify"], "{ not json");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn classify_g0_needs_dimension_two() {
    // A curve in H⁴ (n = 3): the rotation lift embeds in any dimension.
    let mut samples = Vec::new();
    for k in 0..8 {
        let t = 1e-3 * k as f64;
        samples.push(serde_json::json!({
            "p": [1.0, 0.0, 0.0, 0.0, 0.0],
            "v": [0.0, t.cos(), t.sin(), 0.0, 0.0],
        }));
    }
    let curve = serde_json::json!({"h": 1e-3, "samples": samples}).to_string();
    let out = run_with_stdin(&["classify", "--metric", "g0"], &curve);
    assert_eq!(out.status.code(), Some(3));

    // The same curve classifies fine under g1.
    let out = run_with_stdin(&["classify"], &curve);
    assert_eq!(out.status.code(), Some(0));

    // Mismatched --n is rejected.
    let out = run_with_stdin(&["classify", "--n", "2"], &curve);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn geodesic_periodicity_and_closure() {
    let input = fixtures().join("rotation_velocity.json");
    let out = binary()
        .args([
            "geodesic",
            "--input",
            input.to_str().unwrap(),
            "--s-max",
            "6.283185307179586",
            "--steps",
            "32",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = parse_stdout(&out);
    assert_eq!(v["periodicity"]["status"], "periodic");
    let period = v["periodicity"]["period"].as_f64().unwrap();
    assert!((period - std::f64::consts::TAU).abs() < 1e-12);
    let samples = v["samples"].as_array().unwrap();
    let first = &samples[0];
    let last = &samples[samples.len() - 1];
    for key in ["minus", "plus"] {
        let a = first[key].as_array().unwrap();
        let b = last[key].as_array().unwrap();
        for (x, y) in a.iter().zip(b) {
            assert!((x.as_f64().unwrap() - y.as_f64().unwrap()).abs() < 1e-8);
        }
    }
    let expected: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(fixtures().join("rotation_velocity.expected.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v, expected);
}

#[test]
fn geodesic_non_periodic_and_zero_velocity() {
    let out = run_with_stdin(&["geodesic", "--s-max", "1.0", "--steps", "4"], r#"{"x":[1.0,0.0],"y":[1.0,0.0]}"#);
    assert!(out.status.success());
    let v = parse_stdout(&out);
    assert_eq!(v["periodicity"]["status"], "non_periodic");

    // Half-speed parallel pair is periodic with period 2π/√0.75.
    let out = run_with_stdin(&["geodesic", "--s-max", "1.0", "--steps", "4"], r#"{"x":[0.5,0.0],"y":[1.0,0.0]}"#);
    let v = parse_stdout(&out);
    let period = v["periodicity"]["period"].as_f64().unwrap();
    assert!((period - std::f64::consts::TAU / 0.75f64.sqrt()).abs() < 1e-12);

    let out = run_with_stdin(&["geodesic"], r#"{"x":[0.0,0.0],"y":[0.0,0.0]}"#);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn convert_round_trips_all_representations() {
    // Point-direction (e₀, e₁) → pair (−e₁, e₁), minitwistor (e₁, 0).
    let out = run_with_stdin(
        &["convert"],
        r#"{"p":[1.0,0.0,0.0,0.0],"v":[0.0,1.0,0.0,0.0]}"#,
    );
    assert!(out.status.success());
    let v = parse_stdout(&out);
    let minus: Vec<f64> =
        v["pair"]["minus"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let plus: Vec<f64> =
        v["pair"]["plus"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((minus[0] + 1.0).abs() < 1e-12 && minus[1].abs() < 1e-12);
    assert!((plus[0] - 1.0).abs() < 1e-12);
    let mtv: Vec<f64> =
        v["minitwistor"]["v"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let mtx: Vec<f64> =
        v["minitwistor"]["x"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((mtv[0] - 1.0).abs() < 1e-9);
    assert!(mtx.iter().all(|c| c.abs() < 1e-9));

    // Pair (−e₂, e₂) → point-direction (e₀, e₂).
    let out = run_with_stdin(&["convert"], r#"{"minus":[0.0,-1.0,0.0],"plus":[0.0,1.0,0.0]}"#);
    let v = parse_stdout(&out);
    let p: Vec<f64> =
        v["point_dir"]["p"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let dir: Vec<f64> =
        v["point_dir"]["v"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((p[0] - 1.0).abs() < 1e-12 && p[1].abs() < 1e-12);
    assert!((dir[2] - 1.0).abs() < 1e-12);

    // Minitwistor input feeds back consistently.
    let out = run_with_stdin(&["convert"], r#"{"v":[1.0,0.0,0.0],"x":[0.0,0.8,0.0]}"#);
    assert!(out.status.success());
    let v = parse_stdout(&out);
    let mtx: Vec<f64> =
        v["minitwistor"]["x"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((mtx[1] - 0.8).abs() < 1e-8);

    // Degenerate pair → exit 3.
    let out = run_with_stdin(&["convert"], r#"{"minus":[0.0,1.0,0.0],"plus":[0.0,1.0,0.0]}"#);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = binary().args(["verify", "--suite", "metrics", "--n", "2", "--seed", "7"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = parse_stdout(&out);
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["seed"], 7);

    let out = binary().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_deterministic() {
    let strip = |raw: &[u8]| {
        let mut v: serde_json::Value = serde_json::from_slice(raw).unwrap();
        v.as_object_mut().unwrap().remove("timestamp_ms");
        for c in v["checks"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("runtime_ms");
        }
        serde_json::to_string(&v).unwrap()
    };
    let run = || binary().args(["verify", "--suite", "kahler", "--seed", "11"]).output().unwrap();
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}
