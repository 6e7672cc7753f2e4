//! Regenerates the golden curve fixtures under `fixtures/`.
//!
//! Run from the repository root:
//! `cargo run -p hyplines-cli --example gen_fixtures`
//!
//! The fixtures are the named curve families at n = 2 on a short uniform
//! grid, plus one velocity input for the `geodesic` subcommand. Expected
//! outputs are regenerated by piping the fixtures through the CLI (see the
//! CLI test suite, which pins them).

use std::path::PathBuf;

use hyplines::curves::{families, CurveInG};
use serde_json::json;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn curve_json(c: &CurveInG) -> serde_json::Value {
    let samples: Vec<_> = (0..c.len())
        .map(|i| {
            let s = c.sample(i);
            json!({
                "p": s.base().coords().iter().cloned().collect::<Vec<f64>>(),
                "v": s.vec().iter().cloned().collect::<Vec<f64>>(),
            })
        })
        .collect();
    json!({"h": c.h(), "t_start": c.t_start(), "samples": samples})
}

fn main() {
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).expect("fixtures dir");
    let h = 1e-3;
    let (t0, t1) = (0.0, 0.02);
    let named = [
        ("rotation", families::rotation(2, h, t0, t1).unwrap()),
        ("translation", families::translation(2, h, t0, t1).unwrap()),
        ("g1_orbit", families::null_orbit(2, h, t0, t1).unwrap()),
        ("relifted_rotation", families::relifted_rotation(2, h, t0, t1).unwrap()),
    ];
    for (name, curve) in named {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&curve_json(&curve)).unwrap()).unwrap();
        println!("wrote {}", path.display());
    }

    let rotation_velocity = json!({"x": [0.0, 0.0], "y": [1.0, 0.0]});
    let path = dir.join("rotation_velocity.json");
    std::fs::write(&path, serde_json::to_string_pretty(&rotation_velocity).unwrap()).unwrap();
    println!("wrote {}", path.display());
}
