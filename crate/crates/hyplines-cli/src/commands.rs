//! Subcommand implementations and the exit-code mapping.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

use hyplines::curves::{
    causal_classify_g0, causal_classify_g1, presentation_data, standard_presentation,
    velocity_gtangent,
};
use hyplines::linespace::{
    base_tangent, classify_periodic, from_unit_tangent, geodesic_in_g, minitwistor_f,
    minitwistor_f_inv, norm_g0, norm_g1, CausalType, MetricChoice, Periodicity,
};
use hyplines::minkowski::AlgebraElement;
use hyplines::verify::run_suite;

use crate::io::{
    all_finite, vec_of, vector, CurveJson, MinitwistorJson, PairJson, PointDirJson,
};
use crate::IoArgs;

/// Failures carrying their CLI exit code.
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn schema(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    fn from_core(err: hyplines::Error) -> Self {
        // Domain, feature, dimension, range and numeric failures share the
        // "invalid input for this operation" exit code.
        CliError { code: 3, message: err.to_string() }
    }

    pub fn report(self) -> ExitCode {
        eprintln!("error: {}", self.message);
        ExitCode::from(self.code)
    }
}

impl From<hyplines::Error> for CliError {
    fn from(err: hyplines::Error) -> Self {
        CliError::from_core(err)
    }
}

type CliResult = Result<ExitCode, CliError>;

fn read_input(io: &IoArgs) -> Result<String, CliError> {
    match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::schema(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::schema(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::schema(format!("invalid JSON: {e}")))
}

fn emit<T: Serialize>(io_out: Option<&Path>, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    match io_out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| CliError::schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn classify(
    io: &IoArgs,
    metric: &str,
    lambda: f64,
    mu: f64,
    band: f64,
    expected_n: Option<usize>,
) -> CliResult {
    let text = read_input(io)?;
    let curve_json: CurveJson = parse(&text)?;
    if !curve_json.finite() {
        return Err(CliError::schema("curve contains non-finite numbers"));
    }
    let curve = curve_json.to_curve()?;
    let config = hyplines::SpaceConfig::from_ambient_dim(curve.dim())?;
    let n = config.n();
    if let Some(expect) = expected_n {
        if expect != n {
            return Err(CliError::from_core(hyplines::Error::Dimension {
                expected: expect + 2,
                got: curve.dim(),
            }));
        }
    }
    let choice = match metric {
        "g1" => MetricChoice::G1,
        "g0" => MetricChoice::G0,
        "combo" => MetricChoice::Combo { lambda, mu },
        other => return Err(CliError::schema(format!("unknown metric {other:?}"))),
    };
    choice.validate(n)?;

    let mid = curve.len() / 2;
    let sp = standard_presentation(&curve, mid, curve.sample(mid).base())?;

    let mut samples = Vec::new();
    for i in 1..curve.len() - 1 {
        let gt = velocity_gtangent(&sp, i)?;
        let (beta_dot, _, d_alpha) = presentation_data(&sp, i)?;
        let label = match choice {
            MetricChoice::G1 => causal_classify_g1(&sp, i, band)?,
            MetricChoice::G0 => causal_classify_g0(&sp, i, band)?,
            MetricChoice::Combo { lambda, mu } => {
                let value = lambda * norm_g0(&gt)? + mu * norm_g1(&gt);
                let scale = gt.data_norm().powi(2).max(1e-12);
                CausalType::from_value(value, band, scale)
            }
        };
        let q0 = if n == 2 { Some(norm_g0(&gt)?) } else { None };
        samples.push(json!({
            "index": i,
            "t": curve.t_at(i),
            "label": label.as_str(),
            "norm_g1": norm_g1(&gt),
            "norm_g0": q0,
            "rate_displacement": beta_dot.norm(),
            "rate_variation": d_alpha.norm(),
        }));
    }
    let out = json!({
        "n": n,
        "metric": metric,
        "band": band,
        "samples": samples,
    });
    emit(io.json_out.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn geodesic(io: &IoArgs, s_max: f64, steps: usize) -> CliResult {
    let text = read_input(io)?;
    let velocity: crate::io::VelocityJson = parse(&text)?;
    if !all_finite(&velocity.x) || !all_finite(&velocity.y) {
        return Err(CliError::schema("velocity contains non-finite numbers"));
    }
    if velocity.x.len() != velocity.y.len() {
        return Err(CliError::schema("x and y must have equal lengths"));
    }
    if steps == 0 || !s_max.is_finite() {
        return Err(CliError::schema("need steps ≥ 1 and finite s_max"));
    }
    let x = vector(&velocity.x);
    let y = vector(&velocity.y);
    if x.amax() == 0.0 && y.amax() == 0.0 {
        return Err(CliError::from_core(hyplines::Error::Domain(
            "velocity must be nonzero".into(),
        )));
    }
    let vel = AlgebraElement::horizontal(&x).add(&AlgebraElement::vertical(&y))?;
    let verdict = classify_periodic(&vel)?;

    let mut samples = Vec::new();
    for k in 0..=steps {
        let s = s_max * k as f64 / steps as f64;
        let geo = geodesic_in_g(&vel, s)?;
        samples.push(json!({
            "s": s,
            "minus": vec_of(geo.minus().dir()),
            "plus": vec_of(geo.plus().dir()),
        }));
    }
    let periodicity = match verdict {
        Periodicity::Periodic { period } => json!({"status": "periodic", "period": period}),
        Periodicity::NonPeriodic => json!({"status": "non_periodic"}),
    };
    let out = json!({
        "n": x.len(),
        "periodicity": periodicity,
        "samples": samples,
    });
    emit(io.json_out.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn convert(io: &IoArgs) -> CliResult {
    let text = read_input(io)?;
    let value: Value = parse(&text)?;
    let obj = value.as_object().ok_or_else(|| CliError::schema("expected a JSON object"))?;

    let tangent = if obj.contains_key("minus") && obj.contains_key("plus") {
        let pair: PairJson = parse(&text)?;
        if !all_finite(&pair.minus) || !all_finite(&pair.plus) {
            return Err(CliError::schema("pair contains non-finite numbers"));
        }
        base_tangent(&pair.to_geodesic()?)?
    } else if obj.contains_key("p") && obj.contains_key("v") {
        let pd: PointDirJson = parse(&text)?;
        if !all_finite(&pd.p) || !all_finite(&pd.v) {
            return Err(CliError::schema("point-direction contains non-finite numbers"));
        }
        pd.to_unit_tangent()?
    } else if obj.contains_key("v") && obj.contains_key("x") {
        let mt: MinitwistorJson = parse(&text)?;
        if !all_finite(&mt.v) || !all_finite(&mt.x) {
            return Err(CliError::schema("minitwistor data contains non-finite numbers"));
        }
        base_tangent(&minitwistor_f(&vector(&mt.v), &vector(&mt.x))?)?
    } else {
        return Err(CliError::schema(
            "unrecognized representation: expected {minus,plus}, {p,v} or {v,x}",
        ));
    };

    let geo = from_unit_tangent(&tangent);
    let canonical = base_tangent(&geo)?;
    let (v, x) = minitwistor_f_inv(&geo)?;

    let out = json!({
        "point_dir": PointDirJson::from_unit_tangent(&canonical),
        "pair": PairJson::from_geodesic(&geo),
        "minitwistor": MinitwistorJson { v: vec_of(&v), x: vec_of(&x) },
    });
    emit(io.json_out.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(suite: &str, n: usize, seed: u64, json_out: Option<&Path>) -> CliResult {
    let report = run_suite(suite, n, seed).map_err(|e| match e {
        // An unknown suite name is a usage error.
        hyplines::Error::Domain(msg) if msg.starts_with("unknown suite") => CliError::schema(msg),
        other => CliError::from_core(other),
    })?;
    let passed = report.passed();
    match json_out {
        Some(path) => std::fs::write(path, report.to_json())
            .map_err(|e| CliError::schema(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{}", report.to_json()),
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
