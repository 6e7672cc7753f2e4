//! Command-line surface for the oriented-geodesic geometry library.
//!
//! Subcommands: `classify` (causal labels of a sampled curve), `geodesic`
//! (orbit samples and periodicity of a velocity in `𝔥`), `convert`
//! (point-direction ⇄ endpoint-pair ⇄ minitwistor representations), and
//! `verify` (run the numeric verification suites).
//!
//! Exit codes: 0 success, 1 verification check failure, 2 usage/schema
//! error, 3 domain/feature error.

mod commands;
mod io;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "hyplines", version, about = "Geometry of the space of oriented geodesics of hyperbolic space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct IoArgs {
    /// Read input JSON from this file instead of stdin.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Write output JSON to this file instead of stdout.
    #[arg(long)]
    json_out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the causal type of a sampled curve, per interior sample.
    Classify {
        #[command(flatten)]
        io: IoArgs,
        /// Metric: g1, g0, or combo (with --lambda/--mu).
        #[arg(long, default_value = "g1")]
        metric: String,
        /// Coefficient of g0 for --metric combo.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Coefficient of g1 for --metric combo.
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Relative band of the null/space/timelike trichotomy.
        #[arg(long, default_value_t = 1e-7)]
        band: f64,
        /// Expected dimension parameter n; checked against the data.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Sample the geodesic of 𝒢 with initial velocity x_h + y_v and report
    /// its periodicity.
    Geodesic {
        #[command(flatten)]
        io: IoArgs,
        /// Largest parameter value sampled.
        #[arg(long, default_value_t = std::f64::consts::TAU)]
        s_max: f64,
        /// Number of sample intervals.
        #[arg(long, default_value_t = 64)]
        steps: usize,
    },
    /// Convert between geodesic representations; outputs all three.
    Convert {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Run a verification suite and emit a machine-readable report.
    Verify {
        /// Suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Dimension parameter for dimension-flexible checks.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Seed for the deterministic sampling streams.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        json_out: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify { io, metric, lambda, mu, band, n } => {
            commands::classify(&io, &metric, lambda, mu, band, n)
        }
        Command::Geodesic { io, s_max, steps } => commands::geodesic(&io, s_max, steps),
        Command::Convert { io } => commands::convert(&io),
        Command::Verify { suite, n, seed, json_out } => {
            commands::verify(&suite, n, seed, json_out.as_deref())
        }
    };
    match outcome {
        Ok(code) => code,
        Err(err) => err.report(),
    }
}
