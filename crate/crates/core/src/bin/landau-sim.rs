use std::process::ExitCode;

use clap::Parser;
use dirac_landau::cli::{run, RunConfig};

/// Batch simulator for relativistic Landau-level dynamics.
///
/// Reads a `key = value` run configuration and writes a CSV or
/// phase-space grid artifact. Exit codes: 0 success, 2 configuration
/// error, 3 truncation-guard violation, 4 I/O failure.
#[derive(Parser)]
#[command(name = "landau-sim", version)]
struct Args {
    /// Path to the run configuration file.
    config: String,

    /// Override a configuration key, e.g. --set xi=0.5 (repeatable).
    #[arg(short, long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.config) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read config '{}': {err}", args.config);
            return ExitCode::from(4);
        }
    };
    match RunConfig::parse(&text, &args.set).and_then(|config| run(&config).map(|_| config)) {
        Ok(config) => {
            println!("wrote {}", config.output_path);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
