//! Batch front-end: key = value run configurations dispatched to the
//! engine, with CSV / grid artifacts written deterministically.
//!
//! CSV values carry 9 fractional digits with '.' as decimal separator;
//! identical configurations produce byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64 as C64;

use crate::boost::boosted_energy;
use crate::cat::{cat_schedule, dirac_cat, trajectory, Regime};
use crate::diagnostics::{
    coherence_magnitude, husimi_q, position_expectation, purity, reduced_density, GridSpec,
    Subsystem,
};
use crate::error::Error;
use crate::evolution::{coherent_initial_state, evolve, spin_populations, EvolutionPlan};
use crate::hamiltonian::{apply_hamiltonian, landau_energy, ModelParams, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Evolve,
    Cat,
    Trajectory,
    Husimi,
}

impl Command {
    fn parse(value: &str) -> Option<Self> {
        match value {
            "spectrum" => Some(Command::Spectrum),
            "evolve" => Some(Command::Evolve),
            "cat" => Some(Command::Cat),
            "trajectory" => Some(Command::Trajectory),
            "husimi" => Some(Command::Husimi),
            _ => None,
        }
    }
}

/// Parsed run configuration. The cutoff default ceil(z^2 + 6z) + 8
/// always satisfies the coherent truncation guard.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub xi: f64,
    pub z_abs: f64,
    pub pz: f64,
    pub cutoff: usize,
    pub t_max: f64,
    pub n_steps: usize,
    pub output_path: String,
}

/// CLI failures, keyed to process exit codes: 2 config, 3 guard, 4 I/O.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("guard error: {0}")]
    Guard(#[from] Error),
    #[error("io error writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl RunConfig {
    /// Parses `key = value` lines; '#' starts a comment, blank lines are
    /// skipped, unknown keys are rejected. `overrides` are applied on top
    /// in order, same syntax.
    pub fn parse(text: &str, overrides: &[String]) -> Result<Self, CliError> {
        let mut command = None;
        let mut xi = None;
        let mut z_abs: f64 = 0.0;
        let mut pz: f64 = 0.0;
        let mut cutoff: Option<usize> = None;
        let mut t_max: f64 = 10.0;
        let mut n_steps: usize = 200;
        let mut output_path = None;

        let mut assign = |key: &str, value: &str| -> Result<(), CliError> {
            let bad = |msg: &str| CliError::Config(format!("key '{key}': {msg} (got '{value}')"));
            match key {
                "command" => {
                    command =
                        Some(Command::parse(value).ok_or_else(|| bad("unknown command"))?);
                }
                "xi" => {
                    let v: f64 = value.parse().map_err(|_| bad("expected a number"))?;
                    if !(v > 0.0) {
                        return Err(bad("xi must be positive"));
                    }
                    xi = Some(v);
                }
                "z_abs" => {
                    let v: f64 = value.parse().map_err(|_| bad("expected a number"))?;
                    if v < 0.0 {
                        return Err(bad("z_abs must be non-negative"));
                    }
                    z_abs = v;
                }
                "pz" => {
                    pz = value.parse().map_err(|_| bad("expected a number"))?;
                }
                "cutoff" => {
                    let v: usize = value.parse().map_err(|_| bad("expected a positive integer"))?;
                    if v == 0 {
                        return Err(bad("cutoff must be at least 1"));
                    }
                    cutoff = Some(v);
                }
                "t_max" => {
                    let v: f64 = value.parse().map_err(|_| bad("expected a number"))?;
                    if !(v > 0.0) {
                        return Err(bad("t_max must be positive"));
                    }
                    t_max = v;
                }
                "n_steps" => {
                    let v: usize = value.parse().map_err(|_| bad("expected a positive integer"))?;
                    if v == 0 {
                        return Err(bad("n_steps must be positive"));
                    }
                    n_steps = v;
                }
                "output_path" => {
                    output_path = Some(value.to_string());
                }
                _ => return Err(CliError::Config(format!("unknown key '{key}'"))),
            }
            Ok(())
        };

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            assign(key.trim(), value.trim())?;
        }
        for entry in overrides {
            let (key, value) = entry.split_once('=').ok_or_else(|| {
                CliError::Config(format!("override '{entry}': expected key=value"))
            })?;
            assign(key.trim(), value.trim())?;
        }

        let command = command.ok_or_else(|| CliError::Config("missing key 'command'".into()))?;
        let xi = xi.ok_or_else(|| CliError::Config("missing key 'xi'".into()))?;
        let output_path =
            output_path.ok_or_else(|| CliError::Config("missing key 'output_path'".into()))?;
        let cutoff = cutoff
            .unwrap_or_else(|| (z_abs * z_abs + 6.0 * z_abs).ceil() as usize + 8);
        Ok(Self {
            command,
            xi,
            z_abs,
            pz,
            cutoff,
            t_max,
            n_steps,
            output_path,
        })
    }
}

fn fmt(x: f64) -> String {
    // -0.000000000 and 0.000000000 must serialize identically
    let s = format!("{:.9}", x);
    if s == "-0.000000000" {
        "0.000000000".to_string()
    } else {
        s
    }
}

fn params_of(config: &RunConfig) -> Result<ModelParams, CliError> {
    ModelParams::new(config.xi, config.pz, config.cutoff).map_err(CliError::from)
}

fn time_grid(config: &RunConfig) -> impl Iterator<Item = f64> + '_ {
    let dt = config.t_max / config.n_steps as f64;
    (0..=config.n_steps).map(move |k| dt * k as f64)
}

/// Runs a configuration, producing its output file. Returns the rendered
/// artifact so callers (and tests) can inspect it without re-reading.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let rendered = render(config)?;
    if let Some(parent) = Path::new(&config.output_path).parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|source| CliError::Io {
                path: config.output_path.clone(),
                source,
            })?;
        }
    }
    std::fs::write(&config.output_path, &rendered).map_err(|source| CliError::Io {
        path: config.output_path.clone(),
        source,
    })?;
    Ok(rendered)
}

/// Renders the artifact for a configuration without touching the filesystem.
pub fn render(config: &RunConfig) -> Result<String, CliError> {
    match config.command {
        Command::Spectrum => render_spectrum(config),
        Command::Evolve => render_evolve(config),
        Command::Trajectory => render_trajectory(config),
        Command::Cat => render_cat(config),
        Command::Husimi => render_husimi(config),
    }
}

fn render_spectrum(config: &RunConfig) -> Result<String, CliError> {
    let params = params_of(config)?;
    let mut out = String::from("n_r,E_plus_rest_frame,E_plus_boosted,E_nonrel_approx\n");
    for n_r in 0..config.cutoff {
        let e_rest = landau_energy(&params, n_r, Sign::Plus);
        let e_boosted = boosted_energy(&params, n_r, Sign::Plus);
        let e_nonrel = 1.0 + 2.0 * config.xi * (n_r as f64 + 1.0);
        let _ = writeln!(
            out,
            "{},{},{},{}",
            n_r,
            fmt(e_rest),
            fmt(e_boosted),
            fmt(e_nonrel)
        );
    }
    Ok(out)
}

fn render_evolve(config: &RunConfig) -> Result<String, CliError> {
    let params = params_of(config)?;
    let plan = EvolutionPlan::new(params);
    let initial = coherent_initial_state(&params, config.z_abs)?;
    let mut out = String::from("t,pop1,pop2,pop3,pop4,norm,energy,spinor_purity\n");
    for t in time_grid(config) {
        let state = evolve(&initial, &plan, t)?;
        let pops = spin_populations(&state);
        let energy = state
            .inner_product(&apply_hamiltonian(&params, &state)?)
            .map_err(Error::from)?
            .re;
        let spinor_purity = purity(&reduced_density(&state, Subsystem::Spinor));
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt(t),
            fmt(pops[0]),
            fmt(pops[1]),
            fmt(pops[2]),
            fmt(pops[3]),
            fmt(state.norm()),
            fmt(energy),
            fmt(spinor_purity)
        );
    }
    Ok(out)
}

fn render_trajectory(config: &RunConfig) -> Result<String, CliError> {
    let params = params_of(config)?;
    let plan = EvolutionPlan::new(params);
    let z = C64::new(0.0, config.z_abs);
    // exact + branch: |+E_z>|z> evolved spectrally
    let initial = crate::cat::asymptotic_state(&params, z, Sign::Plus, 0.0)?.to_dirac_state();
    let mut out = String::from("t,x_exact,y_exact,x_asym,y_asym\n");
    for t in time_grid(config) {
        let state = evolve(&initial, &plan, t)?;
        let (x_exact, y_exact) = position_expectation(&state);
        let (x_asym, y_asym) = trajectory(&params, config.z_abs, Sign::Plus, t);
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt(t),
            fmt(x_exact),
            fmt(y_exact),
            fmt(x_asym),
            fmt(y_asym)
        );
    }
    Ok(out)
}

fn render_cat(config: &RunConfig) -> Result<String, CliError> {
    let params = params_of(config)?;
    let n_bar = config.z_abs * config.z_abs;
    let schedule = cat_schedule(&params, n_bar);
    let cat = dirac_cat(&params, C64::new(0.0, config.z_abs))?;
    // coherence from the composed two-branch state at t_d
    let plus = crate::cat::asymptotic_state(&params, C64::new(0.0, config.z_abs), Sign::Plus, schedule.t_cat)?;
    let minus = crate::cat::asymptotic_state(&params, C64::new(0.0, config.z_abs), Sign::Minus, schedule.t_cat)?;
    let weights = [cat.components[0].1, cat.components[1].1];
    let composed = plus
        .to_dirac_state()
        .scaled(C64::new(weights[0].sqrt(), 0.0))
        .add(&minus.to_dirac_state().scaled(C64::new(weights[1].sqrt(), 0.0)))
        .map_err(Error::from)?;
    let coherence =
        coherence_magnitude(&composed, &cat.components[0].0, &cat.components[1].0)?;
    let spinor_overlap = crate::cat::spinor_overlap_at_cat_time(&params, n_bar);
    let mut out = String::from(
        "t_R,t_d,spinor_overlap,component_overlap,coherence_magnitude,regime_label,weight_plus,weight_minus\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{}",
        fmt(schedule.t_revival),
        fmt(schedule.t_cat),
        fmt(spinor_overlap),
        fmt(cat.component_overlap),
        fmt(coherence),
        Regime::classify(n_bar).label(),
        fmt(weights[0]),
        fmt(weights[1])
    );
    Ok(out)
}

fn render_husimi(config: &RunConfig) -> Result<String, CliError> {
    let params = params_of(config)?;
    let cat = dirac_cat(&params, C64::new(0.0, config.z_abs))?;
    let state = crate::hamiltonian::DiracState::product(
        [C64::ONE, C64::ZERO, C64::ZERO, C64::ZERO],
        &cat.orbital_cat,
    );
    let rho = reduced_density(&state, Subsystem::Orbital);
    let grid = husimi_q(&rho, GridSpec::covering(config.z_abs))?;
    Ok(grid.serialize())
}
