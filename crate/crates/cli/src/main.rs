use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod config;
mod io;
mod repro;

use commands::StateKind;
use config::RunConfig;

#[derive(Parser)]
#[command(
    name = "spinpair",
    version,
    about = "Electron-nuclear spin-pair entanglement toolkit"
)]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the named states as JSON.
    State {
        #[arg(value_enum)]
        kind: StateKind,
        /// Bell weight of the Werner mixture.
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Run a pulse program (--seq) on an initial state.
    Run {
        #[arg(long, value_enum, conflicts_with = "input")]
        initial: Option<StateKind>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Entanglement measures of a state file, and fidelity against a second one.
    Metrics {
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
    },
    /// Simulate the tomography protocol and write the reconstruction.
    Tomography {
        /// State to measure; the target state when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Skip the spin-temperature step and use this alpha.
        #[arg(long)]
        alpha_estimate: Option<f64>,
    },
    /// Monte Carlo error propagation; the measured matrix when no input is given.
    Mc {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Entanglement thresholds of the four preparation strategies.
    Thresholds,
    /// Recompute the headline numbers and report pass/fail.
    PaperRepro,
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let cfg = &cli.cfg;
    match cli.command {
        Command::State { kind, eps } => commands::cmd_state(kind, eps, cfg)?,
        Command::Run { initial, input } => commands::cmd_run(initial, input.as_deref(), cfg)?,
        Command::Metrics { inputs } => commands::cmd_metrics(&inputs, cfg)?,
        Command::Tomography { input, alpha_estimate } => {
            commands::cmd_tomography(input.as_deref(), alpha_estimate, cfg)?;
        }
        Command::Mc { input } => {
            commands::cmd_mc(input.as_deref(), cfg)?;
        }
        Command::Thresholds => commands::cmd_thresholds(cfg)?,
        Command::PaperRepro => return repro::cmd_paper_repro(),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
