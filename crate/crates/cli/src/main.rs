//! `fringe-psa`: synthesize nonlinear phase-shifted fringes, design
//! phase-stepping algorithms and write the CSV/JSON artifacts of the
//! standard experiments.

mod config;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use config::ExperimentConfig;

/// Environment variable capping internal parallelism.
const THREADS_VAR: &str = "FRINGE_PSA_THREADS";

#[derive(Parser)]
#[command(name = "fringe-psa", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Experiment configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Override the config's output_dir.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Demodulate the configured fringes; writes demod.json and fringes.csv.
    Demodulate {
        #[command(flatten)]
        common: Common,
    },
    /// Sample the PSA transfer function and the fringe spectrum on a shared
    /// grid; writes ftf.csv, fringe_spectrum.csv and report.json.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Number of frequency grid points over [-pi, pi].
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        /// Leakage ratio above which the PSA is flagged as failing the
        /// quadrature condition.
        #[arg(long, default_value_t = 0.05)]
        quad_threshold: f64,
    },
    /// Sweep the measurand over [0, 2*pi] and record the demodulation
    /// error; writes sweep.csv and summary.json.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Probe count; overrides the config's sweep.n_probe.
        #[arg(long)]
        probes: Option<usize>,
    },
    /// Closed-form SNR for linear and synchronous references plus a paired
    /// Monte-Carlo check; writes snr.json.
    Snr {
        #[command(flatten)]
        common: Common,
    },
    /// Solve the zero-leakage window for the configured profile and print
    /// it as CSV on stdout.
    Design {
        #[command(flatten)]
        common: Common,
    },
}

fn init_threads() -> Result<()> {
    if let Ok(raw) = std::env::var(THREADS_VAR) {
        let threads: usize =
            raw.parse().ok().filter(|&n| n > 0).with_context(|| {
                format!("{THREADS_VAR} must be a positive integer, got {raw:?}")
            })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("installing the global thread pool")?;
    }
    Ok(())
}

fn dispatch() -> Result<()> {
    init_threads()?;
    let cli = Cli::parse();
    match &cli.command {
        Command::Demodulate { common } => {
            let config = ExperimentConfig::load(&common.config)?;
            run::cmd_demodulate(&config, common.out.as_deref())
        }
        Command::Spectrum {
            common,
            grid,
            quad_threshold,
        } => {
            let config = ExperimentConfig::load(&common.config)?;
            run::cmd_spectrum(&config, common.out.as_deref(), *grid, *quad_threshold)
        }
        Command::Sweep { common, probes } => {
            let config = ExperimentConfig::load(&common.config)?;
            run::cmd_sweep(&config, common.out.as_deref(), *probes)
        }
        Command::Snr { common } => {
            let config = ExperimentConfig::load(&common.config)?;
            run::cmd_snr(&config, common.out.as_deref())
        }
        Command::Design { common } => {
            let config = ExperimentConfig::load(&common.config)?;
            run::cmd_design(&config)
        }
    }
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            // Quietly accept a downstream pipe closing early (e.g. | head).
            if let Some(io_err) = err.root_cause().downcast_ref::<std::io::Error>() {
                if io_err.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
