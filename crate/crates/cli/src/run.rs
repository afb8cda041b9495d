//! Command implementations. Each command computes every result first and
//! only then writes its artifacts, so a zero exit status means all files
//! are on disk.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;

use fringe_psa::io::{write_fringe_csv, write_spectrum_csv, write_sweep_csv};
use fringe_psa::num_complex::Complex64;
use fringe_psa::{
    demodulate, fringe_spectrum, ftf, monte_carlo_phase_variance, phase_error_sweep,
    predict_piston, quadrature_check, snr, FringeSequence, Psa, SnrReport,
};

use crate::config::ExperimentConfig;

const SCHEMA_VERSION: u32 = 1;

/// Monte-Carlo trial count used by the snr command; fixed so identical
/// configs reproduce identical reports.
const SNR_MC_TRIALS: usize = 2000;

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
    abs: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self {
            re: z.re,
            im: z.im,
            abs: z.norm(),
        }
    }
}

#[derive(Serialize)]
struct DemodJson {
    schema_version: u32,
    phase: f64,
    amplitude: f64,
    analytic: ComplexJson,
    residuals: ResidualsJson,
}

#[derive(Serialize)]
struct ResidualsJson {
    dc: ComplexJson,
    conjugate: ComplexJson,
}

#[derive(Serialize)]
struct SpectrumReportJson {
    schema_version: u32,
    negative_side_max: f64,
    positive_side_max: f64,
    dc_value: f64,
    leakage_ratio: f64,
    quadrature_threshold: f64,
    fails_quadrature: bool,
}

#[derive(Serialize)]
struct SweepSummaryJson {
    schema_version: u32,
    n_probe: usize,
    peak_abs_error: f64,
}

#[derive(Serialize)]
struct SnrJson {
    schema_version: u32,
    modulation: f64,
    noise_density: f64,
    linear: SnrReportJson,
    nonlinear: SnrReportJson,
    /// Spurious piston the linear reference introduces; null when the
    /// defining sum vanishes.
    piston_linear: Option<f64>,
    monte_carlo: MonteCarloJson,
}

#[derive(Serialize)]
struct SnrReportJson {
    signal_energy: f64,
    noise_energy: f64,
    snr: f64,
}

impl From<SnrReport> for SnrReportJson {
    fn from(r: SnrReport) -> Self {
        Self {
            signal_energy: r.signal_energy,
            noise_energy: r.noise_energy,
            snr: r.snr,
        }
    }
}

#[derive(Serialize)]
struct MonteCarloJson {
    trials: usize,
    phase_variance_linear: f64,
    phase_variance_nonlinear: f64,
}

fn output_dir(config: &ExperimentConfig, out_override: Option<&Path>) -> Result<PathBuf> {
    let dir = out_override
        .map(Path::to_path_buf)
        .unwrap_or_else(|| config.output_dir.clone());
    fs::create_dir_all(&dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    Ok(dir)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn build_fringes(config: &ExperimentConfig) -> Result<(FringeSequence, Psa)> {
    let profile = config.build_profile()?;
    let window = config.build_window(&profile)?;
    let psa = Psa::nonlinear(&profile, &window)?;
    let params = config.build_params()?;
    let mut fringes = FringeSequence::synthesize(&profile, params);
    if let Some(noise) = config.build_noise()? {
        fringes = fringes.add_awgn(&noise);
    }
    Ok((fringes, psa))
}

pub fn cmd_demodulate(config: &ExperimentConfig, out: Option<&Path>) -> Result<()> {
    let (fringes, psa) = build_fringes(config)?;
    let result = demodulate(&psa, &fringes)?;
    let residuals = psa.zero_leakage_residuals(fringes.profile())?;
    let dir = output_dir(config, out)?;
    write_json(
        &dir.join("demod.json"),
        &DemodJson {
            schema_version: SCHEMA_VERSION,
            phase: result.phase(),
            amplitude: result.amplitude(),
            analytic: result.analytic().into(),
            residuals: ResidualsJson {
                dc: residuals.dc.into(),
                conjugate: residuals.conjugate.into(),
            },
        },
    )?;
    let file = fs::File::create(dir.join("fringes.csv"))?;
    write_fringe_csv(file, &fringes)?;
    println!(
        "phase {:.9} rad, amplitude {:.9} -> {}",
        result.phase(),
        result.amplitude(),
        dir.display()
    );
    Ok(())
}

pub fn cmd_spectrum(
    config: &ExperimentConfig,
    out: Option<&Path>,
    grid: usize,
    quad_threshold: f64,
) -> Result<()> {
    let profile = config.build_profile()?;
    let window = config.build_window(&profile)?;
    let psa = Psa::nonlinear(&profile, &window)?;
    let params = config.build_params()?;
    // The spectrum artifacts describe the noiseless experiment; any noise
    // section is ignored here.
    let fringes = FringeSequence::synthesize(&profile, params);
    let psa_spec = ftf(&psa, grid)?;
    let fringe_spec = fringe_spectrum(&fringes, grid)?;
    let report = quadrature_check(&psa_spec)?;
    let fails = report.leakage_ratio > quad_threshold || report.leakage_ratio.is_nan();
    let dir = output_dir(config, out)?;
    let file = fs::File::create(dir.join("ftf.csv"))?;
    write_spectrum_csv(file, &psa_spec)?;
    let file = fs::File::create(dir.join("fringe_spectrum.csv"))?;
    write_spectrum_csv(file, &fringe_spec)?;
    write_json(
        &dir.join("report.json"),
        &SpectrumReportJson {
            schema_version: SCHEMA_VERSION,
            negative_side_max: report.negative_side_max,
            positive_side_max: report.positive_side_max,
            dc_value: report.dc_value,
            leakage_ratio: report.leakage_ratio,
            quadrature_threshold: quad_threshold,
            fails_quadrature: fails,
        },
    )?;
    println!(
        "leakage ratio {:.6}{} -> {}",
        report.leakage_ratio,
        if fails { " (fails quadrature)" } else { "" },
        dir.display()
    );
    Ok(())
}

pub fn cmd_sweep(
    config: &ExperimentConfig,
    out: Option<&Path>,
    probes: Option<usize>,
) -> Result<()> {
    let n_probe = match probes.or(config.sweep.as_ref().map(|s| s.n_probe)) {
        Some(n) => n,
        None => bail!("sweep needs a probe count: add a sweep section or pass --probes"),
    };
    let profile = config.build_profile()?;
    let window = config.build_window(&profile)?;
    let psa = Psa::nonlinear(&profile, &window)?;
    let params = config.build_params()?;
    let sweep = phase_error_sweep(&psa, &profile, &params, n_probe)?;
    let dir = output_dir(config, out)?;
    let file = fs::File::create(dir.join("sweep.csv"))?;
    write_sweep_csv(file, &sweep)?;
    write_json(
        &dir.join("summary.json"),
        &SweepSummaryJson {
            schema_version: SCHEMA_VERSION,
            n_probe,
            peak_abs_error: sweep.peak_abs_error(),
        },
    )?;
    println!(
        "peak |phase error| {:.9} rad over {n_probe} probes -> {}",
        sweep.peak_abs_error(),
        dir.display()
    );
    Ok(())
}

pub fn cmd_snr(config: &ExperimentConfig, out: Option<&Path>) -> Result<()> {
    let noise = match config.build_noise()? {
        Some(noise) => noise,
        None => bail!("snr needs a noise section with n0 and seed"),
    };
    let profile = config.build_profile()?;
    let window = config.build_window(&profile)?;
    let nonlinear = Psa::nonlinear(&profile, &window)?;
    let linear = Psa::linear_windowed(profile.omega0(), &window)?;
    let params = config.build_params()?;
    let b = params.modulation();
    let report_linear = snr(&linear, &profile, b, noise.density())?;
    let report_nonlinear = snr(&nonlinear, &profile, b, noise.density())?;
    // The synchronous reference has no piston by construction; report the
    // one the linear reference would introduce. A zero sum leaves it null.
    let piston_linear = match predict_piston(&linear, &profile) {
        Ok(piston) => Some(piston),
        Err(fringe_psa::Error::ZeroSum) => None,
        Err(err) => return Err(err.into()),
    };
    // Paired trials: both references see the same noise realisations.
    let mc_linear = monte_carlo_phase_variance(&linear, &profile, &params, &noise, SNR_MC_TRIALS)?;
    let mc_nonlinear =
        monte_carlo_phase_variance(&nonlinear, &profile, &params, &noise, SNR_MC_TRIALS)?;
    let dir = output_dir(config, out)?;
    write_json(
        &dir.join("snr.json"),
        &SnrJson {
            schema_version: SCHEMA_VERSION,
            modulation: b,
            noise_density: noise.density(),
            linear: report_linear.into(),
            nonlinear: report_nonlinear.into(),
            piston_linear,
            monte_carlo: MonteCarloJson {
                trials: SNR_MC_TRIALS,
                phase_variance_linear: mc_linear,
                phase_variance_nonlinear: mc_nonlinear,
            },
        },
    )?;
    println!("snr1 = {}", report_linear.snr);
    println!("snr2 = {}", report_nonlinear.snr);
    match piston_linear {
        Some(piston) => println!("piston1 = {piston}"),
        None => println!("piston1 = undefined"),
    }
    println!("piston2 = 0");
    println!("mc_phase_variance1 = {mc_linear}");
    println!("mc_phase_variance2 = {mc_nonlinear}");
    println!("report = {}", dir.join("snr.json").display());
    Ok(())
}

pub fn cmd_design(config: &ExperimentConfig) -> Result<()> {
    let profile = config.build_profile()?;
    let window = fringe_psa::design_window(&profile)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "n,weight")?;
    for (n, w) in window.weights().iter().enumerate() {
        writeln!(out, "{n},{w}")?;
    }
    Ok(())
}
