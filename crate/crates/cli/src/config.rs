//! Experiment configuration: a single strict JSON document.
//!
//! Unknown keys are rejected, and keys that do not belong to the selected
//! `kind` of a section are rejected too, so a config file documents exactly
//! the experiment it runs. The carrier frequency is given as a multiple of
//! pi (`omega0_over_pi`) to keep files free of transcribed decimals.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use fringe_psa::{design_window, DeltaSpec, FringeParams, NoiseModel, PhaseShiftProfile, Window};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub profile: ProfileConfig,
    pub fringe: FringeConfig,
    pub window: WindowConfig,
    #[serde(default)]
    pub noise: Option<NoiseConfig>,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    pub output_dir: PathBuf,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileConfig {
    pub omega0_over_pi: f64,
    pub delta: DeltaConfig,
    pub n_steps: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaConfig {
    pub kind: String,
    #[serde(default)]
    pub epsilon2: Option<f64>,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FringeConfig {
    pub a: f64,
    pub b: f64,
    pub phi: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowConfig {
    pub kind: String,
    #[serde(default)]
    pub g: Option<f64>,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseConfig {
    pub n0: f64,
    pub seed: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub n_probe: usize,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: ExperimentConfig = serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if !(self.profile.omega0_over_pi > 0.0 && self.profile.omega0_over_pi < 1.0) {
            bail!(
                "omega0_over_pi must lie in (0, 1), got {}",
                self.profile.omega0_over_pi
            );
        }
        Ok(())
    }

    pub fn build_profile(&self) -> Result<PhaseShiftProfile> {
        let delta = &self.profile.delta;
        let spec = match delta.kind.as_str() {
            "quadratic" => {
                if delta.values.is_some() {
                    bail!("delta.values is only valid for kind \"samples\"");
                }
                let epsilon2 = delta
                    .epsilon2
                    .context("delta.epsilon2 is required for kind \"quadratic\"")?;
                DeltaSpec::quadratic(epsilon2)
            }
            "samples" => {
                if delta.epsilon2.is_some() {
                    bail!("delta.epsilon2 is only valid for kind \"quadratic\"");
                }
                let values = delta
                    .values
                    .clone()
                    .context("delta.values is required for kind \"samples\"")?;
                DeltaSpec::Samples(values)
            }
            other => bail!("unknown delta kind {other:?}, expected \"quadratic\" or \"samples\""),
        };
        let omega0 = self.profile.omega0_over_pi * PI;
        Ok(PhaseShiftProfile::new(omega0, &spec, self.profile.n_steps)?)
    }

    pub fn build_window(&self, profile: &PhaseShiftProfile) -> Result<Window> {
        let window = &self.window;
        let reject_g = || -> Result<()> {
            if window.g.is_some() {
                bail!("window.g is only valid for kind \"gaussian\"");
            }
            Ok(())
        };
        let reject_values = || -> Result<()> {
            if window.values.is_some() {
                bail!("window.values is only valid for kind \"custom\"");
            }
            Ok(())
        };
        let built = match window.kind.as_str() {
            "square" => {
                reject_g()?;
                reject_values()?;
                Window::square(profile.n_steps())?
            }
            "gaussian" => {
                reject_values()?;
                let g = window
                    .g
                    .context("window.g is required for kind \"gaussian\"")?;
                let built = Window::gaussian(profile.n_steps(), g)?;
                if built.sharpness_warning() {
                    eprintln!(
                        "warning: gaussian sharpness {g} >= 1 leaves very few effective samples"
                    );
                }
                built
            }
            "designed" => {
                reject_g()?;
                reject_values()?;
                design_window(profile)?
            }
            "custom" => {
                reject_g()?;
                let values = window
                    .values
                    .clone()
                    .context("window.values is required for kind \"custom\"")?;
                if values.len() != profile.n_steps() {
                    bail!(
                        "window.values has {} entries, profile has {} steps",
                        values.len(),
                        profile.n_steps()
                    );
                }
                Window::custom(values)?
            }
            other => bail!(
                "unknown window kind {other:?}, expected \"square\", \"gaussian\", \"designed\" or \"custom\""
            ),
        };
        Ok(built)
    }

    pub fn build_params(&self) -> Result<FringeParams> {
        Ok(FringeParams::new(
            self.fringe.a,
            self.fringe.b,
            self.fringe.phi,
        )?)
    }

    pub fn build_noise(&self) -> Result<Option<NoiseModel>> {
        match &self.noise {
            Some(n) => Ok(Some(NoiseModel::new(n.n0, n.seed)?)),
            None => Ok(None),
        }
    }
}
