//! Frequency transfer functions, fringe spectra and quadrature diagnostics.
//!
//! Grids are uniform over [-pi, pi] with both endpoints included, and all
//! transforms are direct O(N*M) sums; sequence lengths here are a few dozen
//! samples, so fast transforms would buy nothing.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fringe::{FringeSequence, PhaseShiftProfile};
use crate::psa::{Psa, ReferenceKind};

/// Minimum number of grid points for a spectrum evaluation.
pub const MIN_GRID: usize = 64;

/// A complex frequency response sampled on a uniform grid over [-pi, pi].
#[derive(Debug, Clone, PartialEq)]
pub struct FtfSpectrum {
    omegas: Vec<f64>,
    values: Vec<Complex64>,
    source: String,
}

impl FtfSpectrum {
    /// Wrap externally computed samples. The grid must be strictly
    /// increasing and span [-pi, pi] inclusive.
    pub fn from_samples(
        omegas: Vec<f64>,
        values: Vec<Complex64>,
        source: impl Into<String>,
    ) -> Result<Self> {
        if omegas.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if omegas.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: omegas.len(),
                actual: values.len(),
            });
        }
        if !omegas.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGrid("grid is not strictly increasing".into()));
        }
        let first = *omegas.first().unwrap();
        let last = *omegas.last().unwrap();
        if (first + PI).abs() > 1e-12 || (last - PI).abs() > 1e-12 {
            return Err(Error::InvalidGrid(format!(
                "grid must span [-pi, pi], got [{first}, {last}]"
            )));
        }
        Ok(Self {
            omegas,
            values,
            source: source.into(),
        })
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    /// Trapezoid integral of |H(w)|^2 over the grid. With both endpoints on
    /// the grid and a 2*pi-periodic integrand this is spectrally accurate.
    pub fn energy_integral(&self) -> f64 {
        let mut acc = 0.0;
        for k in 0..self.len() - 1 {
            let f0 = self.values[k].norm_sqr();
            let f1 = self.values[k + 1].norm_sqr();
            acc += 0.5 * (f0 + f1) * (self.omegas[k + 1] - self.omegas[k]);
        }
        acc
    }
}

/// Uniform grid over [-pi, pi], endpoints included and exact.
fn frequency_grid(grid_size: usize) -> Vec<f64> {
    let step_count = (grid_size - 1) as f64;
    (0..grid_size)
        .map(|k| -PI + 2.0 * PI * (k as f64 / step_count))
        .collect()
}

fn check_grid_size(grid_size: usize) -> Result<()> {
    if grid_size < MIN_GRID {
        return Err(Error::GridTooCoarse {
            required: MIN_GRID,
            actual: grid_size,
        });
    }
    Ok(())
}

/// Evaluate `sum_n x_n e^{-i n w}` on the grid.
fn direct_transform(grid_size: usize, terms: &[Complex64]) -> (Vec<f64>, Vec<Complex64>) {
    let omegas = frequency_grid(grid_size);
    let values = omegas
        .iter()
        .map(|&omega| {
            terms
                .iter()
                .enumerate()
                .map(|(n, x)| x * Complex64::cis(-(n as f64) * omega))
                .sum()
        })
        .collect();
    (omegas, values)
}

/// Frequency transfer function of a PSA:
/// `H(w) = sum_n conj(c_n) e^{-i n w}`.
///
/// The stored demodulation coefficients carry the conjugated reference, so
/// conjugating them here makes `H` the transform of the impulse response
/// written with the reference phase positive — e.g. a windowed synchronous
/// PSA yields `H(w) = sum_n w_n e^{i tp_n} e^{-i n w}`, whose magnitude
/// should approximate a one-sided quadrature filter.
pub fn ftf(psa: &Psa, grid_size: usize) -> Result<FtfSpectrum> {
    check_grid_size(grid_size)?;
    let conjugated: Vec<Complex64> = psa.coefficients().iter().map(|c| c.conj()).collect();
    let (omegas, values) = direct_transform(grid_size, &conjugated);
    let source = match psa.reference() {
        ReferenceKind::Linear { omega0 } => {
            format!(
                "ftf of linear-reference psa, N={}, omega0={omega0}",
                psa.len()
            )
        }
        ReferenceKind::Nonlinear { profile } => format!(
            "ftf of nonlinear-reference psa, N={}, omega0={}",
            psa.len(),
            profile.omega0()
        ),
    };
    FtfSpectrum::from_samples(omegas, values, source)
}

/// Discrete-time spectrum of a fringe sequence:
/// `S(w) = sum_n I(n) e^{-i n w}`. Real input gives Hermitian symmetry
/// `S(-w) = conj(S(w))`.
pub fn fringe_spectrum(fringes: &FringeSequence, grid_size: usize) -> Result<FtfSpectrum> {
    check_grid_size(grid_size)?;
    let terms: Vec<Complex64> = fringes
        .samples()
        .iter()
        .map(|&s| Complex64::new(s, 0.0))
        .collect();
    let (omegas, values) = direct_transform(grid_size, &terms);
    let source = format!("fringe spectrum, N={}", fringes.len());
    FtfSpectrum::from_samples(omegas, values, source)
}

/// Quadrature-filter quality numbers extracted from a sampled spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumReport {
    /// max |H(w)| over w in [-pi, 0].
    pub negative_side_max: f64,
    /// max |H(w)| over w in (0, pi]; the w = 0 sample is excluded.
    pub positive_side_max: f64,
    /// |H| at the grid sample closest to w = 0 (exact for odd grid sizes).
    pub dc_value: f64,
    /// negative_side_max / positive_side_max; NaN if the positive side is
    /// identically zero.
    pub leakage_ratio: f64,
}

/// Summarise how well a spectrum approximates a one-sided quadrature filter
/// (zero on [-pi, 0], nonzero on (0, pi)).
pub fn quadrature_check(spec: &FtfSpectrum) -> Result<SpectrumReport> {
    if spec.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut negative_side_max = 0.0f64;
    let mut positive_side_max = 0.0f64;
    let mut dc_value = 0.0f64;
    let mut best_dc_dist = f64::INFINITY;
    for (&omega, value) in spec.omegas().iter().zip(spec.values()) {
        let mag = value.norm();
        if omega <= 0.0 {
            negative_side_max = negative_side_max.max(mag);
        } else {
            positive_side_max = positive_side_max.max(mag);
        }
        if omega.abs() < best_dc_dist {
            best_dc_dist = omega.abs();
            dc_value = mag;
        }
    }
    let leakage_ratio = if positive_side_max > 0.0 {
        negative_side_max / positive_side_max
    } else {
        f64::NAN
    };
    Ok(SpectrumReport {
        negative_side_max,
        positive_side_max,
        dc_value,
        leakage_ratio,
    })
}

/// Normalised magnitude response of a PSA to pure harmonics of the carrier.
///
/// For each order `k` this returns
/// `r(k) = |sum_n c_n e^{i k tp_n}| / |sum_n c_n e^{i tp_n}|`,
/// the PSA's response to a unit carrier harmonic `e^{i k tp_n}` relative to
/// the fundamental, so `r(1) = 1` by construction. For a windowed
/// synchronous PSA the normaliser is `|sum w_n|`. Responses are generally
/// asymmetric in k for nonlinear carriers.
pub fn harmonic_response(
    psa: &Psa,
    profile: &PhaseShiftProfile,
    harmonics: &[i32],
) -> Result<Vec<(i32, f64)>> {
    if psa.len() != profile.n_steps() {
        return Err(Error::LengthMismatch {
            expected: profile.n_steps(),
            actual: psa.len(),
        });
    }
    if harmonics.contains(&0) {
        return Err(Error::InvalidHarmonic);
    }
    let tp = profile.total_phase();
    let respond = |k: f64| -> Complex64 {
        psa.coefficients()
            .iter()
            .zip(tp)
            .map(|(c, &t)| c * Complex64::cis(k * t))
            .sum()
    };
    let coeff_scale: f64 = psa.coefficients().iter().map(|c| c.norm()).sum();
    let fundamental = respond(1.0).norm();
    if fundamental <= 1e-12 * coeff_scale {
        return Err(Error::ZeroNormalizer);
    }
    Ok(harmonics
        .iter()
        .map(|&k| (k, respond(k as f64).norm() / fundamental))
        .collect())
}
