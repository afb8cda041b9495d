//! Demodulation, spurious-piston prediction, phase-error sweeps and SNR.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fringe::{FringeParams, FringeSequence, NoiseModel, PhaseShiftProfile};
use crate::psa::{Psa, ReferenceKind};
use crate::wrap_phase;

/// Relative floor below which a demodulated amplitude is considered
/// numerically zero, scaled by `sum |c_n| * max |I(n)|`.
const AMPLITUDE_FLOOR_FACTOR: f64 = 1e-9;

/// A sum magnitude below `1e-12 * sum |d_n|` has no trustworthy argument.
const ZERO_SUM_FACTOR: f64 = 1e-12;

/// The analytic signal produced by a PSA, with its polar decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemodResult {
    analytic: Complex64,
    phase: f64,
    amplitude: f64,
}

impl DemodResult {
    pub fn analytic(&self) -> Complex64 {
        self.analytic
    }

    /// `arg(analytic)`, wrapped to (-pi, pi].
    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// `|analytic|`.
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }
}

/// Apply a PSA to a fringe sequence: `analytic = sum_n c_n I(n)`.
///
/// Fails with `LowAmplitude` when the phase is undefined: either the fringe
/// parameters carry zero modulation, or the amplitude falls below the
/// scale-aware floor `1e-9 * sum|c_n| * max|I(n)|`.
pub fn demodulate(psa: &Psa, fringes: &FringeSequence) -> Result<DemodResult> {
    if psa.len() != fringes.len() {
        return Err(Error::LengthMismatch {
            expected: psa.len(),
            actual: fringes.len(),
        });
    }
    let analytic: Complex64 = psa
        .coefficients()
        .iter()
        .zip(fringes.samples())
        .map(|(c, &intensity)| c * intensity)
        .sum();
    let amplitude = analytic.norm();
    let coeff_scale: f64 = psa.coefficients().iter().map(|c| c.norm()).sum();
    let peak_intensity = fringes
        .samples()
        .iter()
        .fold(0.0f64, |m, &s| m.max(s.abs()));
    let floor = AMPLITUDE_FLOOR_FACTOR * coeff_scale * peak_intensity;
    if amplitude < floor || fringes.params().modulation() == 0.0 {
        return Err(Error::LowAmplitude { amplitude, floor });
    }
    Ok(DemodResult {
        analytic,
        phase: wrap_phase(analytic.arg()),
        amplitude,
    })
}

/// Predicted spurious piston of a linear-reference PSA on a nonlinear
/// profile: `arg(sum_n d_n e^{i delta_n})`, wrapped to (-pi, pi].
pub fn predict_piston(psa: &Psa, profile: &PhaseShiftProfile) -> Result<f64> {
    let d = match psa.reference() {
        ReferenceKind::Linear { .. } => psa.d_complex().expect("linear PSA stores d"),
        ReferenceKind::Nonlinear { .. } => return Err(Error::NotLinearReference),
    };
    if d.len() != profile.n_steps() {
        return Err(Error::LengthMismatch {
            expected: profile.n_steps(),
            actual: d.len(),
        });
    }
    let sum: Complex64 = d
        .iter()
        .zip(profile.delta())
        .map(|(dn, &delta)| dn * Complex64::cis(delta))
        .sum();
    let scale: f64 = d.iter().map(|dn| dn.norm()).sum();
    if sum.norm() <= ZERO_SUM_FACTOR * scale {
        return Err(Error::ZeroSum);
    }
    Ok(wrap_phase(sum.arg()))
}

/// Measured piston: synthesize noiseless fringes on `profile`, demodulate,
/// and return `wrap(phase - phi)`. When both leakage residuals of the PSA
/// vanish this agrees with [`predict_piston`] for every `phi` and every
/// background level.
pub fn measure_piston(
    psa: &Psa,
    profile: &PhaseShiftProfile,
    params: &FringeParams,
) -> Result<f64> {
    if !matches!(psa.reference(), ReferenceKind::Linear { .. }) {
        return Err(Error::NotLinearReference);
    }
    let fringes = FringeSequence::synthesize(profile, *params);
    let result = demodulate(psa, &fringes)?;
    Ok(wrap_phase(result.phase() - params.phi()))
}

/// Phase-error sweep over the measurand.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    phis: Vec<f64>,
    errors: Vec<f64>,
    peak_abs_error: f64,
}

impl SweepResult {
    /// Probe values of the measurand, uniform over [0, 2*pi].
    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// `wrap(phi - demodulated phase)` per probe, each in (-pi, pi].
    pub fn errors(&self) -> &[f64] {
        &self.errors
    }

    pub fn peak_abs_error(&self) -> f64 {
        self.peak_abs_error
    }
}

/// Demodulate noiseless fringes for `n_probe` measurand values uniformly
/// spanning [0, 2*pi] (endpoints included) and record the wrapped error
/// `phi - phase` at each probe. `template` supplies background and
/// modulation; its own `phi` is ignored.
pub fn phase_error_sweep(
    psa: &Psa,
    profile: &PhaseShiftProfile,
    template: &FringeParams,
    n_probe: usize,
) -> Result<SweepResult> {
    if n_probe < 16 {
        return Err(Error::TooFewProbes {
            required: 16,
            actual: n_probe,
        });
    }
    let phis: Vec<f64> = (0..n_probe)
        .map(|j| 2.0 * PI * j as f64 / (n_probe - 1) as f64)
        .collect();
    let errors: Vec<f64> = phis
        .par_iter()
        .map(|&phi| {
            let params = FringeParams::new(template.background(), template.modulation(), phi)?;
            let fringes = FringeSequence::synthesize(profile, params);
            let result = demodulate(psa, &fringes)?;
            Ok(wrap_phase(phi - result.phase()))
        })
        .collect::<Result<_>>()?;
    let peak_abs_error = errors.iter().fold(0.0f64, |m, &e| m.max(e.abs()));
    Ok(SweepResult {
        phis,
        errors,
        peak_abs_error,
    })
}

/// Signal and noise energies of a demodulated fringe signal under additive
/// white Gaussian noise, and their ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrReport {
    /// `(b/2)^2 |sum d_n e^{-i delta_n}|^2` for a linear reference,
    /// `(b/2)^2 (sum w_n)^2` for a synchronous one.
    pub signal_energy: f64,
    /// `(density/2) * integral |H|^2 dw`, evaluated in closed form as
    /// `(density/2) * 2*pi * sum |c_n|^2`.
    pub noise_energy: f64,
    pub snr: f64,
}

/// Closed-form SNR of a PSA on the given profile for modulation `b` and
/// noise density `n0`.
pub fn snr(psa: &Psa, profile: &PhaseShiftProfile, b: f64, n0: f64) -> Result<SnrReport> {
    if b <= 0.0 || b.is_nan() {
        return Err(Error::NonpositiveInput {
            name: "modulation",
            value: b,
        });
    }
    if n0 <= 0.0 || n0.is_nan() {
        return Err(Error::NonpositiveInput {
            name: "noise density",
            value: n0,
        });
    }
    if psa.len() != profile.n_steps() {
        return Err(Error::LengthMismatch {
            expected: profile.n_steps(),
            actual: psa.len(),
        });
    }
    let half_b = b / 2.0;
    let signal_energy = match psa.reference() {
        ReferenceKind::Linear { .. } => {
            let d = psa.d_complex().expect("linear PSA stores d");
            let sum: Complex64 = d
                .iter()
                .zip(profile.delta())
                .map(|(dn, &delta)| dn * Complex64::cis(-delta))
                .sum();
            half_b * half_b * sum.norm_sqr()
        }
        ReferenceKind::Nonlinear { .. } => {
            let w_sum = psa.window().expect("nonlinear PSA stores its window").sum();
            half_b * half_b * w_sum * w_sum
        }
    };
    let coeff_energy: f64 = psa.coefficients().iter().map(|c| c.norm_sqr()).sum();
    let noise_energy = (n0 / 2.0) * 2.0 * PI * coeff_energy;
    Ok(SnrReport {
        signal_energy,
        noise_energy,
        snr: signal_energy / noise_energy,
    })
}

/// Sample variance of the wrapped demodulated-phase error over independent
/// noise draws. Trial `t` reseeds the noise model with `seed + t`, so the
/// result is deterministic and independent of scheduling.
pub fn monte_carlo_phase_variance(
    psa: &Psa,
    profile: &PhaseShiftProfile,
    params: &FringeParams,
    noise: &NoiseModel,
    trials: usize,
) -> Result<f64> {
    if trials < 100 {
        return Err(Error::TooFewTrials {
            required: 100,
            actual: trials,
        });
    }
    let clean = FringeSequence::synthesize(profile, *params);
    let base_seed = noise.seed();
    let errors: Vec<f64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let noisy = clean.add_awgn(&noise.reseeded(base_seed.wrapping_add(t)));
            let result = demodulate(psa, &noisy)?;
            Ok(wrap_phase(result.phase() - params.phi()))
        })
        .collect::<Result<_>>()?;
    let n = errors.len() as f64;
    let mean = errors.iter().sum::<f64>() / n;
    let variance = errors.iter().map(|e| (e - mean) * (e - mean)).sum::<f64>() / (n - 1.0);
    Ok(variance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{design_linear_coefficients, design_window};
    use crate::fringe::DeltaSpec;
    use crate::psa::Window;
    use approx::assert_abs_diff_eq;

    fn chirp13() -> PhaseShiftProfile {
        let omega0 = 0.35 * PI;
        PhaseShiftProfile::new(omega0, &DeltaSpec::quadratic(0.05 * omega0), 13).unwrap()
    }

    fn classical4() -> (PhaseShiftProfile, Psa) {
        let p = PhaseShiftProfile::linear(PI / 2.0, 4).unwrap();
        let psa = Psa::linear(PI / 2.0, vec![Complex64::new(1.0, 0.0); 4]).unwrap();
        (p, psa)
    }

    #[test]
    fn classical_four_step_recovers_phase_exactly() {
        let (p, psa) = classical4();
        let phi = PI / 3.0;
        let fringes = FringeSequence::synthesize(&p, FringeParams::new(1.0, 1.0, phi).unwrap());
        let r = demodulate(&psa, &fringes).unwrap();
        assert_abs_diff_eq!(r.phase(), phi, epsilon = 1e-12);
        assert_abs_diff_eq!(r.amplitude(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn chirp_gaussian_psa_small_error_for_any_phi() {
        let p = chirp13();
        let psa = Psa::nonlinear(&p, &Window::gaussian(13, 0.1).unwrap()).unwrap();
        for &phi in &[0.0, 0.4, 1.0, PI / 3.0, 2.0, 3.0, -2.5] {
            let fringes = FringeSequence::synthesize(&p, FringeParams::new(1.0, 1.0, phi).unwrap());
            let r = demodulate(&psa, &fringes).unwrap();
            let err = wrap_phase(r.phase() - wrap_phase(phi)).abs();
            assert!(err <= 0.05, "error {err} at phi={phi}");
        }
    }

    #[test]
    fn chirp_gaussian_demod_regression_at_pi_third() {
        let p = chirp13();
        let psa = Psa::nonlinear(&p, &Window::gaussian(13, 0.1).unwrap()).unwrap();
        let fringes =
            FringeSequence::synthesize(&p, FringeParams::new(1.0, 1.0, PI / 3.0).unwrap());
        let r = demodulate(&psa, &fringes).unwrap();
        assert_abs_diff_eq!(r.amplitude(), 2.786974478572949, epsilon = 1e-9);
        assert_abs_diff_eq!(
            wrap_phase(PI / 3.0 - r.phase()),
            0.004560457289755071,
            epsilon = 1e-9
        );
    }

    #[test]
    fn zero_modulation_is_low_amplitude() {
        let (p, psa) = classical4();
        let fringes = FringeSequence::synthesize(&p, FringeParams::new(1.0, 0.0, 1.0).unwrap());
        assert!(matches!(
            demodulate(&psa, &fringes),
            Err(Error::LowAmplitude { .. })
        ));
        // Also with a PSA that leaks dc, where the raw amplitude is large.
        let chirp = chirp13();
        let square = Psa::nonlinear(&chirp, &Window::square(13).unwrap()).unwrap();
        let flat = FringeSequence::synthesize(&chirp, FringeParams::new(1.0, 0.0, 0.3).unwrap());
        assert!(matches!(
            demodulate(&square, &flat),
            Err(Error::LowAmplitude { .. })
        ));
    }

    #[test]
    fn demodulate_checks_length() {
        let (_, psa) = classical4();
        let p5 = PhaseShiftProfile::linear(PI / 2.0, 5).unwrap();
        let fringes = FringeSequence::synthesize(&p5, FringeParams::new(1.0, 1.0, 0.0).unwrap());
        assert!(matches!(
            demodulate(&psa, &fringes),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn predicted_piston_of_flat_delta_is_zero() {
        let (p, psa) = classical4();
        assert_abs_diff_eq!(predict_piston(&psa, &p).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn predicted_piston_matches_direct_complex_sum() {
        // delta(n) = 0.1 n^2 with quarter-wave steps; the piston is
        // arg(1 + e^{0.1i} + e^{0.4i} + e^{0.9i}), evaluated independently.
        let p = PhaseShiftProfile::new(PI / 2.0, &DeltaSpec::quadratic(0.1), 4).unwrap();
        let psa = Psa::linear(PI / 2.0, vec![Complex64::new(1.0, 0.0); 4]).unwrap();
        let direct =
            (Complex64::cis(0.0) + Complex64::cis(0.1) + Complex64::cis(0.4) + Complex64::cis(0.9))
                .arg();
        let predicted = predict_piston(&psa, &p).unwrap();
        assert_abs_diff_eq!(predicted, direct, epsilon = 1e-14);
        assert_abs_diff_eq!(predicted, 0.345309227794734, epsilon = 1e-12);
    }

    #[test]
    fn alternating_coefficients_on_crafted_delta_give_zero_sum() {
        // d = {1,-1,1,-1} with delta = {0, 0.4pi, 0.4pi, 0} cancels
        // sum d_n e^{i delta_n} exactly; verified by direct evaluation.
        let delta = DeltaSpec::Samples(vec![0.0, 0.4 * PI, 0.4 * PI, 0.0]);
        let p = PhaseShiftProfile::new(PI / 2.0, &delta, 4).unwrap();
        let d: Vec<Complex64> = [1.0, -1.0, 1.0, -1.0]
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect();
        let direct: Complex64 = d
            .iter()
            .zip(p.delta())
            .map(|(dn, &dl)| dn * Complex64::cis(dl))
            .sum();
        assert!(
            direct.norm() < 1e-12,
            "construction broke: {}",
            direct.norm()
        );
        let psa = Psa::linear(PI / 2.0, d).unwrap();
        assert!(matches!(predict_piston(&psa, &p), Err(Error::ZeroSum)));
    }

    #[test]
    fn piston_prediction_requires_linear_reference() {
        let p = chirp13();
        let psa = Psa::nonlinear(&p, &Window::gaussian(13, 0.1).unwrap()).unwrap();
        assert!(matches!(
            predict_piston(&psa, &p),
            Err(Error::NotLinearReference)
        ));
        let params = FringeParams::new(1.0, 1.0, 0.5).unwrap();
        assert!(matches!(
            measure_piston(&psa, &p, &params),
            Err(Error::NotLinearReference)
        ));
    }

    #[test]
    fn measured_piston_is_zero_for_classical_case() {
        let (p, psa) = classical4();
        for &phi in &[0.0, 0.7, 2.9, -1.3] {
            let params = FringeParams::new(1.0, 1.0, phi).unwrap();
            let piston = measure_piston(&psa, &p, &params).unwrap();
            assert!(piston.abs() < 1e-12, "piston {piston} at phi={phi}");
        }
    }

    #[test]
    fn measured_piston_matches_prediction_for_designed_coefficients() {
        let p = chirp13();
        let d = design_linear_coefficients(&p).unwrap();
        let psa = Psa::linear(p.omega0(), d).unwrap();
        let predicted = predict_piston(&psa, &p).unwrap();
        // Frozen regression value for the canonical design.
        assert_abs_diff_eq!(predicted, 0.6905062892487528, epsilon = 1e-9);
        for &background in &[1.0, 7.5] {
            for &phi in &[0.3, 1.0, 4.0] {
                let params = FringeParams::new(background, 1.0, phi).unwrap();
                let measured = measure_piston(&psa, &p, &params).unwrap();
                assert!(
                    wrap_phase(measured - predicted).abs() < 1e-8,
                    "a={background} phi={phi}: measured {measured} vs predicted {predicted}"
                );
            }
        }
    }

    #[test]
    fn classical_linear_psa_on_chirped_fringes_shows_piston_and_ripple() {
        // Quarter-wave linear reference applied to quadratically chirped
        // fringes of the same nominal carrier: frozen mean piston and
        // peak-to-peak ripple, plus the closed-form piston prediction.
        let curvature = 0.05 * (PI / 2.0);
        let p = PhaseShiftProfile::new(PI / 2.0, &DeltaSpec::quadratic(curvature), 4).unwrap();
        let psa = Psa::linear(PI / 2.0, vec![Complex64::new(1.0, 0.0); 4]).unwrap();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        let sweep = phase_error_sweep(&psa, &p, &template, 256).unwrap();
        // Sweep records phi - phase, so the piston appears negated.
        let mean: f64 = sweep.errors().iter().sum::<f64>() / sweep.errors().len() as f64;
        let ripple = sweep.errors().iter().cloned().fold(f64::MIN, f64::max)
            - sweep.errors().iter().cloned().fold(f64::MAX, f64::min);
        assert_abs_diff_eq!(-mean, 0.2729828664582269, epsilon = 1e-9);
        assert_abs_diff_eq!(ripple, 0.2402789760384221, epsilon = 1e-9);
        assert_abs_diff_eq!(
            predict_piston(&psa, &p).unwrap(),
            0.2726530366759532,
            epsilon = 1e-9
        );
    }

    #[test]
    fn classical_sweep_error_is_numerically_zero() {
        let (p, psa) = classical4();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        let sweep = phase_error_sweep(&psa, &p, &template, 256).unwrap();
        assert!(
            sweep.peak_abs_error() < 1e-12,
            "peak {}",
            sweep.peak_abs_error()
        );
        assert!(sweep.errors().iter().all(|e| e.abs() < 1e-12));
    }

    #[test]
    fn chirp_sweep_peaks_regression_values() {
        // Frozen peaks of the 256-probe sweeps for the 13-step chirp.
        let p = chirp13();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        let gauss = Psa::nonlinear(&p, &Window::gaussian(13, 0.1).unwrap()).unwrap();
        let square = Psa::nonlinear(&p, &Window::square(13).unwrap()).unwrap();
        let pg = phase_error_sweep(&gauss, &p, &template, 256).unwrap();
        let ps = phase_error_sweep(&square, &p, &template, 256).unwrap();
        assert_abs_diff_eq!(pg.peak_abs_error(), 0.0052991676768271, epsilon = 1e-9);
        assert_abs_diff_eq!(ps.peak_abs_error(), 0.273440580807554, epsilon = 1e-9);
        assert!(ps.peak_abs_error() > pg.peak_abs_error());
    }

    #[test]
    fn sweep_errors_are_wrapped_and_probes_cover_range() {
        let p = chirp13();
        let psa = Psa::nonlinear(&p, &Window::square(13).unwrap()).unwrap();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        let sweep = phase_error_sweep(&psa, &p, &template, 64).unwrap();
        assert_eq!(sweep.phis().len(), 64);
        assert_eq!(sweep.phis()[0], 0.0);
        assert_abs_diff_eq!(*sweep.phis().last().unwrap(), 2.0 * PI, epsilon = 1e-12);
        assert!(sweep.errors().iter().all(|&e| e > -PI && e <= PI));
    }

    #[test]
    fn sweep_rejects_too_few_probes() {
        let (p, psa) = classical4();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        assert!(matches!(
            phase_error_sweep(&psa, &p, &template, 15),
            Err(Error::TooFewProbes { .. })
        ));
    }

    #[test]
    fn designed_window_recovers_phase_and_amplitude_exactly() {
        let p = chirp13();
        let w = design_window(&p).unwrap();
        let psa = Psa::nonlinear(&p, &w).unwrap();
        let template = FringeParams::new(1.0, 1.0, 0.0).unwrap();
        let sweep = phase_error_sweep(&psa, &p, &template, 256).unwrap();
        assert!(
            sweep.peak_abs_error() < 1e-12,
            "peak {}",
            sweep.peak_abs_error()
        );
        let fringes = FringeSequence::synthesize(&p, FringeParams::new(1.0, 1.0, 1.2345).unwrap());
        let r = demodulate(&psa, &fringes).unwrap();
        assert_abs_diff_eq!(r.amplitude(), 0.5 * w.sum(), epsilon = 1e-12);
    }

    #[test]
    fn background_change_leaves_phase_untouched_when_dc_residual_vanishes() {
        let p = chirp13();
        let w = design_window(&p).unwrap();
        let psa = Psa::nonlinear(&p, &w).unwrap();
        let phase_at = |background: f64| {
            let fringes =
                FringeSequence::synthesize(&p, FringeParams::new(background, 1.0, 0.9).unwrap());
            demodulate(&psa, &fringes).unwrap().phase()
        };
        assert!((phase_at(1.0) - phase_at(7.5)).abs() < 1e-10);
    }

    #[test]
    fn classical_snr_closed_form() {
        let (p, psa) = classical4();
        let report = snr(&psa, &p, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(report.signal_energy, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(report.noise_energy, 4.0 * PI, epsilon = 1e-12);
        assert_abs_diff_eq!(report.snr, 1.0 / PI, epsilon = 1e-14);
    }

    #[test]
    fn classical_snr_matches_trapezoid_integration() {
        // Cross-check the closed-form noise energy against the grid
        // integral of |H|^2.
        let (p, psa) = classical4();
        let report = snr(&psa, &p, 1.0, 1.0).unwrap();
        let spec = crate::spectral::ftf(&psa, 4096).unwrap();
        let integral = 0.5 * spec.energy_integral();
        assert!(
            (integral - report.noise_energy).abs() / report.noise_energy < 1e-6,
            "trapezoid {integral} vs closed form {}",
            report.noise_energy
        );
    }

    #[test]
    fn synchronous_reference_never_loses_snr() {
        let p = chirp13();
        let w = Window::gaussian(13, 0.1).unwrap();
        let nonlinear = Psa::nonlinear(&p, &w).unwrap();
        let linear = Psa::linear_windowed(p.omega0(), &w).unwrap();
        let s2 = snr(&nonlinear, &p, 1.0, 1.0).unwrap();
        let s1 = snr(&linear, &p, 1.0, 1.0).unwrap();
        assert!(s2.snr >= s1.snr);
        assert_abs_diff_eq!(s1.snr, 0.1039461058744345, epsilon = 1e-9);
        assert_abs_diff_eq!(s2.snr, 0.6265488007452688, epsilon = 1e-9);
    }

    #[test]
    fn snr_scales_with_modulation_squared() {
        let p = chirp13();
        let psa = Psa::nonlinear(&p, &Window::gaussian(13, 0.1).unwrap()).unwrap();
        let s1 = snr(&psa, &p, 1.0, 0.5).unwrap();
        let s2 = snr(&psa, &p, 2.0, 0.5).unwrap();
        assert_abs_diff_eq!(s2.snr, 4.0 * s1.snr, epsilon = 1e-12);
    }

    #[test]
    fn snr_rejects_nonpositive_inputs() {
        let (p, psa) = classical4();
        assert!(matches!(
            snr(&psa, &p, 0.0, 1.0),
            Err(Error::NonpositiveInput {
                name: "modulation",
                ..
            })
        ));
        assert!(matches!(
            snr(&psa, &p, 1.0, 0.0),
            Err(Error::NonpositiveInput {
                name: "noise density",
                ..
            })
        ));
    }

    #[test]
    fn monte_carlo_variance_zero_without_noise() {
        let (p, psa) = classical4();
        let params = FringeParams::new(1.0, 1.0, 0.8).unwrap();
        let noise = NoiseModel::new(0.0, 5).unwrap();
        let v = monte_carlo_phase_variance(&psa, &p, &params, &noise, 100).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn monte_carlo_is_deterministic_and_needs_enough_trials() {
        let (p, psa) = classical4();
        let params = FringeParams::new(1.0, 1.0, 0.8).unwrap();
        let noise = NoiseModel::new(0.02, 5).unwrap();
        let a = monte_carlo_phase_variance(&psa, &p, &params, &noise, 200).unwrap();
        let b = monte_carlo_phase_variance(&psa, &p, &params, &noise, 200).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            monte_carlo_phase_variance(&psa, &p, &params, &noise, 99),
            Err(Error::TooFewTrials { .. })
        ));
    }
}
