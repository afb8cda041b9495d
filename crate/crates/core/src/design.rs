//! Zero-leakage coefficient design by null-space projection.
//!
//! Both leakage residuals of a PSA are linear in its free coefficients, so
//! "make them vanish" is a small homogeneous linear system: four real
//! equations (real and imaginary part of each residual) in the N real window
//! weights, or in the 2N real components of the complex linear-reference
//! coefficients. Among all solutions we pick the Euclidean projection of the
//! all-ones vector onto the constraint null space: it is deterministic,
//! keeps the result as close to a flat window as the constraints allow, and
//! maximises the coefficient sum over unit-norm feasible directions. The
//! result is rescaled so the largest magnitude is 1.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fringe::PhaseShiftProfile;
use crate::psa::Window;

/// Singular values below this fraction of the largest are treated as zero
/// when splitting row space from null space.
const RANK_TOLERANCE: f64 = 1e-10;

/// A projected vector with max-norm below this is declared infeasible.
const FEASIBILITY_FLOOR: f64 = 1e-10;

/// Project `target` onto the null space of `rows` (a stack of constraint
/// rows). Rank-deficient rows are handled by the singular-value cut, so
/// coinciding constraints simply enlarge the feasible set.
fn null_space_projection(rows: DMatrix<f64>, target: &[f64]) -> Result<Vec<f64>> {
    let svd = rows.svd(false, true);
    let v_t = svd.v_t.expect("SVD computed with right singular vectors");
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cut = RANK_TOLERANCE * sigma_max;

    let mut projected = target.to_vec();
    for (i, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma > cut {
            let row = v_t.row(i);
            let overlap: f64 = row.iter().zip(target).map(|(v, t)| v * t).sum();
            for (p, v) in projected.iter_mut().zip(row.iter()) {
                *p -= overlap * v;
            }
        }
    }

    let max_abs = projected.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    if max_abs < FEASIBILITY_FLOOR {
        return Err(Error::InfeasibleConstraints);
    }
    for p in &mut projected {
        *p /= max_abs;
    }
    Ok(projected)
}

/// Design a real window whose synchronous PSA has both leakage residuals
/// exactly zero (to solver tolerance) on the given profile.
///
/// The two complex conditions are `sum w_n e^{-i tp_n} = 0` and
/// `sum w_n e^{-2i tp_n} = 0` with `tp_n` the profile's total phase. Four
/// independent real constraints need at least five weights for a nontrivial
/// solution, but shorter profiles are accepted when rank deficiency makes
/// them feasible (for N = 4 at quarter-wave steps the all-ones window
/// already satisfies both sums); infeasible systems are reported as such.
pub fn design_window(profile: &PhaseShiftProfile) -> Result<Window> {
    let n = profile.n_steps();
    let tp = profile.total_phase();
    let mut rows = DMatrix::zeros(4, n);
    for (j, &t) in tp.iter().enumerate() {
        rows[(0, j)] = t.cos();
        rows[(1, j)] = t.sin();
        rows[(2, j)] = (2.0 * t).cos();
        rows[(3, j)] = (2.0 * t).sin();
    }
    let weights = null_space_projection(rows, &vec![1.0; n])?;
    Window::custom(weights)
}

/// Design complex linear-reference coefficients `d_n` with both leakage
/// residuals zero on the given profile:
/// `sum d_n e^{-i omega0 n} = 0` and `sum d_n e^{-i(2 omega0 n + delta_n)} = 0`.
///
/// The unknowns are the 2N real components of `d`; the projected vector is
/// all-ones on the real parts and zero on the imaginary parts, rescaled so
/// the largest modulus is 1. The resulting PSA recovers the measurand up to
/// a constant piston `arg(sum d_n e^{i delta_n})`.
pub fn design_linear_coefficients(profile: &PhaseShiftProfile) -> Result<Vec<Complex64>> {
    let n = profile.n_steps();
    let omega0 = profile.omega0();
    let delta = profile.delta();
    let mut rows = DMatrix::zeros(4, 2 * n);
    for j in 0..n {
        let th1 = omega0 * j as f64;
        let th2 = 2.0 * omega0 * j as f64 + delta[j];
        // sum (x + iy)(cos th - i sin th): real and imaginary parts.
        rows[(0, j)] = th1.cos();
        rows[(0, n + j)] = th1.sin();
        rows[(1, j)] = -th1.sin();
        rows[(1, n + j)] = th1.cos();
        rows[(2, j)] = th2.cos();
        rows[(2, n + j)] = th2.sin();
        rows[(3, j)] = -th2.sin();
        rows[(3, n + j)] = th2.cos();
    }
    let mut target = vec![0.0; 2 * n];
    target[..n].fill(1.0);
    let projected = null_space_projection(rows, &target)?;

    let mut d: Vec<Complex64> = (0..n)
        .map(|j| Complex64::new(projected[j], projected[n + j]))
        .collect();
    // null_space_projection normalised by the largest component; renormalise
    // by the largest modulus so max |d_n| = 1.
    let max_mod = d.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if max_mod < FEASIBILITY_FLOOR {
        return Err(Error::InfeasibleConstraints);
    }
    for z in &mut d {
        *z /= max_mod;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fringe::DeltaSpec;
    use crate::psa::Psa;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn chirp13() -> PhaseShiftProfile {
        let omega0 = 0.35 * PI;
        PhaseShiftProfile::new(omega0, &DeltaSpec::quadratic(0.05 * omega0), 13).unwrap()
    }

    #[test]
    fn designed_window_zeroes_both_residuals() {
        let p = chirp13();
        let w = design_window(&p).unwrap();
        let psa = Psa::nonlinear(&p, &w).unwrap();
        let r = psa.zero_leakage_residuals(&p).unwrap();
        assert!(r.dc.norm() < 1e-10, "dc {}", r.dc.norm());
        assert!(
            r.conjugate.norm() < 1e-10,
            "conjugate {}",
            r.conjugate.norm()
        );
    }

    #[test]
    fn designed_window_stays_near_flat() {
        // Projection of the all-ones vector: positive sum, max weight 1,
        // frozen regression value for the weight sum.
        let p = chirp13();
        let w = design_window(&p).unwrap();
        assert!(w.sum() > 0.0);
        let max = w.weights().iter().cloned().fold(f64::MIN, f64::max);
        assert_abs_diff_eq!(max, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w.sum(), 8.377593781548727, epsilon = 1e-9);
        assert!(w.weights().iter().all(|&x| x > 0.0));
    }

    #[test]
    fn quarter_wave_four_step_design_is_all_ones() {
        // At quarter-wave steps the constraint rows are rank deficient and
        // the all-ones window is already feasible, so the projection must
        // return it unchanged.
        let p = PhaseShiftProfile::linear(PI / 2.0, 4).unwrap();
        let w = design_window(&p).unwrap();
        for &x in w.weights() {
            assert_abs_diff_eq!(x, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn generic_four_step_design_is_infeasible() {
        // Away from special frequencies the four constraint rows have full
        // rank over R^4, leaving only the trivial solution.
        let p = PhaseShiftProfile::linear(0.4 * PI, 4).unwrap();
        assert!(matches!(
            design_window(&p),
            Err(Error::InfeasibleConstraints)
        ));
    }

    #[test]
    fn designed_linear_coefficients_zero_their_residuals() {
        let p = chirp13();
        let d = design_linear_coefficients(&p).unwrap();
        let psa = Psa::linear(p.omega0(), d).unwrap();
        let r = psa.zero_leakage_residuals(&p).unwrap();
        assert!(r.dc.norm() < 1e-10, "dc {}", r.dc.norm());
        assert!(
            r.conjugate.norm() < 1e-10,
            "conjugate {}",
            r.conjugate.norm()
        );
    }

    #[test]
    fn designed_linear_coefficients_are_normalised() {
        let p = chirp13();
        let d = design_linear_coefficients(&p).unwrap();
        let max_mod = d.iter().fold(0.0f64, |m, z| m.max(z.norm()));
        assert_abs_diff_eq!(max_mod, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn design_is_deterministic() {
        let p = chirp13();
        let a = design_window(&p).unwrap();
        let b = design_window(&p).unwrap();
        assert_eq!(a.weights(), b.weights());
    }
}
