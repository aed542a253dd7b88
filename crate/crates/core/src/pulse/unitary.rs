use num_complex::Complex64;

use crate::linalg::{self, c, CMatrix4};
use crate::pulse::TransitionId;
use crate::spin::DensityMatrix;
use crate::{Error, Result};

/// Largest tolerated `max |U^dagger U - 1|`.
pub const UNITARITY_TOL: f64 = 1e-10;

/// `exp(-i theta (cos phi sx + sin phi sy) / 2)` on the transition's two levels,
/// identity elsewhere.
pub fn selective_rotation_unitary(transition: TransitionId, angle: f64, phase: f64) -> CMatrix4 {
    let (up, down) = transition.pseudo_spin();
    let (u, d) = (up.index(), down.index());
    let (s, co) = (0.5 * angle).sin_cos();
    let mut m = CMatrix4::identity();
    m[(u, u)] = c(co, 0.0);
    m[(d, d)] = c(co, 0.0);
    m[(u, d)] = c(0.0, -s) * Complex64::from_polar(1.0, -phase);
    m[(d, u)] = c(0.0, -s) * Complex64::from_polar(1.0, phase);
    m
}

/// `diag(e^{-i phi}, 1, e^{i(sigma + phi)}, e^{-i sigma})`: the net effect of
/// pi_0, -pi_phi on 1-3 followed by pi_0, -pi_sigma on 3-4.
pub fn geometric_phase_unitary(phi: f64, sigma: f64) -> CMatrix4 {
    let mut m = CMatrix4::zeros();
    m[(0, 0)] = Complex64::from_polar(1.0, -phi);
    m[(1, 1)] = c(1.0, 0.0);
    m[(2, 2)] = Complex64::from_polar(1.0, sigma + phi);
    m[(3, 3)] = Complex64::from_polar(1.0, -sigma);
    m
}

/// `U rho U^dagger`.
pub fn apply_unitary(rho: &DensityMatrix, u: &CMatrix4) -> Result<DensityMatrix> {
    let defect = linalg::unitarity_defect(u);
    if !(defect <= UNITARITY_TOL) {
        return Err(Error::Numerical(format!(
            "operator is not unitary (defect {defect:.3e})"
        )));
    }
    let out = u * rho.matrix() * u.adjoint();
    Ok(DensityMatrix::from_trusted(linalg::hermitian_part(&out)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::thermal_state;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn zero_angle_is_identity() {
        for t in TransitionId::ALL {
            assert_eq!(selective_rotation_unitary(t, 0.0, 0.7), CMatrix4::identity());
        }
    }

    #[test]
    fn full_turn_is_minus_one_on_the_subspace() {
        for t in TransitionId::ALL {
            let u = selective_rotation_unitary(t, TAU, 0.3);
            let (a, b) = t.levels();
            for l in 0..4 {
                let expected = if l == a.index() || l == b.index() { -1.0 } else { 1.0 };
                assert!((u[(l, l)] - c(expected, 0.0)).norm() < 1e-12);
            }
            let rho = thermal_state(0.3).unwrap();
            let out = apply_unitary(&rho, &u).unwrap();
            assert!(out.max_abs_diff(&rho) < 1e-12);
        }
    }

    #[test]
    fn pi_pulse_swaps_thermal_populations() {
        let a = 0.217;
        let z = 2.0 * (1.0 + a);
        let out = apply_unitary(
            &thermal_state(a).unwrap(),
            &selective_rotation_unitary(TransitionId::E13, PI, 0.0),
        )
        .unwrap();
        let want = [1.0 / z, a / z, a / z, 1.0 / z];
        for (g, w) in out.populations().iter().zip(want) {
            assert!((g - w).abs() < 1e-15);
        }
    }

    #[test]
    fn rotations_are_unitary() {
        for t in TransitionId::ALL {
            for k in 0..16 {
                let u = selective_rotation_unitary(t, 0.37 * k as f64, -1.1 * k as f64);
                assert!(linalg::unitarity_defect(&u) <= UNITARITY_TOL);
            }
        }
    }

    #[test]
    fn pi_pair_is_electron_phase_gate() {
        // pi_0 then -pi_phi (realised as pi at phase phi + pi)
        for phi in [0.0, 0.3, 1.0, 2.5, -0.8] {
            let first = selective_rotation_unitary(TransitionId::E13, PI, 0.0);
            let second = selective_rotation_unitary(TransitionId::E13, PI, phi + PI);
            let gate = second * first;
            let expected = geometric_phase_unitary(phi, 0.0);
            assert!(linalg::equal_up_to_global_phase(&gate, &expected, 1e-12), "{phi}");
        }
    }

    #[test]
    fn negative_pi_equals_pi_about_opposite_axis() {
        for phi in [0.0, 0.4, 2.0] {
            for t in TransitionId::ALL {
                let a = selective_rotation_unitary(t, -PI, phi);
                let b = selective_rotation_unitary(t, PI, phi + PI);
                assert!(linalg::equal_up_to_global_phase(&a, &b, 1e-12));
            }
        }
    }

    #[test]
    fn four_pulse_product_reproduces_the_phase_gate() {
        // independent oracle: explicit product of the four pi pulses
        for (phi, sigma) in [(0.2, 0.9), (1.3, -0.4), (PI, FRAC_PI_2), (0.0, 0.0)] {
            let pulses = [
                selective_rotation_unitary(TransitionId::E13, PI, 0.0),
                selective_rotation_unitary(TransitionId::E13, -PI, phi),
                selective_rotation_unitary(TransitionId::N34, PI, 0.0),
                selective_rotation_unitary(TransitionId::N34, -PI, sigma),
            ];
            let product = pulses.iter().fold(CMatrix4::identity(), |acc, p| p * acc);
            assert!(
                linalg::equal_up_to_global_phase(&product, &geometric_phase_unitary(phi, sigma), 1e-12),
                "{phi} {sigma}"
            );
        }
        assert_eq!(geometric_phase_unitary(0.0, 0.0), CMatrix4::identity());
    }

    #[test]
    fn rejects_non_unitary() {
        let rho = thermal_state(0.5).unwrap();
        let m = CMatrix4::identity() * c(1.01, 0.0);
        assert!(matches!(apply_unitary(&rho, &m), Err(Error::Numerical(_))));
        assert_eq!(apply_unitary(&rho, &CMatrix4::identity()).unwrap(), rho);
    }
}
