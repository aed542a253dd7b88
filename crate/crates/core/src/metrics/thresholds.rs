use crate::metrics::ppt_min_eigenvalue;
use crate::spin::{optimal_entangled_form, werner_mixture, DensityMatrix, Strategy};
use crate::{Error, Result};

/// Bracket width at which threshold bisection stops.
pub const BISECTION_TOL: f64 = 1e-10;

/// PT eigenvalues above this count as non-negative when probing the bracket ends.
const SIGN_TOL: f64 = 1e-12;

/// Critical Boltzmann ratio for one preparation strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub strategy: Strategy,
    /// Largest alpha for which the optimal form still has a negative PT eigenvalue.
    pub alpha: f64,
    /// Closed-form root, where the algebra gives one.
    pub analytic: Option<f64>,
}

/// Finds the sign change of `f` on `[lo, hi]`, assuming `f(lo) < 0 <= f(hi)`.
pub fn bisect_threshold(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn pt_of(strategy: Strategy, alpha: f64) -> f64 {
    optimal_entangled_form(strategy, alpha)
        .map(|rho| ppt_min_eigenvalue(&rho))
        .unwrap_or(f64::NAN)
}

/// Bisection on the sign of the PT minimum eigenvalue of the strategy's optimal form.
///
/// Strategy (i) only reaches zero at `alpha = 0` once nuclear polarisation is
/// neglected, so it returns exactly 0.
pub fn ppt_threshold(strategy: Strategy) -> Threshold {
    let f = |a: f64| pt_of(strategy, a);
    let alpha = if f(0.0) >= -SIGN_TOL {
        0.0
    } else if f(1.0) < 0.0 {
        1.0
    } else {
        bisect_threshold(f, 0.0, 1.0, BISECTION_TOL)
    };
    Threshold {
        strategy,
        alpha,
        analytic: analytic_threshold(strategy),
    }
}

/// Closed-form thresholds: 0, `3 - 2 sqrt 2`, `sqrt 2 - 1`, and the real root of
/// `alpha^3 - (1 - alpha)^2 / 4` (Cardano).
pub fn analytic_threshold(strategy: Strategy) -> Option<f64> {
    let sqrt2 = std::f64::consts::SQRT_2;
    Some(match strategy {
        Strategy::PseudopureThermal => 0.0,
        // (1 + a) = sqrt 2 (1 - a)  =>  a = (sqrt 2 - 1)^2
        Strategy::Thermal => 3.0 - 2.0 * sqrt2,
        Strategy::PseudopureHyperpolarised => sqrt2 - 1.0,
        Strategy::Hyperpolarised => {
            // x^3 + b x^2 + c x + d with b = -1/4, c = 1/2, d = -1/4
            let (b, c, d) = (-0.25f64, 0.5f64, -0.25f64);
            let p = c - b * b / 3.0;
            let q = 2.0 * b.powi(3) / 27.0 - b * c / 3.0 + d;
            let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
            debug_assert!(disc > 0.0);
            let s = disc.sqrt();
            (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() - b / 3.0
        }
    })
}

/// Mixing weight above which `(1 - eps) I/4 + eps rho0` is entangled.
pub fn werner_threshold(rho0: &DensityMatrix) -> Result<f64> {
    let pt = |eps: f64| {
        werner_mixture(eps, rho0)
            .map(|rho| ppt_min_eigenvalue(&rho))
            .unwrap_or(f64::NAN)
    };
    if !(pt(1.0) < 0.0) {
        return Err(Error::Domain(
            "reference state is separable; no entangling weight exists".into(),
        ));
    }
    // entangled (negative) above the threshold, so bisect on the mirrored weight
    Ok(1.0 - bisect_threshold(|t| pt(1.0 - t), 0.0, 1.0, BISECTION_TOL))
}

/// Closed-form linear entropy decrease produced by hyperpolarisation.
pub fn entropy_decrease(alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    Ok(2.0 * (1.0 - alpha).powi(2) * (1.0 + alpha * alpha) / (3.0 * (1.0 + alpha).powi(4)))
}

/// Growth of the 1-3 echo after hyperpolarisation, `2 / (1 + alpha)`.
pub fn echo_enhancement(alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    Ok(2.0 / (1.0 + alpha))
}

/// Inverse of [`echo_enhancement`]. Pulse errors and residual relaxation only
/// lower the observed enhancement, so the result is an upper bound on alpha.
pub fn alpha_from_enhancement(enhancement: f64) -> Result<f64> {
    if !(enhancement > 1.0 && enhancement <= 2.0) {
        return Err(Error::Domain(format!(
            "echo enhancement must lie in (1, 2], got {enhancement}"
        )));
    }
    Ok(2.0 / enhancement - 1.0)
}
