use std::fmt;
use std::str::FromStr;

use crate::linalg::{self, c, CMatrix4};
use crate::spin::DensityMatrix;
use crate::{Error, Result};

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha must lie in [0, 1], got {alpha}")))
    }
}

/// Single-spin partition function `2 (1 + alpha)`.
fn partition(alpha: f64) -> f64 {
    2.0 * (1.0 + alpha)
}

/// Real X-shaped matrix: diagonal `d` plus a real (1,4)/(4,1) coherence.
fn x_state(d: [f64; 4], coherence: f64) -> CMatrix4 {
    let mut m = linalg::real_diagonal(d);
    m[(0, 3)] = c(coherence, 0.0);
    m[(3, 0)] = c(coherence, 0.0);
    m
}

/// Electron-polarised Boltzmann state, nuclear polarisation neglected:
/// `diag(alpha, alpha, 1, 1) / Z`.
pub fn thermal_state(alpha: f64) -> Result<DensityMatrix> {
    check_alpha(alpha)?;
    let z = partition(alpha);
    Ok(DensityMatrix::from_trusted(linalg::real_diagonal([
        alpha / z,
        alpha / z,
        1.0 / z,
        1.0 / z,
    ])))
}

/// State left after the SWAP-like pulse pair and full electron relaxation:
/// `(4 / Z^2) diag(alpha, alpha^2, 1, alpha)`.
pub fn hyperpolarised_state(alpha: f64) -> Result<DensityMatrix> {
    check_alpha(alpha)?;
    let k = 4.0 / partition(alpha).powi(2);
    Ok(DensityMatrix::from_trusted(linalg::real_diagonal([
        k * alpha,
        k * alpha * alpha,
        k,
        k * alpha,
    ])))
}

/// Entangled target reached from the hyperpolarised state, normalised to unit trace
/// with prefactor `2 / Z^2`.
pub fn target_entangled_state(alpha: f64) -> Result<DensityMatrix> {
    check_alpha(alpha)?;
    let k = 2.0 / partition(alpha).powi(2);
    Ok(DensityMatrix::from_trusted(x_state(
        [
            k * (1.0 + alpha),
            k * 2.0 * alpha * alpha,
            k * 2.0 * alpha,
            k * (1.0 + alpha),
        ],
        k * (1.0 - alpha),
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudopureSource {
    Thermal,
    Hyperpolarised,
}

/// Pseudopure preparation: keeps the most populated level (|3>) and averages the other three.
pub fn pseudopure_state(source: PseudopureSource, alpha: f64) -> Result<DensityMatrix> {
    check_alpha(alpha)?;
    let z = partition(alpha);
    let m = match source {
        PseudopureSource::Thermal => {
            let p = (1.0 + 2.0 * alpha) / 3.0;
            linalg::real_diagonal([p / z, p / z, 1.0 / z, p / z])
        }
        PseudopureSource::Hyperpolarised => {
            let k = 4.0 / (z * z);
            let p = alpha * (2.0 + alpha) / 3.0;
            linalg::real_diagonal([k * p, k * p, k, k * p])
        }
    };
    Ok(DensityMatrix::from_trusted(m))
}

/// Preparation strategy compared in the entanglement-threshold analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Pseudopure state prepared from the thermal state.
    PseudopureThermal,
    /// Thermal state with no preparation.
    Thermal,
    /// Pseudopure state prepared from the hyperpolarised state.
    PseudopureHyperpolarised,
    /// Hyperpolarised state with the optimal coherence (the target state).
    Hyperpolarised,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::PseudopureThermal,
        Strategy::Thermal,
        Strategy::PseudopureHyperpolarised,
        Strategy::Hyperpolarised,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            Strategy::PseudopureThermal => "i",
            Strategy::Thermal => "ii",
            Strategy::PseudopureHyperpolarised => "iii",
            Strategy::Hyperpolarised => "iv",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Strategy::PseudopureThermal),
            "ii" | "2" => Ok(Strategy::Thermal),
            "iii" | "3" => Ok(Strategy::PseudopureHyperpolarised),
            "iv" | "4" => Ok(Strategy::Hyperpolarised),
            other => Err(Error::Usage(format!(
                "unknown strategy '{other}' (expected i, ii, iii or iv)"
            ))),
        }
    }
}

/// The most entangled X-state reachable by local unitaries from each strategy's
/// starting populations: coherence between the largest and second-smallest population.
pub fn optimal_entangled_form(strategy: Strategy, alpha: f64) -> Result<DensityMatrix> {
    check_alpha(alpha)?;
    let z = partition(alpha);
    let m = match strategy {
        Strategy::PseudopureThermal => {
            let outer = (4.0 + 2.0 * alpha) / 6.0 / z;
            let inner = (1.0 + 2.0 * alpha) / 3.0 / z;
            x_state([outer, inner, inner, outer], (2.0 - 2.0 * alpha) / 6.0 / z)
        }
        Strategy::Thermal => x_state(
            [(1.0 + alpha) / 2.0 / z, alpha / z, 1.0 / z, (1.0 + alpha) / 2.0 / z],
            (1.0 - alpha) / 2.0 / z,
        ),
        Strategy::PseudopureHyperpolarised => {
            let k = 4.0 / (z * z);
            let outer = k * (3.0 + 2.0 * alpha + alpha * alpha) / 6.0;
            let inner = k * alpha * (2.0 + alpha) / 3.0;
            x_state(
                [outer, inner, inner, outer],
                k * (3.0 - 2.0 * alpha - alpha * alpha) / 6.0,
            )
        }
        Strategy::Hyperpolarised => return target_entangled_state(alpha),
    };
    Ok(DensityMatrix::from_trusted(m))
}

/// `(1 - eps) I/4 + eps rho0`.
pub fn werner_mixture(eps: f64, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::Domain(format!("mixing weight must lie in [0, 1], got {eps}")));
    }
    let m = DensityMatrix::maximally_mixed().matrix() * c(1.0 - eps, 0.0) + rho0.matrix() * c(eps, 0.0);
    DensityMatrix::new(m)
}
