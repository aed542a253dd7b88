use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};
use rand::Rng;

use crate::linalg::CMatrix4;
use crate::pulse::{apply_unitary, sequence_unitary, PulseOp, PulseSequence, TransitionId};
use crate::spin::DensityMatrix;
use crate::tomography::readout_population_difference;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PopulationEstimate {
    /// Sums to one exactly.
    pub populations: [f64; 4],
    pub std: [f64; 4],
}

/// Permutations placing each of the pairs (1,3), (1,4), (2,3), (2,4) on the
/// 1-3 readout.
pub fn default_population_design() -> Vec<PulseSequence> {
    let pi = |t| PulseOp::rotation(t, PI, 0.0);
    vec![
        PulseSequence::named("p1-p3", vec![]),
        PulseSequence::named("p1-p4", vec![pi(TransitionId::N34)]),
        PulseSequence::named("p2-p3", vec![pi(TransitionId::N12)]),
        PulseSequence::named("p2-p4", vec![pi(TransitionId::N12), pi(TransitionId::N34)]),
    ]
}

pub fn measure_population_differences<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    noise_sigma: f64,
    rng: &mut R,
) -> Result<PopulationEstimate> {
    measure_population_differences_with(rho, &default_population_design(), noise_sigma, rng)
}

/// Least-squares populations from one readout per design program, with
/// `p4 = 1 - p1 - p2 - p3` imposed.
pub fn measure_population_differences_with<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    design: &[PulseSequence],
    noise_sigma: f64,
    rng: &mut R,
) -> Result<PopulationEstimate> {
    let mut ata = Matrix3::<f64>::zeros();
    let mut atb = Vector3::<f64>::zeros();
    for program in design {
        let m = if program.is_empty() {
            CMatrix4::identity()
        } else {
            sequence_unitary(program)?
        };
        // readout weight of each original level
        let w: Vec<f64> = (0..4).map(|k| m[(0, k)].norm_sqr() - m[(2, k)].norm_sqr()).collect();
        let mapped = apply_unitary(rho, &m)?;
        let d = readout_population_difference(&mapped, noise_sigma, rng)?;
        let row = Vector3::new(w[0] - w[3], w[1] - w[3], w[2] - w[3]);
        ata += row * row.transpose();
        atb += row * (d - w[3]);
    }
    let cov_unit = ata
        .try_inverse()
        .filter(|inv| inv.iter().all(|x| x.is_finite()) && ata.determinant().abs() > 1e-9)
        .ok_or_else(|| Error::Config("population mapping design is singular".into()))?;
    let x = cov_unit * atb;
    let p = [x[0], x[1], x[2], 1.0 - x[0] - x[1] - x[2]];
    // each readout carries 2 sigma from the in-phase quadrature
    let var = (2.0 * noise_sigma).powi(2);
    let ones = Vector3::new(1.0, 1.0, 1.0);
    let std = [
        (var * cov_unit[(0, 0)]).sqrt(),
        (var * cov_unit[(1, 1)]).sqrt(),
        (var * cov_unit[(2, 2)]).sqrt(),
        (var * (ones.transpose() * cov_unit * ones)[0]).sqrt(),
    ];
    Ok(PopulationEstimate { populations: p, std })
}
