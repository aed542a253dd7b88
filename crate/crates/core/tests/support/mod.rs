#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use spinpair::{CMatrix4, DensityMatrix};

/// Random full-rank state `G G^dagger / tr`, G with Gaussian entries.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let mut g = CMatrix4::zeros();
    for z in g.iter_mut() {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        *z = Complex64::new(re, im);
    }
    let m = g * g.adjoint();
    let tr = m.trace();
    let m = (m / tr + (m / tr).adjoint()) * Complex64::new(0.5, 0.0);
    DensityMatrix::new(m).expect("Gram matrix is a state")
}

/// Hyperpolarised populations with Z = 2(1 + alpha), written out directly.
pub fn hyperpolarised_oracle(alpha: f64) -> CMatrix4 {
    let z = 2.0 * (1.0 + alpha);
    let k = 4.0 / (z * z);
    CMatrix4::from_diagonal(
        &nalgebra::Vector4::new(alpha, alpha * alpha, 1.0, alpha).map(|x| Complex64::new(k * x, 0.0)),
    )
}

/// Entangled target, written out directly.
pub fn target_oracle(alpha: f64) -> CMatrix4 {
    let z = 2.0 * (1.0 + alpha);
    let k = 2.0 / (z * z);
    let mut m = CMatrix4::zeros();
    m[(0, 0)] = Complex64::new(k * (1.0 + alpha), 0.0);
    m[(3, 3)] = m[(0, 0)];
    m[(1, 1)] = Complex64::new(k * 2.0 * alpha * alpha, 0.0);
    m[(2, 2)] = Complex64::new(k * 2.0 * alpha, 0.0);
    m[(0, 3)] = Complex64::new(k * (1.0 - alpha), 0.0);
    m[(3, 0)] = m[(0, 3)];
    m
}

pub fn max_diff(a: &CMatrix4, b: &CMatrix4) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
