use serde::Serialize;

use crate::linalg;
use crate::spin::DensityMatrix;

/// Minimum eigenvalue of the partial transpose over the nuclear spin.
/// Negative iff the state is entangled.
pub fn ppt_min_eigenvalue(rho: &DensityMatrix) -> f64 {
    linalg::min_eigenvalue(&linalg::partial_transpose_nuclear(rho.matrix()))
}

/// Same test with the transpose taken over the electron spin.
pub fn ppt_min_eigenvalue_electron(rho: &DensityMatrix) -> f64 {
    linalg::min_eigenvalue(&linalg::partial_transpose_electron(rho.matrix()))
}

/// Sum of the magnitudes of the negative partial-transpose eigenvalues.
pub fn negativity(rho: &DensityMatrix) -> f64 {
    let spectrum = linalg::hermitian_eigenvalues(&linalg::partial_transpose_nuclear(rho.matrix()));
    spectrum.iter().filter(|v| **v < 0.0).fold(0.0, |acc, v| acc - v)
}

/// Wootters concurrence.
///
/// The decreasing `lambda_i` are square roots of the eigenvalues of
/// `rho (sy sy) rho* (sy sy)`; these are computed from the Hermitian, similar
/// matrix `sqrt(rho) rho~ sqrt(rho)`.
pub fn concurrence(rho: &DensityMatrix) -> f64 {
    let yy = linalg::sigma_y_sigma_y();
    let flipped = yy * rho.matrix().conjugate() * yy;
    let root = linalg::psd_sqrt(rho.matrix());
    let mut lambda: Vec<f64> = linalg::hermitian_eigenvalues(&(root * flipped * root))
        .iter()
        .map(|v| v.max(0.0).sqrt())
        .collect();
    lambda.sort_by(|a, b| b.total_cmp(a));
    (lambda[0] - lambda[1] - lambda[2] - lambda[3]).max(0.0)
}

/// Uhlmann fidelity `(Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2`.
pub fn fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let root = linalg::psd_sqrt(sigma.matrix());
    let inner = root * rho.matrix() * root;
    let tr: f64 = linalg::hermitian_eigenvalues(&inner)
        .iter()
        .map(|v| v.max(0.0).sqrt())
        .sum();
    (tr * tr).clamp(0.0, 1.0)
}

pub fn purity(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    (m * m).trace().re
}

/// `N / (N - 1) (1 - Tr rho^2)` with `N = 4`.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    4.0 / 3.0 * (1.0 - purity(rho))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricReport {
    pub ppt_min_eigenvalue: f64,
    pub negativity: f64,
    pub concurrence: f64,
    pub purity: f64,
    pub linear_entropy: f64,
}

impl MetricReport {
    pub fn of(rho: &DensityMatrix) -> Self {
        let p = purity(rho);
        MetricReport {
            ppt_min_eigenvalue: ppt_min_eigenvalue(rho),
            negativity: negativity(rho),
            concurrence: concurrence(rho),
            purity: p,
            linear_entropy: 4.0 / 3.0 * (1.0 - p),
        }
    }

    pub fn entangled(&self) -> bool {
        self.ppt_min_eigenvalue < 0.0
    }
}
