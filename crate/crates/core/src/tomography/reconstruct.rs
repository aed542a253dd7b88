use num_complex::Complex64;

use crate::linalg::{hermitian_part, CMatrix4};
use crate::spin::DensityMatrix;
use crate::tomography::{CoherencePair, PopulationEstimate};
use crate::{Error, Result};

/// One measured upper-triangle element of the pseudo-pure matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coherence {
    pub pair: CoherencePair,
    pub value: Complex64,
    /// Standard error of each quadrature.
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionResult {
    /// Unit trace and Hermitian, but generally not positive semidefinite.
    pub rho_pp: CMatrix4,
    pub alpha_estimate: f64,
    /// `alpha/(2(1+alpha)) I + (1-alpha)/(1+alpha) rho_pp`, before projection.
    pub rho_full_raw: CMatrix4,
    pub rho_full: DensityMatrix,
    /// Standard errors of `rho_full`; off-diagonal entries are per quadrature.
    pub element_errors: [[f64; 4]; 4],
    /// Whether `rho_full_raw` had to be clamped onto the physical set.
    pub projected: bool,
}

const SUM_TOL: f64 = 1e-9;

/// Assembles the pseudo-pure matrix from its diagonal and measured
/// coherences, then restores the identity component for `alpha_estimate`.
/// Missing coherences are zero with infinite error.
pub fn reconstruct_full(
    populations: &PopulationEstimate,
    coherences: &[Coherence],
    alpha_estimate: f64,
) -> Result<ReconstructionResult> {
    if !(0.0..=1.0).contains(&alpha_estimate) {
        return Err(Error::Domain(format!(
            "alpha_estimate must lie in [0, 1], got {alpha_estimate}"
        )));
    }
    let p = populations.populations;
    if p.iter().chain(populations.std.iter()).any(|x| !x.is_finite()) {
        return Err(Error::Validation("non-finite population estimate".into()));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > SUM_TOL {
        return Err(Error::Validation(format!("populations sum to {total}, expected 1")));
    }

    let mut rho_pp = CMatrix4::zeros();
    let mut pp_err = [[f64::INFINITY; 4]; 4];
    for k in 0..4 {
        rho_pp[(k, k)] = Complex64::new(p[k], 0.0);
        pp_err[k][k] = populations.std[k];
    }
    let mut seen = Vec::with_capacity(6);
    for coh in coherences {
        if seen.contains(&coh.pair) {
            return Err(Error::Validation(format!("coherence {} supplied twice", coh.pair)));
        }
        if !(coh.value.re.is_finite() && coh.value.im.is_finite() && coh.std >= 0.0) {
            return Err(Error::Validation(format!("coherence {} is not finite", coh.pair)));
        }
        seen.push(coh.pair);
        let (a, b) = (coh.pair.a.index(), coh.pair.b.index());
        rho_pp[(a, b)] = coh.value;
        rho_pp[(b, a)] = coh.value.conj();
        pp_err[a][b] = coh.std;
        pp_err[b][a] = coh.std;
    }

    let a = alpha_estimate;
    let k1 = a / (2.0 * (1.0 + a));
    let k2 = (1.0 - a) / (1.0 + a);
    let rho_full_raw = CMatrix4::identity() * Complex64::new(k1, 0.0) + rho_pp * Complex64::new(k2, 0.0);

    let mut element_errors = [[0.0; 4]; 4];
    for (row, err_row) in element_errors.iter_mut().enumerate() {
        for (col, e) in err_row.iter_mut().enumerate() {
            *e = if k2 == 0.0 { 0.0 } else { k2 * pp_err[row][col] };
        }
    }
    for k in 0..4 {
        let pop = rho_full_raw[(k, k)].re;
        let tol = SUM_TOL + 5.0 * element_errors[k][k];
        if pop < -tol || pop > 1.0 + tol {
            return Err(Error::Validation(format!(
                "reconstructed population {pop:.4} of level {} lies outside [0, 1]",
                k + 1
            )));
        }
    }

    let herm = hermitian_part(&rho_full_raw);
    let (rho_full, projected) = match DensityMatrix::new(herm) {
        Ok(rho) => (rho, false),
        Err(_) => (DensityMatrix::nearest_physical(&herm)?, true),
    };
    Ok(ReconstructionResult {
        rho_pp,
        alpha_estimate,
        rho_full_raw,
        rho_full,
        element_errors,
        projected,
    })
}
