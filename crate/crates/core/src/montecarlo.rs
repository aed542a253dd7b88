//! Error propagation from element-wise uncertainties to entanglement
//! metrics, by sampling physical states around a measured matrix.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::{min_eigenvalue, CMatrix4};
use crate::metrics::{concurrence, fidelity, ppt_min_eigenvalue};
use crate::spin::DensityMatrix;
use crate::tomography::rng_stream;
use crate::{Error, Result};

/// Candidates with a smaller eigenvalue are unphysical.
pub const REJECTION_EIGENVALUE: f64 = -1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub n_samples: usize,
    /// Standard deviation of each element; off-diagonal entries apply to
    /// the real and imaginary parts separately.
    pub element_errors: [[f64; 4]; 4],
    pub seed: u64,
    /// Reference for the fidelity statistic.
    pub target: Option<DensityMatrix>,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            n_samples: 4096,
            element_errors: [[0.0; 4]; 4],
            seed: 0,
            target: None,
        }
    }
}

impl McConfig {
    pub fn uniform(std: f64) -> Self {
        McConfig {
            element_errors: [[std; 4]; 4],
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_samples == 0 {
            return Err(Error::Config("n_samples must be at least 1".into()));
        }
        for i in 0..4 {
            for j in 0..4 {
                let e = self.element_errors[i][j];
                if !(e.is_finite() && e >= 0.0) {
                    return Err(Error::Config(format!("element error ({}, {}) is {e}", i + 1, j + 1)));
                }
                if e != self.element_errors[j][i] {
                    return Err(Error::Config(format!(
                        "element errors must be symmetric, ({}, {}) differs from its transpose",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stat {
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McReport {
    pub ppt_min_eigenvalue: Stat,
    pub concurrence: Stat,
    pub fidelity: Option<Stat>,
    pub accepted: usize,
    pub rejected: usize,
    pub n_samples: usize,
    pub seed: u64,
}

/// Gaussian kick of every upper-triangle element, conjugate fill, and
/// renormalisation to unit trace. The result need not be positive.
pub fn perturb_element_wise<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    element_errors: &[[f64; 4]; 4],
    rng: &mut R,
) -> CMatrix4 {
    let mut m = *rho.matrix();
    let mut draw = |sigma: f64| Normal::new(0.0, sigma).map(|n| n.sample(rng)).unwrap_or(0.0);
    for i in 0..4 {
        m[(i, i)] = Complex64::new(m[(i, i)].re + draw(element_errors[i][i]), 0.0);
        for j in i + 1..4 {
            let sigma = element_errors[i][j];
            let z = m[(i, j)] + Complex64::new(draw(sigma), draw(sigma));
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    let tr = m.trace().re;
    if tr != 1.0 && tr > 0.0 {
        m /= Complex64::new(tr, 0.0);
    }
    m
}

#[derive(Default)]
struct Welford {
    n: usize,
    mean: f64,
    m2: f64,
}

impl Welford {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn stat(&self) -> Stat {
        let var = if self.n > 1 { self.m2 / (self.n - 1) as f64 } else { 0.0 };
        Stat {
            mean: self.mean,
            std: var.max(0.0).sqrt(),
        }
    }
}

type Sample = Option<(f64, f64, Option<f64>)>;

fn draw_sample(rho: &DensityMatrix, config: &McConfig, index: usize) -> Sample {
    let mut rng = rng_stream(config.seed, index as u64);
    let m = perturb_element_wise(rho, &config.element_errors, &mut rng);
    if !(m.trace().re > 0.0) || min_eigenvalue(&m) < REJECTION_EIGENVALUE {
        return None;
    }
    let candidate = DensityMatrix::new(m).ok()?;
    let f = config.target.as_ref().map(|t| fidelity(&candidate, t));
    Some((ppt_min_eigenvalue(&candidate), concurrence(&candidate), f))
}

fn summarise(samples: Vec<Sample>, config: &McConfig) -> Result<McReport> {
    let (mut ppt, mut conc, mut fid) = (Welford::default(), Welford::default(), Welford::default());
    for (p, c, f) in samples.iter().flatten() {
        ppt.push(*p);
        conc.push(*c);
        if let Some(f) = f {
            fid.push(*f);
        }
    }
    if ppt.n == 0 {
        return Err(Error::AllRejected {
            attempts: config.n_samples,
        });
    }
    Ok(McReport {
        ppt_min_eigenvalue: ppt.stat(),
        concurrence: conc.stat(),
        fidelity: config.target.as_ref().map(|_| fid.stat()),
        accepted: ppt.n,
        rejected: config.n_samples - ppt.n,
        n_samples: config.n_samples,
        seed: config.seed,
    })
}

/// Sample statistics over physical perturbations of `rho`, drawn in parallel.
/// Each sample owns the generator stream `(seed, index)`, so the report does
/// not depend on scheduling.
pub fn run_mc(rho: &DensityMatrix, config: &McConfig) -> Result<McReport> {
    config.validate()?;
    let samples: Vec<Sample> = (0..config.n_samples)
        .into_par_iter()
        .map(|i| draw_sample(rho, config, i))
        .collect();
    summarise(samples, config)
}

/// Single-threaded twin of [`run_mc`].
pub fn run_mc_serial(rho: &DensityMatrix, config: &McConfig) -> Result<McReport> {
    config.validate()?;
    let samples: Vec<Sample> = (0..config.n_samples).map(|i| draw_sample(rho, config, i)).collect();
    summarise(samples, config)
}
