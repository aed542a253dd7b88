use crate::linalg::{c, CMatrix4};
use crate::spin::{alpha_from_params, DensityMatrix, SystemParams};
use crate::{Error, Result};

/// Waits at least this many electron T1s annihilate coherences when no explicit
/// damping factor is given.
pub const AUTO_ANNIHILATION_T1E_MULTIPLE: f64 = 5.0;

/// Relaxation during a free wait of `tau` seconds.
///
/// Each electron-transition pair ((1,3) and (2,4)) relaxes towards the Boltzmann
/// ratio `alpha : 1` with time constant T1e while keeping its sum; nuclear flips
/// and flip-flops are frozen. Every off-diagonal element is scaled by
/// `coherence_decay`, or when `None` by 0 for `tau >= 5 T1e` and
/// `exp(-tau / T2eff)` otherwise.
pub fn relax_wait(
    rho: &DensityMatrix,
    tau: f64,
    params: &SystemParams,
    coherence_decay: Option<f64>,
) -> Result<DensityMatrix> {
    if !(tau >= 0.0) {
        return Err(Error::Domain(format!("wait duration must be non-negative, got {tau}")));
    }
    let alpha = alpha_from_params(params)?;
    let decay = match coherence_decay {
        Some(f) if (0.0..=1.0).contains(&f) => f,
        Some(f) => return Err(Error::Domain(format!("coherence decay must lie in [0, 1], got {f}"))),
        None if tau >= AUTO_ANNIHILATION_T1E_MULTIPLE * params.t1e => 0.0,
        None => (-tau / params.t2_eff).exp(),
    };
    let memory = (-tau / params.t1e).exp();

    let m = rho.matrix();
    let mut out = CMatrix4::from_fn(|r, col| if r == col { m[(r, r)] } else { m[(r, col)] * decay });
    for (up, down) in [(0usize, 2usize), (1, 3)] {
        let (pu, pd) = (m[(up, up)].re, m[(down, down)].re);
        let sum = pu + pd;
        let eq_up = alpha * sum / (1.0 + alpha);
        let new_up = eq_up + (pu - eq_up) * memory;
        out[(up, up)] = c(new_up, 0.0);
        out[(down, down)] = c(sum - new_up, 0.0);
    }
    DensityMatrix::new(out).map_err(|e| Error::Domain(format!("relaxation parameters give an unphysical state: {e}")))
}
