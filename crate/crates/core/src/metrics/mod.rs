//! Entanglement and mixedness measures, and the entanglement thresholds of
//! each preparation strategy.

mod measures;
mod thresholds;

pub use measures::{
    concurrence, fidelity, linear_entropy, negativity, ppt_min_eigenvalue, ppt_min_eigenvalue_electron, purity,
    MetricReport,
};
pub use thresholds::{
    alpha_from_enhancement, analytic_threshold, bisect_threshold, echo_enhancement, entropy_decrease, ppt_threshold,
    werner_threshold, Threshold, BISECTION_TOL,
};
