//! Simulation and analysis toolkit for a coupled electron (S = 1/2) and
//! nuclear (I = 1/2) spin pair.
//!
//! The crate is organised around the four-level product basis
//! `|1> = |up_e up_n>`, `|2> = |up_e down_n>`, `|3> = |down_e up_n>`,
//! `|4> = |down_e down_n>`:
//!
//! * [`spin`]: physical parameters, density matrices and closed-form states.
//! * [`pulse`]: selective rotations, geometric phase gates, relaxation waits
//!   and a small text format for pulse programs.
//! * [`metrics`]: PPT test, concurrence, Uhlmann fidelity, linear entropy and
//!   entanglement thresholds for each preparation strategy.
//! * [`tomography`]: phase-labelled coherence detection and reconstruction.
//! * [`montecarlo`]: error propagation through random physical matrices.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
mod error;
pub mod fixtures;
pub mod linalg;
pub mod metrics;
pub mod montecarlo;
pub mod pulse;
pub mod spin;
pub mod tomography;

pub use error::{Error, Result};
pub use linalg::CMatrix4;
pub use num_complex::Complex64;
pub use spin::{DensityMatrix, Strategy, SystemParams};
