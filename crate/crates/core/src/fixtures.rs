//! Reference data shipped with the crate.

use crate::spin::DensityMatrix;

pub const MEASURED_RE: [[f64; 4]; 4] = [
    [0.382, 0.003, -0.035, 0.272],
    [0.003, 0.017, -0.000, 0.001],
    [-0.035, -0.000, 0.174, -0.055],
    [0.272, 0.001, -0.055, 0.427],
];

pub const MEASURED_IM: [[f64; 4]; 4] = [
    [0.000, 0.000, -0.039, 0.000],
    [-0.000, 0.000, 0.001, 0.003],
    [0.039, -0.001, 0.000, -0.042],
    [0.000, -0.003, 0.042, 0.000],
];

/// JSON form of the measured matrix, in the density-matrix file schema.
pub const MEASURED_JSON: &str = include_str!("../fixtures/measured_density_matrix.json");

/// The experimentally reconstructed state at three decimals. Its trace is one
/// up to the rounding of the listed entries.
pub fn measured_density_matrix() -> DensityMatrix {
    DensityMatrix::from_parts(&MEASURED_RE, &MEASURED_IM).expect("fixture is a valid state")
}
