use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::linalg::{self, c, CMatrix4};
use crate::spin::{Level, SystemParams};
use crate::Result;

/// Static spin Hamiltonian `w_e S_z - w_I I_z + a S.I` (rad/s) and its spectrum.
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    pub matrix: CMatrix4,
    /// Eigenvalues in ascending order, rad/s.
    pub eigenvalues: [f64; 4],
    /// Energy of the eigenstate dominated by each product level, rad/s.
    pub level_energies: [f64; 4],
}

impl Hamiltonian {
    pub fn energy(&self, level: Level) -> f64 {
        self.level_energies[level.index()]
    }

    /// Angular frequency of the electron transition 1 <-> 3.
    pub fn mw_transition(&self) -> f64 {
        (self.energy(Level::One) - self.energy(Level::Three)).abs()
    }

    /// Angular frequency of the nuclear transition 3 <-> 4.
    pub fn rf_transition(&self) -> f64 {
        (self.energy(Level::Three) - self.energy(Level::Four)).abs()
    }

    pub fn mw_transition_hz(&self) -> f64 {
        self.mw_transition() / std::f64::consts::TAU
    }

    pub fn rf_transition_hz(&self) -> f64 {
        self.rf_transition() / std::f64::consts::TAU
    }
}

fn kron(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>) -> CMatrix4 {
    CMatrix4::from_fn(|r, col| a[(r / 2, col / 2)] * b[(r % 2, col % 2)])
}

/// Spin-1/2 operators (x, y, z).
fn spin_half() -> [Matrix2<Complex64>; 3] {
    let h = 0.5;
    [
        Matrix2::new(c(0.0, 0.0), c(h, 0.0), c(h, 0.0), c(0.0, 0.0)),
        Matrix2::new(c(0.0, 0.0), c(0.0, -h), c(0.0, h), c(0.0, 0.0)),
        Matrix2::new(c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-h, 0.0)),
    ]
}

pub fn build_hamiltonian(params: &SystemParams) -> Result<Hamiltonian> {
    params.validate()?;
    let one = Matrix2::<Complex64>::identity();
    let s = spin_half();
    let electron: Vec<CMatrix4> = s.iter().map(|op| kron(op, &one)).collect();
    let nuclear: Vec<CMatrix4> = s.iter().map(|op| kron(&one, op)).collect();

    let mut h = electron[2] * c(params.omega_electron(), 0.0) - nuclear[2] * c(params.omega_nuclear(), 0.0);
    for k in 0..3 {
        h += electron[k] * nuclear[k] * c(params.hyperfine, 0.0);
    }

    let (values, vectors) = linalg::hermitian_eigen(&h);
    let mut level_energies = [0.0; 4];
    for level in Level::ALL {
        let row = level.index();
        let dominant = (0..4)
            .max_by(|&a, &b| vectors[(row, a)].norm_sqr().total_cmp(&vectors[(row, b)].norm_sqr()))
            .unwrap_or(row);
        level_energies[row] = values[dominant];
    }

    Ok(Hamiltonian {
        matrix: h,
        eigenvalues: [values[0], values[1], values[2], values[3]],
        level_energies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncoupled_spins_are_diagonal_in_the_product_basis() {
        let p = SystemParams {
            hyperfine: 0.0,
            ..Default::default()
        };
        let h = build_hamiltonian(&p).unwrap();
        let (we, wi) = (p.omega_electron(), p.omega_nuclear());
        let expected = [
            we / 2.0 - wi / 2.0,
            we / 2.0 + wi / 2.0,
            -we / 2.0 - wi / 2.0,
            -we / 2.0 + wi / 2.0,
        ];
        for (l, e) in Level::ALL.iter().zip(expected) {
            assert!((h.energy(*l) - e).abs() <= 1e-9 * we, "{l}");
        }
        assert!(h.matrix.trace().norm() < 1e-6 * we);
        assert!((h.mw_transition() - we).abs() <= 1e-9 * we);
    }

    #[test]
    fn traceless_and_hermitian() {
        let h = build_hamiltonian(&SystemParams::default()).unwrap();
        let scale = SystemParams::default().omega_electron();
        assert!(h.matrix.trace().norm() <= 1e-12 * scale);
        assert!(linalg::max_abs_diff(&h.matrix, &h.matrix.adjoint()) == 0.0);
        let sum: f64 = h.eigenvalues.iter().sum();
        assert!(sum.abs() <= 1e-9 * scale);
    }

    #[test]
    fn w_band_transition_frequency() {
        let h = build_hamiltonian(&SystemParams::default()).unwrap();
        let ghz = h.mw_transition_hz() / 1e9;
        // g muB B / h = 1.9987 * 13.996 GHz/T * 3.36 T, shifted by a/2 ~ 59 MHz
        assert!((ghz - 94.0).abs() < 0.1, "{ghz}");
        // nuclear transition in the electron-down manifold, w_I + a/2
        let mhz = h.rf_transition_hz() / 1e6;
        assert!((mhz - 116.6).abs() < 0.5, "{mhz}");
    }
}
