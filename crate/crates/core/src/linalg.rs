//! Small dense helpers for 4x4 complex matrices.
//!
//! Hermitian eigendecompositions are delegated to `nalgebra::SymmetricEigen`;
//! everything here assumes the 2x2 (electron x nuclear) tensor structure.

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

pub type CMatrix4 = Matrix4<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn real_diagonal(d: [f64; 4]) -> CMatrix4 {
    CMatrix4::from_diagonal(&Vector4::new(c(d[0], 0.0), c(d[1], 0.0), c(d[2], 0.0), c(d[3], 0.0)))
}

pub fn hermitian_part(m: &CMatrix4) -> CMatrix4 {
    (m + m.adjoint()) * c(0.5, 0.0)
}

/// Eigenvalues (ascending) and matching eigenvector columns of the Hermitian part of `m`.
pub fn hermitian_eigen(m: &CMatrix4) -> (Vector4<f64>, CMatrix4) {
    let eig = SymmetricEigen::new(hermitian_part(m));
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = Vector4::from_fn(|i, _| eig.eigenvalues[order[i]]);
    let vectors = CMatrix4::from_fn(|r, col| eig.eigenvectors[(r, order[col])]);
    (values, vectors)
}

pub fn hermitian_eigenvalues(m: &CMatrix4) -> Vector4<f64> {
    hermitian_eigen(m).0
}

pub fn min_eigenvalue(m: &CMatrix4) -> f64 {
    hermitian_eigenvalues(m)[0]
}

/// Rebuilds `V f(D) V^dagger` from an eigendecomposition.
pub fn spectral_map(m: &CMatrix4, f: impl Fn(f64) -> f64) -> CMatrix4 {
    let (values, vectors) = hermitian_eigen(m);
    let mapped = CMatrix4::from_diagonal(&values.map(|v| c(f(v), 0.0)));
    vectors * mapped * vectors.adjoint()
}

/// Square root of a positive semidefinite matrix; negative eigenvalues are clamped to zero.
pub fn psd_sqrt(m: &CMatrix4) -> CMatrix4 {
    spectral_map(m, |v| v.max(0.0).sqrt())
}

/// Partial transpose over the second (nuclear) factor.
pub fn partial_transpose_nuclear(m: &CMatrix4) -> CMatrix4 {
    // index = 2*e + n
    CMatrix4::from_fn(|r, col| {
        let (re, rn) = (r / 2, r % 2);
        let (ce, cn) = (col / 2, col % 2);
        m[(2 * re + cn, 2 * ce + rn)]
    })
}

/// Partial transpose over the first (electron) factor.
pub fn partial_transpose_electron(m: &CMatrix4) -> CMatrix4 {
    CMatrix4::from_fn(|r, col| {
        let (re, rn) = (r / 2, r % 2);
        let (ce, cn) = (col / 2, col % 2);
        m[(2 * ce + rn, 2 * re + cn)]
    })
}

pub fn max_abs_diff(a: &CMatrix4, b: &CMatrix4) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |U^dagger U - 1|` over all entries.
pub fn unitarity_defect(u: &CMatrix4) -> f64 {
    max_abs_diff(&(u.adjoint() * u), &CMatrix4::identity())
}

/// Rescales `m` by a unit-modulus factor so that its largest-magnitude entry is real and positive.
pub fn fix_global_phase(m: &CMatrix4) -> CMatrix4 {
    let pivot = m
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(ZERO);
    if pivot.norm() == 0.0 {
        return *m;
    }
    m * (pivot.conj() / pivot.norm())
}

/// Equality of two operators up to a single global phase.
pub fn equal_up_to_global_phase(a: &CMatrix4, b: &CMatrix4, tol: f64) -> bool {
    max_abs_diff(&fix_global_phase(a), &fix_global_phase(b)) <= tol
}

/// Pauli `sigma_y (x) sigma_y`, used by the spin-flip in the concurrence.
pub fn sigma_y_sigma_y() -> CMatrix4 {
    let mut m = CMatrix4::zeros();
    // sigma_y (x) sigma_y = antidiag(-1, 1, 1, -1)
    m[(0, 3)] = c(-1.0, 0.0);
    m[(1, 2)] = ONE;
    m[(2, 1)] = ONE;
    m[(3, 0)] = c(-1.0, 0.0);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CMatrix4 {
        CMatrix4::from_fn(|r, col| c((r * 4 + col) as f64, (r as f64) - (col as f64) * 0.5))
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let m = sample();
        assert_eq!(partial_transpose_nuclear(&partial_transpose_nuclear(&m)), m);
        assert_eq!(partial_transpose_electron(&partial_transpose_electron(&m)), m);
        // both partial transposes compose to the full transpose
        assert_eq!(
            partial_transpose_electron(&partial_transpose_nuclear(&m)),
            m.transpose()
        );
    }

    #[test]
    fn nuclear_partial_transpose_moves_double_quantum_element() {
        let mut m = CMatrix4::zeros();
        m[(0, 3)] = c(0.3, 0.1);
        let pt = partial_transpose_nuclear(&m);
        assert_eq!(pt[(1, 2)], c(0.3, 0.1));
        assert_eq!(pt[(0, 3)], ZERO);
    }

    #[test]
    fn eigen_sorted_and_reconstructs() {
        let m = hermitian_part(&sample());
        let (vals, vecs) = hermitian_eigen(&m);
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2] && vals[2] <= vals[3]);
        let rebuilt = vecs * CMatrix4::from_diagonal(&vals.map(|v| c(v, 0.0))) * vecs.adjoint();
        assert!(max_abs_diff(&rebuilt, &m) < 1e-10);
    }

    #[test]
    fn sqrt_squares_back() {
        let d = real_diagonal([0.1, 0.2, 0.3, 0.4]);
        let s = psd_sqrt(&d);
        assert!(max_abs_diff(&(s * s), &d) < 1e-14);
        // clamped negative eigenvalue
        let s = psd_sqrt(&real_diagonal([-1e-12, 0.5, 0.25, 0.25]));
        assert_eq!(s[(0, 0)].re, 0.0);
    }

    #[test]
    fn global_phase_comparison() {
        let m = sample();
        let rotated = m * Complex64::from_polar(1.0, 0.7);
        assert!(equal_up_to_global_phase(&m, &rotated, 1e-12));
        assert!(!equal_up_to_global_phase(&m, &m.transpose(), 1e-6));
    }
}
