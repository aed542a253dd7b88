use std::fmt;

use num_complex::Complex64;

use crate::linalg::{self, c, CMatrix4};
use crate::spin::Level;
use crate::{Error, Result};

/// Maximum element-wise deviation from Hermiticity.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Maximum deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-9;
/// Most negative eigenvalue still treated as positive semidefinite.
pub const PSD_TOL: f64 = -1e-8;

/// A validated state of the spin pair: 4x4, Hermitian, unit trace, PSD.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix(CMatrix4);

impl DensityMatrix {
    pub fn new(m: CMatrix4) -> Result<Self> {
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidState("non-finite entry".into()));
        }
        let herm = linalg::max_abs_diff(&m, &m.adjoint());
        if herm > HERMITICITY_TOL {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {herm:.3e})")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min = linalg::min_eigenvalue(&m);
        if min < PSD_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:.3e}")));
        }
        Ok(DensityMatrix(m))
    }

    /// Builds from separate real and imaginary 4x4 parts (row-major).
    pub fn from_parts(re: &[[f64; 4]; 4], im: &[[f64; 4]; 4]) -> Result<Self> {
        Self::new(CMatrix4::from_fn(|r, col| c(re[r][col], im[r][col])))
    }

    /// Used by constructors whose algebra guarantees the invariants.
    pub(crate) fn from_trusted(m: CMatrix4) -> Self {
        debug_assert!(Self::new(m).is_ok(), "{m}");
        DensityMatrix(m)
    }

    pub fn diagonal(populations: [f64; 4]) -> Result<Self> {
        Self::new(linalg::real_diagonal(populations))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(linalg::real_diagonal([0.25; 4]))
    }

    /// `|l><l|`.
    pub fn basis_state(level: Level) -> Self {
        let mut p = [0.0; 4];
        p[level.index()] = 1.0;
        DensityMatrix(linalg::real_diagonal(p))
    }

    /// `(|1> + |4>)(<1| + <4|) / 2`.
    pub fn bell() -> Self {
        let mut m = CMatrix4::zeros();
        for (r, col) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            m[(r, col)] = c(0.5, 0.0);
        }
        DensityMatrix(m)
    }

    /// Clamps negative eigenvalues to zero and restores unit trace.
    ///
    /// The input only needs to be Hermitian with positive trace.
    pub fn nearest_physical(m: &CMatrix4) -> Result<Self> {
        let clamped = linalg::spectral_map(m, |v| v.max(0.0));
        let tr = clamped.trace().re;
        if !(tr > 0.0) {
            return Err(Error::InvalidState("no positive spectral weight to renormalise".into()));
        }
        let out = linalg::hermitian_part(&(clamped / c(tr, 0.0)));
        Self::new(out)
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix4 {
        self.0
    }

    pub fn element(&self, row: Level, col: Level) -> Complex64 {
        self.0[(row.index(), col.index())]
    }

    pub fn populations(&self) -> [f64; 4] {
        [
            self.0[(0, 0)].re,
            self.0[(1, 1)].re,
            self.0[(2, 2)].re,
            self.0[(3, 3)].re,
        ]
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        let v = linalg::hermitian_eigenvalues(&self.0);
        [v[0], v[1], v[2], v[3]]
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        (0..4).all(|r| (0..4).all(|col| r == col || self.0[(r, col)].norm() <= tol))
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        linalg::max_abs_diff(&self.0, &other.0)
    }

    pub fn real_part(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|col| self.0[(r, col)].re))
    }

    pub fn imag_part(&self) -> [[f64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|col| self.0[(r, col)].im))
    }
}

impl fmt::Display for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..4 {
            for col in 0..4 {
                let z = self.0[(r, col)];
                write!(f, "{:>8.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
