use crate::constants::*;
use crate::{Error, Result};

/// Physical constants of the sample and the experimental conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Electron g-factor.
    pub g: f64,
    /// Nuclear g-factor.
    pub g_nuclear: f64,
    /// Hyperfine coupling as an angular frequency (rad/s).
    pub hyperfine: f64,
    /// Magnetic field, tesla.
    pub field: f64,
    /// Temperature, kelvin. `f64::INFINITY` is accepted.
    pub temperature: f64,
    /// Electron longitudinal relaxation time, seconds.
    pub t1e: f64,
    /// Nuclear longitudinal relaxation time, seconds.
    pub t1n: f64,
    /// Effective coherence lifetime used by short relaxation waits, seconds.
    pub t2_eff: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self::silicon_phosphorus(FIELD_TESLA, TEMPERATURE_KELVIN)
    }
}

impl SystemParams {
    /// Si:P at the given field and temperature.
    pub fn silicon_phosphorus(field: f64, temperature: f64) -> Self {
        SystemParams {
            g: G_ELECTRON_SI_P,
            g_nuclear: G_NUCLEAR_P31,
            hyperfine: Self::hyperfine_from_millitesla(G_ELECTRON_SI_P, HYPERFINE_SI_P_MT),
            field,
            temperature,
            t1e: T1E_SECONDS,
            t1n: T1N_SECONDS,
            t2_eff: T1E_SECONDS,
        }
    }

    /// Si:P at the reference field, with the temperature chosen so that the
    /// Boltzmann ratio equals `alpha`. `alpha = 1` maps to infinite temperature.
    pub fn at_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        let mut p = Self::default();
        p.temperature = if alpha == 1.0 {
            f64::INFINITY
        } else {
            p.g * BOHR_MAGNETON * p.field / (BOLTZMANN * -alpha.ln())
        };
        Ok(p)
    }

    /// Converts a hyperfine splitting quoted in field units to rad/s.
    pub fn hyperfine_from_millitesla(g: f64, millitesla: f64) -> f64 {
        g * BOHR_MAGNETON * millitesla * 1e-3 / HBAR
    }

    pub fn validate(&self) -> Result<()> {
        let finite_positive = [
            ("g", self.g),
            ("g_nuclear", self.g_nuclear),
            ("field", self.field),
            ("t1e", self.t1e),
            ("t1n", self.t1n),
            ("t2_eff", self.t2_eff),
        ];
        for (name, v) in finite_positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be finite and positive, got {v}")));
            }
        }
        if !(self.temperature > 0.0) {
            return Err(Error::Domain(format!(
                "temperature must be positive, got {}",
                self.temperature
            )));
        }
        if !(self.hyperfine.is_finite() && self.hyperfine >= 0.0) {
            return Err(Error::Domain(format!(
                "hyperfine must be non-negative, got {}",
                self.hyperfine
            )));
        }
        if self.t1n <= self.t1e {
            return Err(Error::Domain(format!(
                "nuclear T1 ({}) must exceed electron T1 ({})",
                self.t1n, self.t1e
            )));
        }
        Ok(())
    }

    /// Electron Zeeman angular frequency, rad/s.
    pub fn omega_electron(&self) -> f64 {
        self.g * BOHR_MAGNETON * self.field / HBAR
    }

    /// Nuclear Zeeman angular frequency, rad/s.
    pub fn omega_nuclear(&self) -> f64 {
        self.g_nuclear * NUCLEAR_MAGNETON * self.field / HBAR
    }
}

/// Boltzmann population ratio `exp(-g muB B / kB T)` across the electron Zeeman splitting.
pub fn alpha_from_params(params: &SystemParams) -> Result<f64> {
    params.validate()?;
    Ok((-params.g * BOHR_MAGNETON * params.field / (BOLTZMANN * params.temperature)).exp())
}

/// Thermal electron polarisation `(1 - alpha) / (1 + alpha)`.
pub fn electron_polarisation(alpha: f64) -> f64 {
    (1.0 - alpha) / (1.0 + alpha)
}
