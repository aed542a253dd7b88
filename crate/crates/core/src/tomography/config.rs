use std::fmt;

use crate::spin::Level;
use crate::{Error, Result};

/// An upper-triangle coherence `|a><b|` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoherencePair {
    pub a: Level,
    pub b: Level,
}

impl CoherencePair {
    pub const ALL: [CoherencePair; 6] = [
        CoherencePair {
            a: Level::One,
            b: Level::Two,
        },
        CoherencePair {
            a: Level::One,
            b: Level::Three,
        },
        CoherencePair {
            a: Level::One,
            b: Level::Four,
        },
        CoherencePair {
            a: Level::Two,
            b: Level::Three,
        },
        CoherencePair {
            a: Level::Two,
            b: Level::Four,
        },
        CoherencePair {
            a: Level::Three,
            b: Level::Four,
        },
    ];

    pub fn new(a: Level, b: Level) -> Result<Self> {
        if a < b {
            Ok(CoherencePair { a, b })
        } else {
            Err(Error::Usage(format!(
                "coherence pair must be upper triangle, got ({}, {})",
                a.number(),
                b.number()
            )))
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.a.number(), self.b.number())
    }
}

impl fmt::Display for CoherencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}><{}|", self.a.number(), self.b.number())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TomographyConfig {
    /// Electron phase increment, cycles per shot.
    pub nu_phi: f64,
    /// Nuclear phase increment, cycles per shot.
    pub nu_sigma: f64,
    /// Shots per coherence trace; a power of two, at least 8.
    pub n_points: usize,
    /// Gaussian noise on each echo quadrature.
    pub noise_sigma: f64,
    pub seed: u64,
    /// Bins on each side of a peak included in its integral.
    pub peak_half_width: usize,
    /// Length of the noise-only trace whose mean is subtracted as baseline.
    pub baseline_samples: usize,
    /// Boltzmann ratio of the sample, which sets the thermal reference echo.
    pub sample_alpha: f64,
}

impl Default for TomographyConfig {
    fn default() -> Self {
        TomographyConfig {
            nu_phi: 0.05,
            nu_sigma: 0.03,
            n_points: 128,
            noise_sigma: 0.0,
            seed: 0,
            peak_half_width: 1,
            baseline_samples: 2000,
            sample_alpha: crate::constants::ALPHA_MEASURED,
        }
    }
}

/// Wraps a frequency into (-1/2, 1/2].
pub(crate) fn wrap(f: f64) -> f64 {
    let w = f - f.round();
    if w <= -0.5 {
        w + 1.0
    } else {
        w
    }
}

fn circular_distance(f: f64, g: f64) -> f64 {
    wrap(f - g).abs()
}

/// Phase-accumulation rate of `|a><b|` under the incremented phase gate,
/// `(theta_a - theta_b) / 2 pi` per shot with
/// `theta = 2 pi n (-nu_phi, 0, nu_phi + nu_sigma, -nu_sigma)`.
pub fn signature_frequency(pair: CoherencePair, config: &TomographyConfig) -> f64 {
    let theta = [-config.nu_phi, 0.0, config.nu_phi + config.nu_sigma, -config.nu_sigma];
    wrap(theta[pair.a.index()] - theta[pair.b.index()])
}

impl TomographyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_points < 8 || !self.n_points.is_power_of_two() {
            return Err(Error::Config(format!(
                "n_points must be a power of two >= 8, got {}",
                self.n_points
            )));
        }
        for (name, nu) in [("nu_phi", self.nu_phi), ("nu_sigma", self.nu_sigma)] {
            if !(nu > -0.5 && nu <= 0.5) {
                return Err(Error::Config(format!("{name} must lie in (-1/2, 1/2], got {nu}")));
            }
        }
        if !(self.noise_sigma.is_finite() && self.noise_sigma >= 0.0) {
            return Err(Error::Config(format!(
                "noise_sigma must be >= 0, got {}",
                self.noise_sigma
            )));
        }
        if self.baseline_samples == 0 {
            return Err(Error::Config("baseline_samples must be positive".into()));
        }
        if !(self.sample_alpha >= 0.0 && self.sample_alpha < 1.0) {
            return Err(Error::Config(format!(
                "sample_alpha must lie in [0, 1) for a non-zero thermal reference, got {}",
                self.sample_alpha
            )));
        }
        if 2 * self.peak_half_width + 1 >= self.n_points {
            return Err(Error::Config(
                "peak integration window covers the whole spectrum".into(),
            ));
        }
        let n = self.n_points as f64;
        let min_sep = (self.peak_half_width + 1) as f64 / n;
        for (i, p) in CoherencePair::ALL.iter().enumerate() {
            for q in &CoherencePair::ALL[i + 1..] {
                let (fp, fq) = (signature_frequency(*p, self), signature_frequency(*q, self));
                if circular_distance(fp, fq) < min_sep - 1e-12 {
                    return Err(Error::Config(format!(
                        "frequency clash: {p} at {fp:.4} and {q} at {fq:.4} are closer than {} bins at {} points",
                        self.peak_half_width + 1,
                        self.n_points
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_quantum_frequency() {
        let cfg = TomographyConfig::default();
        let f = signature_frequency(CoherencePair::new(Level::Two, Level::Three).unwrap(), &cfg);
        assert!((f + 0.08).abs() < 1e-15);
    }

    #[test]
    fn default_signatures_are_distinct() {
        // enumerated by hand from theta = (-phi, 0, phi + sigma, -sigma)
        let cfg = TomographyConfig::default();
        let expected = [-0.05, -0.13, -0.02, -0.08, 0.03, 0.11];
        for (p, want) in CoherencePair::ALL.iter().zip(expected) {
            assert!((signature_frequency(*p, &cfg) - want).abs() < 1e-15, "{p}");
        }
        cfg.validate().unwrap();
    }

    #[test]
    fn zero_increments_give_zero_frequencies_and_clash() {
        let cfg = TomographyConfig {
            nu_phi: 0.0,
            nu_sigma: 0.0,
            ..Default::default()
        };
        for p in CoherencePair::ALL {
            assert_eq!(signature_frequency(p, &cfg), 0.0);
        }
        assert!(matches!(cfg.validate(), Err(Error::Config(m)) if m.contains("clash")));
    }

    #[test]
    fn validator_rejects_collisions_and_bad_shapes() {
        // theta_3 = theta_4 here, so |1><3| and |1><4| coincide
        let clash = TomographyConfig {
            nu_phi: 0.04,
            nu_sigma: -0.02,
            ..Default::default()
        };
        assert!(clash.validate().is_err());
        assert!(TomographyConfig {
            n_points: 100,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(TomographyConfig {
            n_points: 4,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(TomographyConfig {
            nu_phi: 0.6,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(TomographyConfig {
            nu_phi: -0.5,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(TomographyConfig {
            sample_alpha: 1.0,
            ..Default::default()
        }
        .validate()
        .is_err());
    }

    #[test]
    fn aliasing_wraps() {
        assert!((wrap(0.6) + 0.4).abs() < 1e-15);
        assert_eq!(wrap(0.5), 0.5);
        assert_eq!(wrap(-0.5), 0.5);
        let cfg = TomographyConfig {
            nu_phi: 0.3,
            nu_sigma: 0.1,
            ..Default::default()
        };
        // (1,3): -(0.6 + 0.1) wraps to 0.3
        let f = signature_frequency(CoherencePair::new(Level::One, Level::Three).unwrap(), &cfg);
        assert!((f - 0.3).abs() < 1e-12);
    }
}
