use std::f64::consts::{FRAC_PI_2, PI};
use std::io::Write;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::linalg::{c, CMatrix4};
use crate::pulse::{apply_unitary, geometric_phase_unitary, selective_rotation_unitary, sequence_unitary};
use crate::pulse::{PulseSequence, TransitionId};
use crate::spin::DensityMatrix;
use crate::tomography::mapping::check_mapping;
use crate::tomography::{CoherencePair, TomographyConfig};
use crate::{Error, Result};

/// Complex echo record, one entry per shot.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalTrace {
    pub pair: Option<CoherencePair>,
    pub samples: Vec<Complex64>,
    /// Mean of the noise-only baseline record.
    pub baseline: Complex64,
}

impl SignalTrace {
    pub fn new(pair: Option<CoherencePair>, samples: Vec<Complex64>) -> Result<Self> {
        if samples.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Validation("signal trace contains non-finite samples".into()));
        }
        Ok(SignalTrace {
            pair,
            samples,
            baseline: Complex64::new(0.0, 0.0),
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "n,re,im")?;
        for (n, z) in self.samples.iter().enumerate() {
            writeln!(out, "{n},{:.17e},{:.17e}", z.re, z.im)?;
        }
        Ok(())
    }
}

pub(crate) fn gaussian_pair<R: Rng + ?Sized>(sigma: f64, rng: &mut R) -> Complex64 {
    if sigma == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let normal = Normal::new(0.0, sigma).expect("sigma is finite and non-negative");
    Complex64::new(normal.sample(rng), normal.sample(rng))
}

/// Ensemble echo on an electron transition: the coherence `rho[d][u]`
/// between its lower and upper level, plus quadrature noise. The state is
/// not collapsed.
pub fn measure_echo<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    transition: TransitionId,
    noise_sigma: f64,
    rng: &mut R,
) -> Result<Complex64> {
    if !transition.is_electron() {
        return Err(Error::Usage(format!(
            "only electron transitions produce an echo, got {transition}"
        )));
    }
    if !(noise_sigma.is_finite() && noise_sigma >= 0.0) {
        return Err(Error::Domain(format!("noise_sigma must be >= 0, got {noise_sigma}")));
    }
    let (lo, hi) = transition.levels();
    Ok(rho.matrix()[(hi.index(), lo.index())] + gaussian_pair(noise_sigma, rng))
}

/// p1 - p3 of `rho`, read as twice the in-phase echo after a pi/2 pulse on 1-3.
pub fn readout_population_difference<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    noise_sigma: f64,
    rng: &mut R,
) -> Result<f64> {
    let u = selective_rotation_unitary(TransitionId::E13, FRAC_PI_2, FRAC_PI_2);
    let read = apply_unitary(rho, &u)?;
    Ok(2.0 * measure_echo(&read, TransitionId::E13, noise_sigma, rng)?.re)
}

/// State after the phase gate for shot `n`.
pub fn labelled_state(rho: &DensityMatrix, n: usize, config: &TomographyConfig) -> Result<DensityMatrix> {
    let phi = 2.0 * PI * config.nu_phi * n as f64;
    let sigma = 2.0 * PI * config.nu_sigma * n as f64;
    apply_unitary(rho, &geometric_phase_unitary(phi, sigma))
}

/// Phase-labelled coherence trace for `pair`, read through `mapping`.
pub fn label_and_record<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    pair: CoherencePair,
    config: &TomographyConfig,
    mapping: &PulseSequence,
    rng: &mut R,
) -> Result<SignalTrace> {
    config.validate()?;
    let m: CMatrix4 = sequence_unitary(mapping)?;
    check_mapping(&m, pair)?;
    let mut samples = Vec::with_capacity(config.n_points);
    for n in 0..config.n_points {
        let labelled = labelled_state(rho, n, config)?;
        let mapped = apply_unitary(&labelled, &m)?;
        samples.push(measure_echo(&mapped, TransitionId::E13, config.noise_sigma, rng)?);
    }
    let mut trace = SignalTrace::new(Some(pair), samples)?;
    let mut sum = c(0.0, 0.0);
    for _ in 0..config.baseline_samples {
        sum += gaussian_pair(config.noise_sigma, rng);
    }
    trace.baseline = sum / config.baseline_samples as f64;
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{hyperpolarised_state, target_entangled_state, Level};
    use crate::tomography::{mapping_sequence, signature_frequency};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn echo_reads_lower_left_element() {
        let mut m = DensityMatrix::maximally_mixed().into_matrix();
        m[(2, 0)] = c(0.25, 0.0);
        m[(0, 2)] = c(0.25, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        let z = measure_echo(&rho, TransitionId::E13, 0.0, &mut rng()).unwrap();
        assert_eq!(z, c(0.25, 0.0));
        let diag = hyperpolarised_state(0.3).unwrap();
        assert_eq!(
            measure_echo(&diag, TransitionId::E24, 0.0, &mut rng()).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn nuclear_echo_is_rejected() {
        let rho = DensityMatrix::maximally_mixed();
        assert!(matches!(
            measure_echo(&rho, TransitionId::N34, 0.0, &mut rng()),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn echo_noise_has_requested_spread() {
        let rho = DensityMatrix::maximally_mixed();
        let mut r = rng();
        let draws: Vec<f64> = (0..1000)
            .map(|_| measure_echo(&rho, TransitionId::E13, 0.05, &mut r).unwrap().re)
            .collect();
        let mean = draws.iter().sum::<f64>() / 1000.0;
        let sd = (draws.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 999.0).sqrt();
        assert!((sd / 0.05 - 1.0).abs() < 0.2, "{sd}");
    }

    #[test]
    fn readout_gives_population_difference() {
        let rho = hyperpolarised_state(0.217).unwrap();
        let p = rho.populations();
        let d = readout_population_difference(&rho, 0.0, &mut rng()).unwrap();
        assert!((d - (p[0] - p[2])).abs() < 1e-14);
    }

    #[test]
    fn labelling_keeps_populations() {
        let rho = target_entangled_state(0.217).unwrap();
        let cfg = TomographyConfig::default();
        for n in 0..cfg.n_points {
            let l = labelled_state(&rho, n, &cfg).unwrap();
            for k in 0..4 {
                assert!((l.populations()[k] - rho.populations()[k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn one_four_trace_oscillates_at_its_signature() {
        let rho = target_entangled_state(0.217).unwrap();
        let cfg = TomographyConfig::default();
        let pair = CoherencePair::new(Level::One, Level::Four).unwrap();
        let trace = label_and_record(&rho, pair, &cfg, &mapping_sequence(pair), &mut rng()).unwrap();
        let f = signature_frequency(pair, &cfg);
        let z0 = trace.samples[0];
        assert!((z0.norm() - 0.2643).abs() < 1e-4, "{}", z0.norm());
        for (n, z) in trace.samples.iter().enumerate() {
            let expected = z0 * Complex64::from_polar(1.0, 2.0 * PI * f * n as f64);
            assert!((z - expected).norm() < 1e-12);
        }
    }

    #[test]
    fn diagonal_state_gives_silent_trace() {
        let rho = hyperpolarised_state(0.217).unwrap();
        let cfg = TomographyConfig::default();
        for pair in CoherencePair::ALL {
            let t = label_and_record(&rho, pair, &cfg, &mapping_sequence(pair), &mut rng()).unwrap();
            assert!(t.samples.iter().all(|z| z.norm() < 1e-15));
        }
    }

    #[test]
    fn wrong_mapping_is_a_config_error() {
        let rho = DensityMatrix::maximally_mixed();
        let cfg = TomographyConfig::default();
        let pair = CoherencePair::new(Level::Two, Level::Three).unwrap();
        let wrong = mapping_sequence(CoherencePair::new(Level::One, Level::Three).unwrap());
        assert!(matches!(
            label_and_record(&rho, pair, &cfg, &wrong, &mut rng()),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn csv_header() {
        let t = SignalTrace::new(None, vec![c(1.0, -2.0)]).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("n,re,im\n0,"));
    }
}
