use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::metrics::alpha_from_enhancement;
use crate::spin::{hyperpolarised_state, thermal_state, DensityMatrix};
use crate::tomography::{
    fourier_peak, label_and_record, mapping_phase, mapping_sequence, measure_population_differences, peak_noise_std,
    readout_population_difference, reconstruct_full, signature_frequency, Coherence, CoherencePair, PopulationEstimate,
    ReconstructionResult, SignalTrace, TomographyConfig,
};
use crate::{Error, Result};

/// Independent generator for one acquisition within a run.
pub fn rng_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

const POPULATION_STREAM: u64 = 0;
const SPIN_TEMPERATURE_STREAM: u64 = 1;
const FIRST_COHERENCE_STREAM: u64 = 2;

/// Alpha from the 1-3 echo before and after hyperpolarisation. Imperfect
/// pumping only lowers the enhancement, so this is an upper bound.
pub fn measure_spin_temperature(before: f64, after: f64) -> Result<f64> {
    if !(before.is_finite() && before > 0.0) {
        return Err(Error::Domain(format!("reference echo must be positive, got {before}")));
    }
    let e = after / before;
    if e == 1.0 {
        return Ok(1.0);
    }
    alpha_from_enhancement(e).map_err(|_| Error::OutOfModel(format!("echo enhancement {e:.4} lies outside (1, 2]")))
}

/// Simulated spin-temperature measurement on a sample with Boltzmann ratio `sample_alpha`.
pub fn simulate_spin_temperature(sample_alpha: f64, noise_sigma: f64, rng: &mut ChaCha8Rng) -> Result<f64> {
    let before = -readout_population_difference(&thermal_state(sample_alpha)?, noise_sigma, rng)?;
    let after = -readout_population_difference(&hyperpolarised_state(sample_alpha)?, noise_sigma, rng)?;
    measure_spin_temperature(before, after)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TomographyRun {
    pub result: ReconstructionResult,
    /// Measured diagonal of the input, before pseudo-pure scaling.
    pub populations: PopulationEstimate,
    /// One per coherence pair, in `CoherencePair::ALL` order.
    pub traces: Vec<SignalTrace>,
    /// Spin-temperature value when alpha was measured rather than supplied.
    pub alpha_measured: Option<f64>,
}

/// Full protocol: populations, six labelled coherence traces, Fourier
/// peaks, and reconstruction. Signals are scaled to the pseudo-pure frame by
/// a noiseless thermal reference echo of the sample. `alpha_estimate = None`
/// measures alpha by spin temperature.
pub fn run_tomography(
    rho: &DensityMatrix,
    config: &TomographyConfig,
    alpha_estimate: Option<f64>,
) -> Result<TomographyRun> {
    config.validate()?;
    let mut silent = rng_stream(config.seed, u64::MAX);
    let reference = -readout_population_difference(&thermal_state(config.sample_alpha)?, 0.0, &mut silent)?;
    // deviation scale of the sample relative to a pure state
    let scale = 2.0 * reference;

    let measured =
        measure_population_differences(rho, config.noise_sigma, &mut rng_stream(config.seed, POPULATION_STREAM))?;
    let mut pp = measured;
    for k in 0..4 {
        pp.populations[k] = 0.25 + (measured.populations[k] - 0.25) / scale;
        pp.std[k] = measured.std[k] / scale;
    }
    // the four estimates are renormalised so rounding cannot break the trace
    let drift = pp.populations.iter().sum::<f64>() - 1.0;
    pp.populations.iter_mut().for_each(|p| *p -= drift / 4.0);

    let (alpha, alpha_measured) = match alpha_estimate {
        Some(a) => (a, None),
        None => {
            let mut rng = rng_stream(config.seed, SPIN_TEMPERATURE_STREAM);
            let a = simulate_spin_temperature(config.sample_alpha, config.noise_sigma, &mut rng)?;
            (a, Some(a))
        }
    };

    let mut traces = Vec::with_capacity(6);
    let mut coherences = Vec::with_capacity(6);
    for (i, pair) in CoherencePair::ALL.into_iter().enumerate() {
        let mapping = mapping_sequence(pair);
        let phase = mapping_phase(pair, &mapping)?;
        let mut rng = rng_stream(config.seed, FIRST_COHERENCE_STREAM + i as u64);
        let trace = label_and_record(rho, pair, config, &mapping, &mut rng)?;
        let f = signature_frequency(pair, config);
        let peak = fourier_peak(&trace, f, config.peak_half_width)? / phase;
        let std = peak_noise_std(
            config.noise_sigma,
            config.n_points,
            config.baseline_samples,
            f,
            config.peak_half_width,
        );
        coherences.push(Coherence {
            pair,
            value: peak / scale,
            std: std / scale,
        });
        traces.push(trace);
    }

    let result = reconstruct_full(&pp, &coherences, alpha)?;
    Ok(TomographyRun {
        result,
        populations: measured,
        traces,
        alpha_measured,
    })
}

pub fn simulate_tomography(
    rho: &DensityMatrix,
    config: &TomographyConfig,
    alpha_estimate: Option<f64>,
) -> Result<ReconstructionResult> {
    run_tomography(rho, config, alpha_estimate).map(|run| run.result)
}
