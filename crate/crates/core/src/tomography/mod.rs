//! Phase-labelled density-matrix tomography.
//!
//! Populations come from electron echoes after permuting pi pulses. Each
//! coherence is tagged by incrementing the geometric phase gate shot by shot,
//! mapped onto the observable 1-3 coherence, and read back as a Fourier peak
//! at its signature frequency. The identity component is restored from the
//! spin-temperature estimate of alpha.

mod config;
mod fourier;
mod mapping;
mod populations;
mod protocol;
mod reconstruct;
mod signal;

pub use config::{signature_frequency, CoherencePair, TomographyConfig};
pub use fourier::{fourier_peak, peak_noise_std, spectrum, spectrum_csv};
pub use mapping::{mapping_phase, mapping_sequence};
pub use populations::{
    default_population_design, measure_population_differences, measure_population_differences_with, PopulationEstimate,
};
pub use protocol::{
    measure_spin_temperature, rng_stream, run_tomography, simulate_spin_temperature, simulate_tomography, TomographyRun,
};
pub use reconstruct::{reconstruct_full, Coherence, ReconstructionResult};
pub use signal::{label_and_record, labelled_state, measure_echo, readout_population_difference, SignalTrace};
