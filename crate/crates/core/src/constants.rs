//! Physical constants (CODATA 2018) and the sample values used throughout.

/// Bohr magneton, J/T.
pub const BOHR_MAGNETON: f64 = 9.274_010_078_3e-24;
/// Nuclear magneton, J/T.
pub const NUCLEAR_MAGNETON: f64 = 5.050_783_746_1e-27;
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Electron g-factor of the phosphorus donor in silicon.
pub const G_ELECTRON_SI_P: f64 = 1.9987;
/// Nuclear g-factor of 31P.
pub const G_NUCLEAR_P31: f64 = 2.2632;
/// Isotropic hyperfine coupling of Si:P, millitesla.
pub const HYPERFINE_SI_P_MT: f64 = 4.19;

/// Field and temperature of the reference experiment.
pub const FIELD_TESLA: f64 = 3.36;
pub const TEMPERATURE_KELVIN: f64 = 2.9;
/// Electron and nuclear longitudinal relaxation times, seconds.
pub const T1E_SECONDS: f64 = 0.6;
pub const T1N_SECONDS: f64 = 100.0;

/// Upper bound on the Boltzmann ratio obtained from the spin-temperature measurement.
pub const ALPHA_MEASURED: f64 = 0.217;

/// Nominal pulse lengths for a pi rotation.
pub const MW_PI_PULSE_SECONDS: f64 = 56e-9;
pub const RF_PI_PULSE_SECONDS: f64 = 100e-6;
