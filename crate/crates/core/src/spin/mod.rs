//! Four-level basis, physical parameters and the closed-form states of the
//! electron-nuclear pair.

mod density;
mod hamiltonian;
mod level;
mod params;
mod states;

pub use density::{DensityMatrix, HERMITICITY_TOL, PSD_TOL, TRACE_TOL};
pub use hamiltonian::{build_hamiltonian, Hamiltonian};
pub use level::Level;
pub use params::{alpha_from_params, electron_polarisation, SystemParams};
pub use states::{
    hyperpolarised_state, optimal_entangled_form, pseudopure_state, target_entangled_state, thermal_state,
    werner_mixture, PseudopureSource, Strategy,
};
