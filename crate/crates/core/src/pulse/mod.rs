//! Pulse programs and their action on density matrices.
//!
//! Pulses are instantaneous ideal rotations; waits are population rate
//! equations on the electron transitions plus a coherence damping factor.

mod dsl;
mod engine;
mod op;
mod relax;
mod transition;
mod unitary;

pub use dsl::{format_sequence, parse_sequence};
pub use engine::{run_sequence, sequence_unitary};
pub use op::{PulseOp, PulseSequence, WaitDuration};
pub use relax::{relax_wait, AUTO_ANNIHILATION_T1E_MULTIPLE};
pub use transition::{Channel, TransitionId};
pub use unitary::{apply_unitary, geometric_phase_unitary, selective_rotation_unitary, UNITARITY_TOL};
