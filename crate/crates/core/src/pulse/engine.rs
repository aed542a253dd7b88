use crate::linalg::CMatrix4;
use crate::pulse::{
    apply_unitary, geometric_phase_unitary, relax_wait, selective_rotation_unitary, PulseOp, PulseSequence,
};
use crate::spin::{DensityMatrix, SystemParams};
use crate::{Error, Result};

/// Applies each op of `sequence` to `rho0`, left to right.
pub fn run_sequence(rho0: &DensityMatrix, sequence: &PulseSequence, params: &SystemParams) -> Result<DensityMatrix> {
    if sequence.is_empty() {
        return Err(Error::Usage("cannot execute an empty pulse sequence".into()));
    }
    sequence.ops.iter().try_fold(*rho0, |rho, op| match *op {
        PulseOp::SelectiveRotation {
            transition,
            angle,
            phase,
        } => {
            if !angle.is_finite() || !phase.is_finite() {
                return Err(Error::Domain(format!(
                    "non-finite rotation angle {angle} or phase {phase}"
                )));
            }
            apply_unitary(&rho, &selective_rotation_unitary(transition, angle, phase))
        }
        PulseOp::GeometricPhaseGate { phi, sigma } => apply_unitary(&rho, &geometric_phase_unitary(phi, sigma)),
        PulseOp::Wait {
            duration,
            coherence_decay,
        } => relax_wait(&rho, duration.seconds(params), params, coherence_decay),
    })
}

/// Product of the unitaries of a pulse-only sequence (first op rightmost).
pub fn sequence_unitary(sequence: &PulseSequence) -> Result<CMatrix4> {
    sequence.ops.iter().try_fold(CMatrix4::identity(), |acc, op| match *op {
        PulseOp::SelectiveRotation {
            transition,
            angle,
            phase,
        } => Ok(selective_rotation_unitary(transition, angle, phase) * acc),
        PulseOp::GeometricPhaseGate { phi, sigma } => Ok(geometric_phase_unitary(phi, sigma) * acc),
        PulseOp::Wait { .. } => Err(Error::Usage("a sequence containing waits has no single unitary".into())),
    })
}
