use crate::constants::{MW_PI_PULSE_SECONDS, RF_PI_PULSE_SECONDS};
use crate::pulse::{Channel, TransitionId};
use crate::spin::SystemParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WaitDuration {
    Seconds(f64),
    /// Multiples of the electron T1.
    T1e(f64),
}

impl WaitDuration {
    pub fn seconds(self, params: &SystemParams) -> f64 {
        match self {
            WaitDuration::Seconds(s) => s,
            WaitDuration::T1e(k) => k * params.t1e,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PulseOp {
    SelectiveRotation {
        transition: TransitionId,
        angle: f64,
        phase: f64,
    },
    GeometricPhaseGate {
        phi: f64,
        sigma: f64,
    },
    Wait {
        duration: WaitDuration,
        /// Explicit off-diagonal damping factor; `None` selects the automatic rule.
        coherence_decay: Option<f64>,
    },
}

impl PulseOp {
    pub fn rotation(transition: TransitionId, angle: f64, phase: f64) -> Self {
        PulseOp::SelectiveRotation {
            transition,
            angle,
            phase,
        }
    }

    pub fn wait_t1e(multiple: f64) -> Self {
        PulseOp::Wait {
            duration: WaitDuration::T1e(multiple),
            coherence_decay: None,
        }
    }

    /// Nominal length on the spectrometer. Pulses act instantaneously in the
    /// simulation; this is schedule metadata only.
    pub fn nominal_duration(&self, params: &SystemParams) -> f64 {
        let pi_length = |ch: Channel| match ch {
            Channel::Mw => MW_PI_PULSE_SECONDS,
            Channel::Rf => RF_PI_PULSE_SECONDS,
        };
        match *self {
            PulseOp::SelectiveRotation { transition, angle, .. } => {
                pi_length(transition.channel()) * angle.abs() / std::f64::consts::PI
            }
            PulseOp::GeometricPhaseGate { .. } => 2.0 * (MW_PI_PULSE_SECONDS + RF_PI_PULSE_SECONDS),
            PulseOp::Wait { duration, .. } => duration.seconds(params),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PulseSequence {
    pub name: Option<String>,
    pub ops: Vec<PulseOp>,
}

impl PulseSequence {
    pub fn new(ops: Vec<PulseOp>) -> Self {
        PulseSequence { name: None, ops }
    }

    pub fn named(name: impl Into<String>, ops: Vec<PulseOp>) -> Self {
        PulseSequence {
            name: Some(name.into()),
            ops,
        }
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Start time and nominal length of every op, seconds.
    pub fn schedule(&self, params: &SystemParams) -> Vec<(f64, f64)> {
        let mut t = 0.0;
        self.ops
            .iter()
            .map(|op| {
                let d = op.nominal_duration(params);
                let slot = (t, d);
                t += d;
                slot
            })
            .collect()
    }

    /// SWAP-like electron/nuclear pi pair followed by a wait of `t1e_multiple` electron T1s.
    pub fn hyperpolarisation(t1e_multiple: f64) -> Self {
        PulseSequence::named(
            "hyperpolarise",
            vec![
                PulseOp::rotation(TransitionId::E13, std::f64::consts::PI, 0.0),
                PulseOp::rotation(TransitionId::N34, std::f64::consts::PI, 0.0),
                PulseOp::wait_t1e(t1e_multiple),
            ],
        )
    }

    /// Coherence-generating pi/2 on 1-3 followed by a pi on 3-4.
    ///
    /// The two pulse phases are equal, which leaves the (1,4) coherence real and
    /// positive under the rotation convention of [`super::selective_rotation_unitary`].
    pub fn entangling() -> Self {
        use std::f64::consts::{FRAC_PI_2, PI};
        PulseSequence::named(
            "entangle",
            vec![
                PulseOp::rotation(TransitionId::E13, FRAC_PI_2, FRAC_PI_2),
                PulseOp::rotation(TransitionId::N34, PI, FRAC_PI_2),
            ],
        )
    }
}
