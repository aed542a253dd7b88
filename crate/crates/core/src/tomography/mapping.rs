use std::f64::consts::PI;

use num_complex::Complex64;

use crate::linalg::CMatrix4;
use crate::pulse::{sequence_unitary, PulseOp, PulseSequence, TransitionId};
use crate::spin::Level;
use crate::tomography::CoherencePair;
use crate::{Error, Result};

const MAPPING_TOL: f64 = 1e-10;

/// Pi-pulse program carrying `|a><b|` onto `|3><1|`, so the coherence
/// appears in the 1-3 echo.
pub fn mapping_sequence(pair: CoherencePair) -> PulseSequence {
    use TransitionId::*;
    let steps: &[TransitionId] = match (pair.a, pair.b) {
        (Level::One, Level::Two) => &[E13, N12],
        (Level::One, Level::Three) => &[E13],
        (Level::One, Level::Four) => &[N34, E13],
        (Level::Two, Level::Three) => &[E13, E24, N34],
        (Level::Two, Level::Four) => &[E24, N12, N34],
        (Level::Three, Level::Four) => &[E24, N12],
        _ => unreachable!("CoherencePair is upper triangle"),
    };
    PulseSequence::named(
        format!("map {}", pair.label()),
        steps.iter().map(|&t| PulseOp::rotation(t, PI, 0.0)).collect(),
    )
}

pub(crate) fn check_mapping(m: &CMatrix4, pair: CoherencePair) -> Result<Complex64> {
    let ca = m[(2, pair.a.index())];
    let cb = m[(0, pair.b.index())];
    if (ca.norm() - 1.0).abs() > MAPPING_TOL || (cb.norm() - 1.0).abs() > MAPPING_TOL {
        return Err(Error::Config(format!(
            "mapping does not carry {pair} onto |3><1| (amplitudes {:.3}, {:.3})",
            ca.norm(),
            cb.norm()
        )));
    }
    Ok(ca * cb.conj())
}

/// Phase picked up by `|a><b|` under `mapping`; the echo reads `phase * rho_ab`.
pub fn mapping_phase(pair: CoherencePair, mapping: &PulseSequence) -> Result<Complex64> {
    check_mapping(&sequence_unitary(mapping)?, pair)
}
