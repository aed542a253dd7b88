use std::fmt;

use crate::spin::Level;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    /// Microwave: electron-selective transitions.
    Mw,
    /// Radiofrequency: nuclear-selective transitions.
    Rf,
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Channel::Mw => "MW",
            Channel::Rf => "RF",
        })
    }
}

/// One of the four addressable two-level transitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransitionId {
    E13,
    E24,
    N34,
    N12,
}

impl TransitionId {
    pub const ALL: [TransitionId; 4] = [
        TransitionId::E13,
        TransitionId::E24,
        TransitionId::N34,
        TransitionId::N12,
    ];

    pub fn channel(self) -> Channel {
        match self {
            TransitionId::E13 | TransitionId::E24 => Channel::Mw,
            TransitionId::N34 | TransitionId::N12 => Channel::Rf,
        }
    }

    pub fn is_electron(self) -> bool {
        self.channel() == Channel::Mw
    }

    /// Levels ordered as (pseudo-spin up, pseudo-spin down).
    ///
    /// "Up" is the higher-energy level at the reference field. For the nuclear
    /// pair 3-4 that is level 4, which makes the pi_0 / -pi_sigma pair imprint
    /// `+sigma` on |3> and `-sigma` on |4>.
    pub fn pseudo_spin(self) -> (Level, Level) {
        match self {
            TransitionId::E13 => (Level::One, Level::Three),
            TransitionId::E24 => (Level::Two, Level::Four),
            TransitionId::N34 => (Level::Four, Level::Three),
            TransitionId::N12 => (Level::One, Level::Two),
        }
    }

    /// Levels in ascending label order, e.g. `(1, 3)`.
    pub fn levels(self) -> (Level, Level) {
        let (a, b) = self.pseudo_spin();
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn from_levels(a: usize, b: usize) -> Option<TransitionId> {
        match (a.min(b), a.max(b)) {
            (1, 3) => Some(TransitionId::E13),
            (2, 4) => Some(TransitionId::E24),
            (3, 4) => Some(TransitionId::N34),
            (1, 2) => Some(TransitionId::N12),
            _ => None,
        }
    }
}

impl fmt::Display for TransitionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.levels();
        write!(f, "{}-{}", a.number(), b.number())
    }
}
