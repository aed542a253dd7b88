use std::fmt;

/// One of the four product states, numbered 1..=4.
///
/// Levels 1 and 2 carry the electron spin up (higher Zeeman energy), levels
/// 3 and 4 the electron spin down. Odd levels carry the nuclear spin up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    One,
    Two,
    Three,
    Four,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::One, Level::Two, Level::Three, Level::Four];

    pub fn from_number(n: usize) -> Option<Level> {
        match n {
            1 => Some(Level::One),
            2 => Some(Level::Two),
            3 => Some(Level::Three),
            4 => Some(Level::Four),
            _ => None,
        }
    }

    /// 1-based label.
    pub fn number(self) -> usize {
        self.index() + 1
    }

    /// 0-based matrix index.
    pub fn index(self) -> usize {
        match self {
            Level::One => 0,
            Level::Two => 1,
            Level::Three => 2,
            Level::Four => 3,
        }
    }

    pub fn electron_up(self) -> bool {
        matches!(self, Level::One | Level::Two)
    }

    pub fn nuclear_up(self) -> bool {
        matches!(self, Level::One | Level::Three)
    }

    /// Partner reached by flipping only the electron: (1,3) and (2,4).
    pub fn electron_partner(self) -> Level {
        match self {
            Level::One => Level::Three,
            Level::Two => Level::Four,
            Level::Three => Level::One,
            Level::Four => Level::Two,
        }
    }

    /// Partner reached by flipping only the nucleus: (1,2) and (3,4).
    pub fn nuclear_partner(self) -> Level {
        match self {
            Level::One => Level::Two,
            Level::Two => Level::One,
            Level::Three => Level::Four,
            Level::Four => Level::Three,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = if self.electron_up() { "up" } else { "down" };
        let n = if self.nuclear_up() { "up" } else { "down" };
        write!(f, "|{}> (e {}, n {})", self.number(), e, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_partners() {
        for l in Level::ALL {
            let e = l.electron_partner();
            assert_ne!(l.electron_up(), e.electron_up());
            assert_eq!(l.nuclear_up(), e.nuclear_up());
            let n = l.nuclear_partner();
            assert_eq!(l.electron_up(), n.electron_up());
            assert_ne!(l.nuclear_up(), n.nuclear_up());
            assert_eq!(Level::from_number(l.number()), Some(l));
        }
        assert_eq!(Level::One.electron_partner(), Level::Three);
        assert_eq!(Level::Three.nuclear_partner(), Level::Four);
        assert_eq!(Level::from_number(5), None);
    }
}
