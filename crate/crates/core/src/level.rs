use core::fmt;

use crate::{Error, Rational, Result};

/// The integer `n >= 0` fixing the model; `c = 3n/(n+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(u32);

impl Level {
    /// Largest supported level. Keeps `(2n+4)^2` and all weight numerators
    /// comfortably inside `i64`.
    pub const MAX: u32 = 1 << 20;

    pub fn new(n: u32) -> Result<Self> {
        if n > Self::MAX {
            return Err(Error::LevelTooLarge { n, max: Self::MAX });
        }
        Ok(Level(n))
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.0
    }

    /// `2n + 4`, the modulus of the `m` label.
    #[inline]
    pub fn modulus(self) -> u32 {
        2 * self.0 + 4
    }

    /// `n + 2`.
    #[inline]
    pub fn height(self) -> u32 {
        self.0 + 2
    }

    /// `c = 3n/(n+2)`, reduced.
    pub fn central_charge(self) -> Rational {
        Rational::new(3 * i64::from(self.0), i64::from(self.height()))
    }

    pub(crate) fn require_nontrivial(self) -> Result<()> {
        if self.0 == 0 {
            Err(Error::TrivialLevel)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_charge_examples() {
        assert_eq!(Level::new(0).unwrap().central_charge(), Rational::from_integer(0));
        assert_eq!(Level::new(1).unwrap().central_charge(), Rational::from_integer(1));
        assert_eq!(Level::new(10).unwrap().central_charge(), Rational::new(5, 2));
    }

    #[test]
    fn central_charge_stays_below_three() {
        for n in 0..200 {
            let c = Level::new(n).unwrap().central_charge();
            assert!(c >= Rational::from_integer(0) && c < Rational::from_integer(3));
        }
    }

    #[test]
    fn rejects_huge_levels() {
        assert!(Level::new(Level::MAX).is_ok());
        assert!(matches!(Level::new(Level::MAX + 1), Err(Error::LevelTooLarge { .. })));
    }
}
