use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;

use crate::Rational;

/// A statistics phase `exp(2πi·x)` stored as the exact exponent `x` in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhaseExponent(Rational);

impl PhaseExponent {
    pub const ZERO: PhaseExponent = PhaseExponent(Rational::new_raw(0, 1));
    pub const HALF: PhaseExponent = PhaseExponent(Rational::new_raw(1, 2));

    /// Reduces `x` modulo 1.
    pub fn new(x: Rational) -> Self {
        let (num, den) = (*x.numer(), *x.denom());
        PhaseExponent(Rational::new(num.mod_floor(&den), den))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::new(num, den))
    }

    pub fn value(self) -> Rational {
        self.0
    }

    /// True when the phase is exactly 1.
    pub fn is_trivial(self) -> bool {
        self.0.is_zero()
    }

    /// Rotation order of the phase: the denominator of the exponent.
    pub fn order(self) -> i64 {
        *self.0.denom()
    }
}

impl Add for PhaseExponent {
    type Output = PhaseExponent;
    fn add(self, rhs: Self) -> Self {
        PhaseExponent::new(self.0 + rhs.0)
    }
}

impl Sub for PhaseExponent {
    type Output = PhaseExponent;
    fn sub(self, rhs: Self) -> Self {
        PhaseExponent::new(self.0 - rhs.0)
    }
}

impl Neg for PhaseExponent {
    type Output = PhaseExponent;
    fn neg(self) -> Self {
        PhaseExponent::new(-self.0)
    }
}

impl fmt::Display for PhaseExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}
