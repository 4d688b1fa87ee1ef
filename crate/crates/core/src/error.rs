use core::fmt;

use crate::currents::UnitElement;
use crate::label::RawLabel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The level is larger than the arithmetic in this crate supports.
    LevelTooLarge { n: u32, max: u32 },
    /// The operation needs `n >= 1`.
    TrivialLevel,
    /// `l` is not in `0..=n`.
    LabelOutOfRange { n: u32, l: i64 },
    /// `l` and `m` have different parity.
    LabelParity { l: i64, m: i64 },
    /// A stored `m` is not reduced modulo `2n+4`.
    ResidueOutOfRange { modulus: u32, m: u32 },
    /// A written form is not a simple current (`l` not in `{0, n}`).
    NotAUnit(RawLabel),
    /// A candidate current group is not closed under fusion.
    NotClosed { a: RawLabel, b: RawLabel },
    /// A candidate current group is missing the vacuum.
    MissingVacuum,
    /// An element of a current group has non-trivial statistics phase.
    PhaseObstructed(UnitElement),
    /// Two elements of a current group lie in the same orbit.
    DuplicateOrbit(RawLabel),
    /// A value given for a rational could not be parsed.
    BadRational,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LevelTooLarge { n, max } => {
                write!(f, "level {n} exceeds the supported maximum {max}")
            }
            Error::TrivialLevel => write!(f, "this operation requires level n >= 1"),
            Error::LabelOutOfRange { n, l } => {
                write!(f, "label violates 0 <= l <= n: l = {l}, n = {n}")
            }
            Error::LabelParity { l, m } => {
                write!(f, "label violates l = m (mod 2): l = {l}, m = {m}")
            }
            Error::ResidueOutOfRange { modulus, m } => {
                write!(f, "label violates 0 <= m < {modulus}: m = {m}")
            }
            Error::NotAUnit(x) => write!(f, "{x} is not a simple current (l must be 0 or n)"),
            Error::NotClosed { a, b } => {
                write!(f, "current group not closed: product of {a} and {b} is missing")
            }
            Error::MissingVacuum => write!(f, "current group does not contain the vacuum"),
            Error::PhaseObstructed(u) => {
                write!(f, "{} has statistics phase exponent {}, not 0", u.written_form, u.phase)
            }
            Error::DuplicateOrbit(x) => write!(f, "two written forms in the orbit of {x}"),
            Error::BadRational => write!(f, "malformed rational number"),
        }
    }
}

impl core::error::Error for Error {}
