//! Labels `(l, m)`, their identification orbits, and per-label data.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::{Error, Level, PhaseExponent, Rational, Result};

/// A pair `(l, m)` with `0 <= l <= n`, `0 <= m < 2n+4` and `l = m (mod 2)`.
///
/// The fields are public for pattern matching, but a `RawLabel` is only
/// meaningful together with the [`Level`] it was validated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RawLabel {
    pub l: u32,
    pub m: u32,
}

impl RawLabel {
    /// Validates `(l, m)` at `level`, reducing `m` modulo `2n+4`.
    pub fn new(level: Level, l: i64, m: i64) -> Result<Self> {
        let n = level.n();
        if l < 0 || l > i64::from(n) {
            return Err(Error::LabelOutOfRange { n, l });
        }
        if (l - m).rem_euclid(2) != 0 {
            return Err(Error::LabelParity { l, m });
        }
        Ok(RawLabel { l: l as u32, m: m.rem_euclid(i64::from(level.modulus())) as u32 })
    }

    pub const VACUUM: RawLabel = RawLabel { l: 0, m: 0 };

    /// The other representative `(n - l, m + n + 2)`.
    pub fn partner(self, level: Level) -> RawLabel {
        RawLabel { l: level.n() - self.l, m: (self.m + level.height()) % level.modulus() }
    }

    /// `m` as the signed residue in `(-(n+2), n+2]`.
    pub fn signed_m(self, level: Level) -> i64 {
        let m = i64::from(self.m);
        if m > i64::from(level.height()) {
            m - i64::from(level.modulus())
        } else {
            m
        }
    }

    pub(crate) fn is_valid(self, level: Level) -> bool {
        self.l <= level.n() && self.m < level.modulus() && (self.l + self.m).is_multiple_of(2)
    }
}

impl fmt::Display for RawLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.m)
    }
}

/// An irreducible sector: the orbit `{x, partner(x)}` of a raw label.
///
/// Ordering follows the canonical representative, which is the
/// lexicographically smaller of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelOrbit {
    canonical: RawLabel,
    partner: RawLabel,
}

impl LabelOrbit {
    pub(crate) fn of(level: Level, raw: RawLabel) -> Self {
        let other = raw.partner(level);
        if raw < other {
            LabelOrbit { canonical: raw, partner: other }
        } else {
            LabelOrbit { canonical: other, partner: raw }
        }
    }

    pub fn vacuum(level: Level) -> Self {
        Self::of(level, RawLabel::VACUUM)
    }

    pub fn canonical(&self) -> RawLabel {
        self.canonical
    }

    pub fn partner(&self) -> RawLabel {
        self.partner
    }

    pub fn representatives(&self) -> [RawLabel; 2] {
        [self.canonical, self.partner]
    }

    pub fn contains(&self, raw: RawLabel) -> bool {
        raw == self.canonical || raw == self.partner
    }

    pub fn is_vacuum(&self) -> bool {
        self.canonical == RawLabel::VACUUM
    }

    /// The representative whose statistics phase is 1, if there is one.
    ///
    /// At most one representative qualifies because the two phases differ by
    /// exactly one half.
    pub fn integral_form(&self, level: Level) -> Option<RawLabel> {
        self.representatives().into_iter().find(|x| statistics_phase(level, *x).is_trivial())
    }

    /// The representative `(l, m)` with `|m| <= l`, `m` signed, used by the
    /// discrete-series unitarity parametrization.
    pub fn discrete_series_form(&self, level: Level) -> Option<(i64, i64)> {
        self.representatives().into_iter().find_map(|x| {
            let m = x.signed_m(level);
            (m.abs() <= i64::from(x.l)).then_some((i64::from(x.l), m))
        })
    }
}

impl fmt::Display for LabelOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Validates `raw` and returns its orbit.
pub fn canonicalize(level: Level, raw: RawLabel) -> Result<LabelOrbit> {
    if !raw.is_valid(level) {
        RawLabel::new(level, i64::from(raw.l), i64::from(raw.m))?;
        return Err(Error::ResidueOutOfRange { modulus: level.modulus(), m: raw.m });
    }
    Ok(LabelOrbit::of(level, raw))
}

/// All `(n+1)(n+2)/2` orbits in canonical order.
pub fn spectrum(level: Level) -> Vec<LabelOrbit> {
    let mut out = Vec::with_capacity(((level.n() + 1) * (level.n() + 2) / 2) as usize);
    for l in 0..=level.n() {
        for m in (l % 2..level.modulus()).step_by(2) {
            let raw = RawLabel { l, m };
            if raw < raw.partner(level) {
                out.push(LabelOrbit::of(level, raw));
            }
        }
    }
    out
}

fn weight_numerator(raw: RawLabel) -> i64 {
    let (l, m) = (i64::from(raw.l), i64::from(raw.m));
    l * (l + 2) - m * m
}

/// Conformal weight `h = (l(l+2) - m^2) / (4(n+2))` of the stored representative.
pub fn weight(level: Level, raw: RawLabel) -> Rational {
    Rational::new(weight_numerator(raw), 4 * i64::from(level.height()))
}

/// `U(1)` charge `q = -m/(n+2)` of the stored representative.
pub fn charge(level: Level, raw: RawLabel) -> Rational {
    Rational::new(-i64::from(raw.m), i64::from(level.height()))
}

/// `ω = exp(2πi h)` for this representative; see [`phase_pair`] for the
/// orbit-level view.
pub fn statistics_phase(level: Level, raw: RawLabel) -> PhaseExponent {
    PhaseExponent::new(weight(level, raw))
}

/// Phases of the canonical representative and of its partner, in that order.
pub fn phase_pair(level: Level, orbit: LabelOrbit) -> [PhaseExponent; 2] {
    [statistics_phase(level, orbit.canonical), statistics_phase(level, orbit.partner)]
}

/// `sin((l+1)π/(n+2)) / sin(π/(n+2))` on the canonical `l`.
pub fn qdim(level: Level, orbit: LabelOrbit) -> f64 {
    qdim_of_l(level, orbit.canonical.l)
}

pub(crate) fn qdim_of_l(level: Level, l: u32) -> f64 {
    let h = f64::from(level.height());
    libm::sin(f64::from(l + 1) * PI / h) / libm::sin(PI / h)
}

/// Exact test for quantum dimension 1: canonical `l` is `0` or `n`.
pub fn is_unit(level: Level, orbit: LabelOrbit) -> bool {
    orbit.canonical.l == 0 || orbit.canonical.l == level.n()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(n: u32) -> Level {
        Level::new(n).unwrap()
    }

    fn raw(level: Level, l: i64, m: i64) -> RawLabel {
        RawLabel::new(level, l, m).unwrap()
    }

    #[test]
    fn spectrum_examples() {
        let s1: Vec<_> = spectrum(lvl(1)).iter().map(|o| o.canonical()).collect();
        assert_eq!(s1, [RawLabel { l: 0, m: 0 }, RawLabel { l: 0, m: 2 }, RawLabel { l: 0, m: 4 }]);
        assert_eq!(spectrum(lvl(2)).len(), 6);
        let s0 = spectrum(lvl(0));
        assert_eq!(s0.len(), 1);
        assert!(s0[0].is_vacuum());
    }

    #[test]
    fn canonicalize_examples() {
        let l1 = lvl(1);
        assert_eq!(canonicalize(l1, raw(l1, 1, 1)).unwrap().canonical(), raw(l1, 0, 4));
        let l10 = lvl(10);
        assert_eq!(canonicalize(l10, raw(l10, 6, 12)).unwrap().canonical(), raw(l10, 4, 0));
        let l2 = lvl(2);
        assert_eq!(canonicalize(l2, RawLabel::VACUUM).unwrap().canonical(), RawLabel::VACUUM);
    }

    #[test]
    fn label_validation() {
        let l = lvl(3);
        assert_eq!(RawLabel::new(l, 4, 0), Err(Error::LabelOutOfRange { n: 3, l: 4 }));
        assert_eq!(RawLabel::new(l, -1, 1), Err(Error::LabelOutOfRange { n: 3, l: -1 }));
        assert_eq!(RawLabel::new(l, 1, 2), Err(Error::LabelParity { l: 1, m: 2 }));
        assert_eq!(RawLabel::new(l, 1, -1).unwrap(), RawLabel { l: 1, m: 9 });
        assert!(canonicalize(l, RawLabel { l: 1, m: 2 }).is_err());
        assert!(canonicalize(l, RawLabel { l: 5, m: 1 }).is_err());
        assert!(canonicalize(l, RawLabel { l: 1, m: 11 }).is_err());
    }

    #[test]
    fn weight_and_charge_examples() {
        let l1 = lvl(1);
        assert_eq!(weight(l1, raw(l1, 1, 1)), Rational::new(1, 6));
        assert_eq!(charge(l1, raw(l1, 1, 1)), Rational::new(-1, 3));
        let l10 = lvl(10);
        assert_eq!(weight(l10, raw(l10, 6, 0)), Rational::from_integer(1));
        assert_eq!(charge(l10, raw(l10, 0, 12)), Rational::from_integer(-1));
        for n in 0..5 {
            assert_eq!(weight(lvl(n), RawLabel::VACUUM), Rational::from_integer(0));
            assert_eq!(charge(lvl(n), RawLabel::VACUUM), Rational::from_integer(0));
        }
    }

    #[test]
    fn statistics_phase_examples() {
        let l10 = lvl(10);
        assert_eq!(statistics_phase(l10, raw(l10, 10, 0)), PhaseExponent::HALF);
        assert_eq!(statistics_phase(l10, raw(l10, 6, 0)), PhaseExponent::ZERO);
        let l4 = lvl(4);
        assert_eq!(statistics_phase(l4, raw(l4, 4, 0)), PhaseExponent::ZERO);
    }

    #[test]
    fn phase_pair_examples() {
        let l10 = lvl(10);
        let o = LabelOrbit::of(l10, raw(l10, 10, 0));
        let mut p = phase_pair(l10, o);
        p.sort();
        assert_eq!(p, [PhaseExponent::ZERO, PhaseExponent::HALF]);

        let l1 = lvl(1);
        let o = LabelOrbit::of(l1, raw(l1, 0, 2));
        assert_eq!(phase_pair(l1, o), [PhaseExponent::from_ratio(2, 3), PhaseExponent::from_ratio(1, 6)]);
        for n in 0..6 {
            assert_eq!(
                phase_pair(lvl(n), LabelOrbit::vacuum(lvl(n))),
                [PhaseExponent::ZERO, PhaseExponent::HALF]
            );
        }
    }

    #[test]
    fn qdim_examples() {
        let l10 = lvl(10);
        let d = qdim(l10, LabelOrbit::of(l10, raw(l10, 6, 0)));
        assert!((d - (2.0 + libm::sqrt(3.0))).abs() < 1e-12);
        let l2 = lvl(2);
        let d = qdim(l2, LabelOrbit::of(l2, raw(l2, 1, 1)));
        assert!((d - libm::sqrt(2.0)).abs() < 1e-12);
        for n in 0..8 {
            assert!((qdim(lvl(n), LabelOrbit::vacuum(lvl(n))) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn integral_form_is_unique_when_present() {
        let l10 = lvl(10);
        let o = LabelOrbit::of(l10, raw(l10, 6, 12));
        assert_eq!(o.integral_form(l10), Some(raw(l10, 6, 12)));
        let l2 = lvl(2);
        assert_eq!(LabelOrbit::of(l2, raw(l2, 1, 1)).integral_form(l2), None);
    }

    #[test]
    fn discrete_series_form_examples() {
        let l1 = lvl(1);
        // orbit {(0,4), (1,1)}
        assert_eq!(LabelOrbit::of(l1, raw(l1, 1, 1)).discrete_series_form(l1), Some((1, 1)));
        // orbit {(0,2), (1,5)}: 5 is -1 mod 6
        assert_eq!(LabelOrbit::of(l1, raw(l1, 0, 2)).discrete_series_form(l1), Some((1, -1)));
    }
}
