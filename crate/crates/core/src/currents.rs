//! Simple currents: the dimension-one sectors, the groups they form, and
//! the locality analysis that selects extendable subgroups.
//!
//! Currents are handled through their *written forms*, the raw labels
//! `(0, m)` and `(n, m)`. Written forms multiply without identification and
//! form a group of order `2(n+2)` that double covers the `n+2` unit orbits;
//! the kernel of that cover is `{(0,0), (n, n+2)}`. Statistics phases are
//! evaluated on written forms.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::fusion::fuse_raw;
use crate::group::{GroupStructure, Presentation};
use crate::label::{statistics_phase, LabelOrbit, RawLabel};
use crate::{Error, Level, PhaseExponent, Result};

/// A simple current in a specific written form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitElement {
    pub orbit: LabelOrbit,
    pub written_form: RawLabel,
    pub phase: PhaseExponent,
}

impl UnitElement {
    pub fn new(level: Level, written_form: RawLabel) -> Result<Self> {
        if !(written_form.l == 0 || written_form.l == level.n()) {
            return Err(Error::NotAUnit(written_form));
        }
        Ok(Self::of(level, written_form))
    }

    pub(crate) fn of(level: Level, written_form: RawLabel) -> Self {
        UnitElement {
            orbit: LabelOrbit::of(level, written_form),
            written_form,
            phase: statistics_phase(level, written_form),
        }
    }
}

/// A unit orbit with both of its written forms; `forms[0]` has `l = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit {
    pub orbit: LabelOrbit,
    pub forms: [UnitElement; 2],
}

/// A group of simple currents, recorded through one written form per element
/// (or both, for the full written-form group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurrentGroup {
    pub elements: Vec<UnitElement>,
    pub structure: GroupStructure,
    pub generators: Vec<RawLabel>,
}

impl CurrentGroup {
    fn from_set(level: Level, set: &BTreeSet<RawLabel>, generators: Vec<RawLabel>) -> Self {
        let g = presentation(level);
        let mut elements: Vec<UnitElement> = set.iter().map(|&x| UnitElement::of(level, x)).collect();
        elements.sort_by_key(|u| (u.orbit, u.written_form));
        CurrentGroup { elements, structure: g.structure(set), generators }
    }

    /// The subgroup generated by `forms`, each a written form of a current.
    pub fn generated_by(level: Level, forms: &[RawLabel]) -> Result<Self> {
        level.require_nontrivial()?;
        for &x in forms {
            canonical_check(level, x)?;
            UnitElement::new(level, x)?;
        }
        let g = presentation(level);
        let set = g.closure(forms);
        let generators = g.minimal_generators(&set);
        Ok(Self::from_set(level, &set, generators))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn written_forms(&self) -> BTreeSet<RawLabel> {
        self.elements.iter().map(|u| u.written_form).collect()
    }

    pub fn orbits(&self) -> BTreeSet<LabelOrbit> {
        self.elements.iter().map(|u| u.orbit).collect()
    }

    pub fn contains_orbit(&self, orbit: &LabelOrbit) -> bool {
        self.elements.iter().any(|u| u.orbit == *orbit)
    }

    /// Every written form of `self` is a written form of `other`.
    pub fn is_subgroup_of(&self, other: &CurrentGroup) -> bool {
        self.written_forms().is_subset(&other.written_forms())
    }

    /// Checks the group axioms that matter for an extension: vacuum present,
    /// closed under written-form multiplication, one form per orbit, and
    /// trivial statistics phase throughout.
    pub fn check_local(&self, level: Level) -> Result<()> {
        let forms = self.written_forms();
        if !forms.contains(&RawLabel::VACUUM) {
            return Err(Error::MissingVacuum);
        }
        let mut seen = BTreeSet::new();
        for u in &self.elements {
            if !(u.written_form.l == 0 || u.written_form.l == level.n()) {
                return Err(Error::NotAUnit(u.written_form));
            }
            if !seen.insert(u.orbit) {
                return Err(Error::DuplicateOrbit(u.written_form));
            }
        }
        for &a in &forms {
            for &b in &forms {
                if !forms.contains(&multiply(level, a, b)) {
                    return Err(Error::NotClosed { a, b });
                }
            }
        }
        for u in &self.elements {
            let recomputed = UnitElement::of(level, u.written_form);
            if !recomputed.phase.is_trivial() {
                return Err(Error::PhaseObstructed(recomputed));
            }
        }
        Ok(())
    }
}

fn canonical_check(level: Level, x: RawLabel) -> Result<()> {
    crate::label::canonicalize(level, x).map(|_| ())
}

/// Product of two written forms of currents; the fusion formula has exactly
/// one term when either factor has `l` in `{0, n}`.
pub(crate) fn multiply(level: Level, a: RawLabel, b: RawLabel) -> RawLabel {
    let out = fuse_raw(level, a, b);
    debug_assert_eq!(out.len(), 1);
    out[0]
}

pub(crate) fn presentation(level: Level) -> Presentation<RawLabel, impl Fn(RawLabel, RawLabel) -> RawLabel> {
    Presentation::new(RawLabel::VACUUM, move |a, b| multiply(level, a, b))
}

/// All `2(n+2)` written forms `(0, even m)` and `(n, m = n mod 2)`.
pub(crate) fn all_written_forms(level: Level) -> Vec<RawLabel> {
    let n = level.n();
    let zero = (0..level.modulus()).step_by(2).map(|m| RawLabel { l: 0, m });
    let top = (n % 2..level.modulus()).step_by(2).map(move |m| RawLabel { l: n, m });
    zero.chain(top).collect()
}

/// The `n+2` unit orbits in canonical order, each with both written forms.
pub fn units(level: Level) -> Result<Vec<Unit>> {
    level.require_nontrivial()?;
    Ok((0..level.modulus())
        .step_by(2)
        .map(|m| {
            let low = RawLabel { l: 0, m };
            let high = low.partner(level);
            Unit {
                orbit: LabelOrbit::of(level, low),
                forms: [UnitElement::of(level, low), UnitElement::of(level, high)],
            }
        })
        .collect())
}

/// The full written-form group: cyclic of order `2(n+2)` generated by
/// `(n,1)` for odd `n`, and `Z_(n+2) x Z_2` generated by `(0,2)`, `(n,0)` for
/// even `n`. The structure field is computed by brute force, not assumed.
pub fn unit_group_structure(level: Level) -> Result<CurrentGroup> {
    level.require_nontrivial()?;
    let n = level.n();
    let generators = if n % 2 == 1 {
        alloc::vec![RawLabel { l: n, m: 1 }]
    } else {
        alloc::vec![RawLabel { l: 0, m: 2 }, RawLabel { l: n, m: 0 }]
    };
    let set = presentation(level).closure(&generators);
    Ok(CurrentGroup::from_set(level, &set, generators))
}

/// Branch taken in the `n = 2 (mod 4)` analysis, keyed on the phase of the
/// formal label `(0, M/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoModFourBranch {
    /// `ω(0, M/2) = -1`: the group is generated by `(n, M/2)`.
    MinusOne,
    /// `ω(0, M/2) = ±i`: the group is generated by `(0, M)`.
    PlusMinusI,
    /// Any other value; not expected from the minimality of `M`.
    Unexpected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxCyclicCase {
    /// `n` odd: `p` is the least positive power with `ω((n,1)^p) = 1`.
    Odd { p: u32, generator: RawLabel },
    /// `n = 0 (mod 4)`: `ω(n,0) = 1` and `p` is least with `ω((0,2)^p) = 1`.
    ZeroModFour { p: u32, top_phase: PhaseExponent },
    /// `n = 2 (mod 4)`.
    TwoModFour {
        /// Least positive even `M` with `ω(0, M) = 1`.
        m: u32,
        top_phase: PhaseExponent,
        /// Phase of `(0, M/2)` evaluated from the weight formula, whether or
        /// not `(0, M/2)` satisfies the parity constraint.
        half_phase: PhaseExponent,
        /// Whether `M/2` is even, so that `(0, M/2)` and `(n, M/2)` are labels.
        half_label_valid: bool,
        /// `n/2` odd and `M^2 / (8(n+2))` an odd integer.
        identity_premises: bool,
        /// `n/4 - M^2/(16(n+2))` mod 1, i.e. the phase of `(n, M/2)`.
        identity_exponent: PhaseExponent,
        branch: TwoModFourBranch,
    },
}

/// The maximal group of currents with trivial phase obtained from the
/// case analysis on `n`, together with the data that drove each branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxCyclic {
    pub case: MaxCyclicCase,
    pub group: CurrentGroup,
    pub warnings: Vec<String>,
}

/// Exponent `n/4 - M^2/(16(n+2))` of `exp(nπi/2 - M^2 πi/(8(n+2)))`.
pub fn identity_exponent(level: Level, m: u32) -> PhaseExponent {
    let n = i64::from(level.n());
    let m = i64::from(m);
    PhaseExponent::from_ratio(n, 4) - PhaseExponent::from_ratio(m * m, 16 * (n + 2))
}

pub fn max_cyclic(level: Level) -> Result<MaxCyclic> {
    level.require_nontrivial()?;
    let n = level.n();
    let g = presentation(level);
    let phase = |x: RawLabel| statistics_phase(level, x);
    let mut warnings = Vec::new();

    if n % 2 == 1 {
        let sigma = RawLabel { l: n, m: 1 };
        let (p, generator) = (1..=2 * level.height())
            .map(|p| (p, g.pow(sigma, u64::from(p))))
            .find(|&(_, x)| phase(x).is_trivial())
            .expect("sigma^(2(n+2)) is the vacuum");
        let group = CurrentGroup::generated_by(level, &[generator])?;
        return Ok(MaxCyclic { case: MaxCyclicCase::Odd { p, generator }, group, warnings });
    }

    let modulus = level.modulus();
    let top = RawLabel { l: n, m: 0 };
    let top_phase = phase(top);

    if n.is_multiple_of(4) {
        let p = (1..=level.height())
            .find(|&p| phase(RawLabel { l: 0, m: (2 * p) % modulus }).is_trivial())
            .expect("(0,2)^(n+2) is the vacuum");
        if !top_phase.is_trivial() {
            warnings.push(format!("phase of {top} is {top_phase}, expected 0"));
        }
        let group = CurrentGroup::generated_by(level, &[RawLabel { l: 0, m: (2 * p) % modulus }, top])?;
        return Ok(MaxCyclic { case: MaxCyclicCase::ZeroModFour { p, top_phase }, group, warnings });
    }

    let big_m = (2..=modulus)
        .step_by(2)
        .find(|&m| phase(RawLabel { l: 0, m: m % modulus }).is_trivial())
        .expect("(0, 2n+4) is the vacuum");
    let half = big_m / 2;
    let half_phase =
        PhaseExponent::from_ratio(-i64::from(half) * i64::from(half), 4 * i64::from(level.height()));
    let half_label_valid = half % 2 == 0;
    let ratio = u64::from(big_m) * u64::from(big_m);
    let denom = 8 * u64::from(level.height());
    let identity_premises = (n / 2) % 2 == 1 && ratio % denom == 0 && (ratio / denom) % 2 == 1;
    let top = identity_exponent(level, big_m);
    let branch = if half_phase == PhaseExponent::HALF {
        TwoModFourBranch::MinusOne
    } else if half_phase.order() == 4 {
        TwoModFourBranch::PlusMinusI
    } else {
        TwoModFourBranch::Unexpected
    };
    if top_phase != PhaseExponent::HALF {
        warnings.push(format!("phase of {top} is {top_phase}, expected 1/2"));
    }
    if !half_label_valid {
        warnings.push(format!("(0,{half}) violates the parity constraint; its phase {half_phase} is formal"));
    }
    let full = RawLabel { l: 0, m: big_m % modulus };
    let generator = match branch {
        TwoModFourBranch::MinusOne if half_label_valid => RawLabel { l: n, m: half % modulus },
        TwoModFourBranch::MinusOne => full,
        TwoModFourBranch::PlusMinusI => full,
        TwoModFourBranch::Unexpected => {
            warnings.push(format!("phase of (0,{half}) is {half_phase}, outside {{-1, i, -i}}"));
            full
        }
    };
    if branch == TwoModFourBranch::MinusOne && !top.is_trivial() {
        warnings.push(format!("phase of ({n},{half}) is {top}, expected 0"));
    }
    let group = CurrentGroup::generated_by(level, &[generator])?;
    Ok(MaxCyclic {
        case: MaxCyclicCase::TwoModFour {
            m: big_m,
            top_phase,
            half_phase,
            half_label_valid,
            identity_premises,
            identity_exponent: top,
            branch,
        },
        group,
        warnings,
    })
}

/// Every subgroup of the written-form group all of whose elements have
/// trivial statistics phase, ordered by size then generators.
///
/// Such a subgroup never contains `(n, n+2)` (phase 1/2), so it maps
/// injectively onto unit orbits; the stored written form of each element is
/// its unique phase-0 representative.
pub fn local_subgroups(level: Level) -> Result<Vec<CurrentGroup>> {
    level.require_nontrivial()?;
    let g = presentation(level);
    let forms = all_written_forms(level);
    let mut out: Vec<CurrentGroup> = g
        .subgroups(&forms, |x| statistics_phase(level, x).is_trivial())
        .iter()
        .map(|set| CurrentGroup::from_set(level, set, g.minimal_generators(set)))
        .collect();
    out.sort_by(|a, b| (a.order(), &a.generators).cmp(&(b.order(), &b.generators)));
    Ok(out)
}

/// `ω(σx) - ω(σ) - ω(x)` with `σx` the fusion of the two written forms.
pub fn monodromy_exponent(level: Level, sigma: &UnitElement, x: RawLabel) -> PhaseExponent {
    let product = multiply(level, sigma.written_form, x);
    statistics_phase(level, product)
        - statistics_phase(level, sigma.written_form)
        - statistics_phase(level, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::is_unit;
    use crate::spectrum;

    fn lvl(n: u32) -> Level {
        Level::new(n).unwrap()
    }

    fn raw(l: u32, m: u32) -> RawLabel {
        RawLabel { l, m }
    }

    #[test]
    fn units_examples() {
        let u1 = units(lvl(1)).unwrap();
        let canon: Vec<_> = u1.iter().map(|u| u.orbit.canonical()).collect();
        assert_eq!(canon, [raw(0, 0), raw(0, 2), raw(0, 4)]);
        assert_eq!(units(lvl(2)).unwrap().len(), 4);
        let l10 = lvl(10);
        let six = LabelOrbit::of(l10, raw(6, 0));
        assert!(!units(l10).unwrap().iter().any(|u| u.orbit == six));
        assert!(units(lvl(0)).is_err());
    }

    #[test]
    fn both_written_forms_differ_by_half() {
        for n in 1..20 {
            for u in units(lvl(n)).unwrap() {
                assert_eq!(u.forms[0].written_form.l, 0);
                assert_eq!(u.forms[1].written_form.l, n);
                assert_eq!(u.forms[0].phase - u.forms[1].phase, PhaseExponent::HALF);
            }
        }
    }

    #[test]
    fn unit_group_examples() {
        let g1 = unit_group_structure(lvl(1)).unwrap();
        assert_eq!(g1.structure, GroupStructure::cyclic(6));
        assert_eq!(g1.generators, [raw(1, 1)]);
        let g2 = unit_group_structure(lvl(2)).unwrap();
        assert_eq!(g2.structure, GroupStructure::product(4, 2));
        assert_eq!(g2.generators, [raw(0, 2), raw(2, 0)]);
        assert_eq!(unit_group_structure(lvl(4)).unwrap().structure, GroupStructure::product(6, 2));
    }

    #[test]
    fn max_cyclic_examples() {
        let m4 = max_cyclic(lvl(4)).unwrap();
        assert_eq!(m4.case, MaxCyclicCase::ZeroModFour { p: 6, top_phase: PhaseExponent::ZERO });
        assert_eq!(m4.group.written_forms(), BTreeSet::from([raw(0, 0), raw(4, 0)]));

        let m1 = max_cyclic(lvl(1)).unwrap();
        assert_eq!(m1.case, MaxCyclicCase::Odd { p: 6, generator: raw(0, 0) });
        assert!(m1.group.is_trivial());

        let l10 = lvl(10);
        let m10 = max_cyclic(l10).unwrap();
        assert!(m10.group.contains_orbit(&LabelOrbit::of(l10, raw(0, 12))));
        match m10.case {
            MaxCyclicCase::TwoModFour { m, branch, half_label_valid, .. } => {
                assert_eq!(m, 12);
                assert_eq!(branch, TwoModFourBranch::PlusMinusI);
                assert!(half_label_valid);
            }
            other => panic!("unexpected case {other:?}"),
        }
        assert!(m10.warnings.is_empty());
    }

    #[test]
    fn max_cyclic_minus_one_branch_at_six() {
        // n = 6: M = 8, M^2/(8*8) = 1 odd, n/2 = 3 odd
        let l6 = lvl(6);
        let m6 = max_cyclic(l6).unwrap();
        match m6.case {
            MaxCyclicCase::TwoModFour { m, branch, identity_premises, identity_exponent, .. } => {
                assert_eq!(m, 8);
                assert_eq!(branch, TwoModFourBranch::MinusOne);
                assert!(identity_premises);
                assert!(identity_exponent.is_trivial());
            }
            other => panic!("unexpected case {other:?}"),
        }
        assert_eq!(m6.group.written_forms(), BTreeSet::from([raw(0, 0), raw(0, 8), raw(6, 4), raw(6, 12)]));
        assert_eq!(m6.group.structure, GroupStructure::cyclic(4));
        assert!(m6.group.check_local(l6).is_ok());
    }

    #[test]
    fn local_subgroup_examples() {
        for n in 1..16 {
            let subs = local_subgroups(lvl(n)).unwrap();
            assert!(subs[0].is_trivial());
            assert_eq!(subs[0].elements[0].written_form, RawLabel::VACUUM);
        }
        let l4 = lvl(4);
        assert!(local_subgroups(l4)
            .unwrap()
            .iter()
            .any(|h| h.written_forms() == BTreeSet::from([raw(0, 0), raw(4, 0)])));
        let l10 = lvl(10);
        assert!(local_subgroups(l10)
            .unwrap()
            .iter()
            .any(|h| h.written_forms() == BTreeSet::from([raw(0, 0), raw(0, 12)])));
    }

    #[test]
    fn local_subgroups_pass_their_own_check() {
        for n in 1..25 {
            let l = lvl(n);
            for h in local_subgroups(l).unwrap() {
                h.check_local(l).unwrap();
            }
        }
    }

    #[test]
    fn monodromy_examples() {
        let l4 = lvl(4);
        let vac = UnitElement::new(l4, RawLabel::VACUUM).unwrap();
        for x in spectrum(l4) {
            assert!(monodromy_exponent(l4, &vac, x.canonical()).is_trivial());
        }
        let s = UnitElement::new(l4, raw(4, 0)).unwrap();
        assert!(monodromy_exponent(l4, &s, raw(4, 0)).is_trivial());

        let l2 = lvl(2);
        let s = UnitElement::new(l2, raw(2, 0)).unwrap();
        assert_eq!(s.phase, PhaseExponent::HALF);
        assert!(monodromy_exponent(l2, &s, raw(2, 0)).is_trivial());
    }

    #[test]
    fn unit_element_rejects_non_units() {
        let l10 = lvl(10);
        assert_eq!(UnitElement::new(l10, raw(6, 0)), Err(Error::NotAUnit(raw(6, 0))));
        for o in spectrum(l10) {
            assert_eq!(is_unit(l10, o), UnitElement::new(l10, o.canonical()).is_ok());
        }
    }

    #[test]
    fn check_local_errors() {
        let l2 = lvl(2);
        let full = unit_group_structure(l2).unwrap();
        assert!(matches!(full.check_local(l2), Err(Error::DuplicateOrbit(_))));
        let obstructed = CurrentGroup::generated_by(l2, &[raw(0, 2)]).unwrap();
        assert!(matches!(obstructed.check_local(l2), Err(Error::PhaseObstructed(_))));
        let mut broken = CurrentGroup::generated_by(lvl(4), &[raw(4, 0)]).unwrap();
        broken.elements.remove(0);
        assert_eq!(broken.check_local(lvl(4)), Err(Error::MissingVacuum));
    }
}
