//! Candidate dual canonical endomorphisms `θ`, their multiplicity matrices
//! `⟨θλ, μ⟩`, vacuum rows `Z(0,μ) = ⟨θ, μ⟩`, and the per-level
//! classification listing.
//!
//! Validation covers necessary multiplicity-level conditions only. Existence
//! and uniqueness of the algebra structure on `θ` are not decided here.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::currents::{local_subgroups, max_cyclic, CurrentGroup, MaxCyclic};
use crate::fusion::{conjugate, fuse_sectors, hom_dim, Sector};
use crate::label::{spectrum, LabelOrbit, RawLabel};
use crate::{IntMatrix, Level, Result};

/// Labels of the four exceptional extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalId {
    /// `n = 10`: `(0,0) + (6,0)`.
    A,
    /// `n = 10`: `(0,0) + (0,12)`.
    B,
    /// `n = 10`: `(0,0) + (6,0) + (0,12) + (6,12)`.
    C,
    /// `n = 28`: `(0,0) + (10,0) + (18,0) + (28,0)`.
    D,
}

impl ExceptionalId {
    pub const ALL: [ExceptionalId; 4] =
        [ExceptionalId::A, ExceptionalId::B, ExceptionalId::C, ExceptionalId::D];

    pub fn level(self) -> u32 {
        match self {
            ExceptionalId::D => 28,
            _ => 10,
        }
    }

    /// Constituents in the written forms used for their phases.
    pub fn written_forms(self) -> &'static [(u32, u32)] {
        match self {
            ExceptionalId::A => &[(0, 0), (6, 0)],
            ExceptionalId::B => &[(0, 0), (0, 12)],
            ExceptionalId::C => &[(0, 0), (6, 0), (0, 12), (6, 12)],
            ExceptionalId::D => &[(0, 0), (10, 0), (18, 0), (28, 0)],
        }
    }

    pub fn letter(self) -> char {
        match self {
            ExceptionalId::A => 'a',
            ExceptionalId::B => 'b',
            ExceptionalId::C => 'c',
            ExceptionalId::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.letter() == c.to_ascii_lowercase())
    }
}

impl fmt::Display for ExceptionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    SimpleCurrent(CurrentGroup),
    Exceptional(ExceptionalId),
    /// An arbitrary sector supplied for validation.
    Candidate,
}

/// A candidate dual canonical endomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct Theta {
    pub level: Level,
    pub sector: Sector,
    pub provenance: Provenance,
    /// `Σ mult · qdim`.
    pub index: f64,
}

impl Theta {
    pub fn candidate(level: Level, sector: Sector) -> Self {
        let index = sector.qdim(level);
        Theta { level, sector, provenance: Provenance::Candidate, index }
    }

    pub fn exceptional(id: ExceptionalId) -> Self {
        let level = Level::new(id.level()).expect("static level");
        let sector: Sector = id
            .written_forms()
            .iter()
            .map(|&(l, m)| {
                let raw = RawLabel::new(level, i64::from(l), i64::from(m))
                    .expect("exceptional constituents are labels of their level");
                LabelOrbit::of(level, raw)
            })
            .collect();
        let index = sector.qdim(level);
        Theta { level, sector, provenance: Provenance::Exceptional(id), index }
    }
}

/// `θ = ⊕_{σ ∈ H} σ` for a local current group `H`; index `|H|`.
pub fn theta_from_subgroup(level: Level, h: &CurrentGroup) -> Result<Theta> {
    level.require_nontrivial()?;
    h.check_local(level)?;
    let sector: Sector = h.elements.iter().map(|u| u.orbit).collect();
    Ok(Theta { level, sector, provenance: Provenance::SimpleCurrent(h.clone()), index: h.order() as f64 })
}

/// The four exceptional `θ`s at levels 10, 10, 10, 28.
pub fn exceptional_catalogue() -> Vec<Theta> {
    ExceptionalId::ALL.into_iter().map(Theta::exceptional).collect()
}

/// `M[λ][μ] = ⟨θλ, μ⟩` over the spectrum.
pub fn alpha_hom_matrix(level: Level, theta: &Theta) -> IntMatrix {
    let sectors = spectrum(level);
    let mut out = IntMatrix::zeros(sectors.len());
    for (i, &lambda) in sectors.iter().enumerate() {
        let product = fuse_sectors(level, &theta.sector, &Sector::irreducible(lambda));
        for (j, &mu) in sectors.iter().enumerate() {
            out[(i, j)] = hom_dim(&product, &Sector::irreducible(mu)) as u32;
        }
    }
    out
}

/// `|{σ ∈ H : σλ = μ}|`, computed by acting with each current's written form
/// directly on the canonical label: `(0,a)(l,m) = (l, m+a)` and
/// `(n,a)(l,m) = (n-l, m+a)`.
pub fn orbit_count_matrix(level: Level, h: &CurrentGroup) -> IntMatrix {
    let sectors = spectrum(level);
    let n = level.n();
    let mut out = IntMatrix::zeros(sectors.len());
    for (i, lambda) in sectors.iter().enumerate() {
        let x = lambda.canonical();
        for u in &h.elements {
            let s = u.written_form;
            let l = if s.l == 0 { x.l } else { n - x.l };
            let image = LabelOrbit::of(level, RawLabel { l, m: (x.m + s.m) % level.modulus() });
            let j = sectors.binary_search(&image).expect("image lies in the spectrum");
            out[(i, j)] += 1;
        }
    }
    out
}

/// A row `Z(0, μ)` of the modular invariant, with an entry for every orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRow {
    pub entries: BTreeMap<LabelOrbit, u32>,
}

impl InvariantRow {
    pub fn support(&self) -> impl Iterator<Item = (&LabelOrbit, &u32)> {
        self.entries.iter().filter(|(_, &k)| k > 0)
    }
}

/// `Z(0, μ) = ⟨θ, μ⟩`.
pub fn vacuum_row(level: Level, theta: &Theta) -> InvariantRow {
    InvariantRow {
        entries: spectrum(level).into_iter().map(|mu| (mu, theta.sector.multiplicity(&mu))).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    LevelMatches,
    VacuumMultiplicity,
    IntegralPhases,
    ConjugateClosed,
    AlgebraMultiplicity,
    FiniteIndex,
    OrbitCounting,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::LevelMatches => "level-matches",
            CheckKind::VacuumMultiplicity => "vacuum-multiplicity",
            CheckKind::IntegralPhases => "integral-phases",
            CheckKind::ConjugateClosed => "conjugate-closed",
            CheckKind::AlgebraMultiplicity => "algebra-multiplicity",
            CheckKind::FiniteIndex => "finite-index",
            CheckKind::OrbitCounting => "orbit-counting",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    None,
    Orbit(LabelOrbit),
    Count { expected: u64, found: u64 },
    Index(f64),
    Entry { row: LabelOrbit, col: LabelOrbit, expected: u32, found: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub kind: CheckKind,
    pub status: CheckStatus,
    pub witness: Witness,
}

impl Check {
    fn new(kind: CheckKind, ok: bool, witness: Witness) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        Check { kind, status, witness }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn status(&self, kind: CheckKind) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.kind == kind).map(|c| c.status)
    }
}

const INDEX_TOLERANCE: f64 = 1e-9;

/// Runs the multiplicity-level checks on `theta` at `level`. Inconsistent
/// candidates produce failed checks, never a panic.
pub fn verify_theta(level: Level, theta: &Theta) -> ValidationReport {
    let mut checks = Vec::new();
    if theta.level != level {
        checks.push(Check::new(
            CheckKind::LevelMatches,
            false,
            Witness::Count { expected: u64::from(level.n()), found: u64::from(theta.level.n()) },
        ));
        return ValidationReport { checks };
    }
    checks.push(Check::new(CheckKind::LevelMatches, true, Witness::None));

    let sector = &theta.sector;
    let vac = sector.multiplicity(&LabelOrbit::vacuum(level));
    checks.push(Check::new(
        CheckKind::VacuumMultiplicity,
        vac == 1,
        Witness::Count { expected: 1, found: u64::from(vac) },
    ));

    let obstructed = sector.orbits().find(|o| o.integral_form(level).is_none());
    checks.push(Check::new(
        CheckKind::IntegralPhases,
        obstructed.is_none(),
        obstructed.map_or(Witness::None, Witness::Orbit),
    ));

    let unpaired =
        sector.terms().find(|(o, &k)| sector.multiplicity(&conjugate(level, **o)) != k).map(|(o, _)| *o);
    checks.push(Check::new(
        CheckKind::ConjugateClosed,
        unpaired.is_none(),
        unpaired.map_or(Witness::None, Witness::Orbit),
    ));

    let square = fuse_sectors(level, sector, sector);
    let (cubic, quadratic) = (hom_dim(&square, sector), hom_dim(sector, sector));
    checks.push(Check::new(
        CheckKind::AlgebraMultiplicity,
        cubic >= quadratic,
        Witness::Count { expected: quadratic, found: cubic },
    ));

    let dim = sector.qdim(level);
    checks.push(Check::new(
        CheckKind::FiniteIndex,
        !sector.is_empty() && theta.index.is_finite() && (theta.index - dim).abs() < INDEX_TOLERANCE,
        Witness::Index(theta.index),
    ));

    checks.push(match &theta.provenance {
        Provenance::SimpleCurrent(h) => {
            let fused = alpha_hom_matrix(level, theta);
            let counted = orbit_count_matrix(level, h);
            let sectors = spectrum(level);
            let mismatch = (0..sectors.len())
                .flat_map(|i| (0..sectors.len()).map(move |j| (i, j)))
                .find(|&(i, j)| fused[(i, j)] != counted[(i, j)]);
            match mismatch {
                None => Check::new(CheckKind::OrbitCounting, true, Witness::None),
                Some((i, j)) => Check::new(
                    CheckKind::OrbitCounting,
                    false,
                    Witness::Entry {
                        row: sectors[i],
                        col: sectors[j],
                        expected: counted[(i, j)],
                        found: fused[(i, j)],
                    },
                ),
            }
        }
        _ => Check {
            kind: CheckKind::OrbitCounting,
            status: CheckStatus::NotApplicable,
            witness: Witness::None,
        },
    });

    ValidationReport { checks }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum EntryId {
    SimpleCurrent { order: usize, generators: Vec<RawLabel> },
    Exceptional(ExceptionalId),
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryId::SimpleCurrent { order, generators } => {
                write!(f, "simple-current order {order} <")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(">")
            }
            EntryId::Exceptional(id) => write!(f, "exceptional ({id})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedEntry {
    pub id: EntryId,
    pub theta: Theta,
    pub vacuum_row: InvariantRow,
    pub report: ValidationReport,
    /// For simple-current entries, whether `H` lies in the maximal group.
    pub within_max_cyclic: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub level: Level,
    pub max_cyclic: MaxCyclic,
    pub entries: Vec<ClassifiedEntry>,
}

impl Classification {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.report.passed())
    }

    pub fn exceptional_ids(&self) -> Vec<ExceptionalId> {
        self.entries
            .iter()
            .filter_map(|e| match e.id {
                EntryId::Exceptional(id) => Some(id),
                _ => None,
            })
            .collect()
    }
}

fn entry(level: Level, id: EntryId, theta: Theta, within_max_cyclic: Option<bool>) -> ClassifiedEntry {
    ClassifiedEntry {
        id,
        vacuum_row: vacuum_row(level, &theta),
        report: verify_theta(level, &theta),
        theta,
        within_max_cyclic,
    }
}

/// All local simple-current extensions at `level`, by subgroup order then
/// generators, followed by the exceptional entries of that level.
pub fn classify(level: Level) -> Result<Classification> {
    let max = max_cyclic(level)?;
    let mut entries = Vec::new();
    for h in local_subgroups(level)? {
        let id = EntryId::SimpleCurrent { order: h.order(), generators: h.generators.clone() };
        let within = h.is_subgroup_of(&max.group);
        let theta = theta_from_subgroup(level, &h)?;
        entries.push(entry(level, id, theta, Some(within)));
    }
    for theta in exceptional_catalogue().into_iter().filter(|t| t.level == level) {
        let Provenance::Exceptional(id) = theta.provenance else { unreachable!() };
        entries.push(entry(level, EntryId::Exceptional(id), theta, None));
    }
    Ok(Classification { level, max_cyclic: max, entries })
}
