//! JSON payloads. Every type here derives `Deserialize` and `PartialEq` so
//! that emitted documents can be parsed back and compared.

use n2sc_core::{
    self as core, alpha_hom_matrix, is_unit, phase_pair, qdim, spectrum, vacuum_row, verify_theta,
    CheckStatus, Classification, ClassifiedEntry, CurrentGroup, EntryId, LabelOrbit, Level, MaxCyclic,
    MaxCyclicCase, PhaseExponent, Provenance, RawLabel, Sector, Theta, TwoModFourBranch, Unit, UnitElement,
    UnitarityClass, ValidationReport, Witness,
};
use serde::{Deserialize, Serialize};

/// Bumped on any payload shape change.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<P> {
    pub schema_version: String,
    /// `None` for commands that are not tied to a level (`unitarity`).
    pub level: Option<u32>,
    pub command: String,
    pub payload: P,
    pub warnings: Vec<String>,
}

impl<P> Envelope<P> {
    pub fn new(level: Option<u32>, command: &str, payload: P, warnings: Vec<String>) -> Self {
        Envelope {
            schema_version: SCHEMA_VERSION.to_string(),
            level,
            command: command.to_string(),
            payload,
            warnings,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDto {
    pub num: i64,
    pub den: i64,
}

impl From<core::Rational> for RationalDto {
    fn from(r: core::Rational) -> Self {
        RationalDto { num: *r.numer(), den: *r.denom() }
    }
}

impl From<PhaseExponent> for RationalDto {
    fn from(p: PhaseExponent) -> Self {
        p.value().into()
    }
}

impl std::fmt::Display for RationalDto {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDto {
    pub l: u32,
    pub m: u32,
    pub partner: [u32; 2],
}

impl From<LabelOrbit> for OrbitDto {
    fn from(o: LabelOrbit) -> Self {
        let (c, p) = (o.canonical(), o.partner());
        OrbitDto { l: c.l, m: c.m, partner: [p.l, p.m] }
    }
}

fn pair(x: RawLabel) -> [u32; 2] {
    [x.l, x.m]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub orbit: OrbitDto,
    pub h: RationalDto,
    pub q: RationalDto,
    /// Phase exponents of the canonical form and of the partner.
    pub omega: [RationalDto; 2],
    pub d: f64,
    pub is_unit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPayload {
    pub central_charge: RationalDto,
    pub orbits: Vec<SpectrumRow>,
}

pub fn spectrum_payload(level: Level) -> SpectrumPayload {
    let orbits = spectrum(level)
        .into_iter()
        .map(|o| {
            let [a, b] = phase_pair(level, o);
            SpectrumRow {
                orbit: o.into(),
                h: core::weight(level, o.canonical()).into(),
                q: core::charge(level, o.canonical()).into(),
                omega: [a.into(), b.into()],
                d: qdim(level, o),
                is_unit: is_unit(level, o),
            }
        })
        .collect();
    SpectrumPayload { central_charge: level.central_charge().into(), orbits }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub orbit: OrbitDto,
    pub multiplicity: u32,
}

fn terms(sector: &Sector) -> Vec<TermDto> {
    sector.terms().map(|(&o, &k)| TermDto { orbit: o.into(), multiplicity: k }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusePayload {
    pub left: OrbitDto,
    pub right: OrbitDto,
    pub terms: Vec<TermDto>,
    pub display: String,
}

pub fn fuse_payload(level: Level, a: LabelOrbit, b: LabelOrbit) -> FusePayload {
    let product = core::fuse(level, a, b);
    FusePayload { left: a.into(), right: b.into(), terms: terms(&product), display: product.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDto {
    pub orbit: OrbitDto,
    pub written_form: [u32; 2],
    pub omega: RationalDto,
}

impl From<&UnitElement> for FormDto {
    fn from(u: &UnitElement) -> Self {
        FormDto { orbit: u.orbit.into(), written_form: pair(u.written_form), omega: u.phase.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDto {
    pub order: usize,
    /// Invariant factors; empty for the trivial group.
    pub structure: Vec<u32>,
    pub structure_display: String,
    pub generators: Vec<[u32; 2]>,
    pub elements: Vec<FormDto>,
}

impl From<&CurrentGroup> for GroupDto {
    fn from(g: &CurrentGroup) -> Self {
        GroupDto {
            order: g.order(),
            structure: g.structure.factors().to_vec(),
            structure_display: g.structure.to_string(),
            generators: g.generators.iter().map(|&x| pair(x)).collect(),
            elements: g.elements.iter().map(FormDto::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitDto {
    pub orbit: OrbitDto,
    pub forms: [FormDto; 2],
}

impl From<&Unit> for UnitDto {
    fn from(u: &Unit) -> Self {
        UnitDto { orbit: u.orbit.into(), forms: [(&u.forms[0]).into(), (&u.forms[1]).into()] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleCurrentsPayload {
    pub units: Vec<UnitDto>,
    pub written_form_group: GroupDto,
}

pub fn simple_currents_payload(level: Level) -> core::Result<SimpleCurrentsPayload> {
    let units = core::units(level)?;
    let group = core::unit_group_structure(level)?;
    Ok(SimpleCurrentsPayload {
        units: units.iter().map(UnitDto::from).collect(),
        written_form_group: (&group).into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum CaseDto {
    Odd {
        p: u32,
        generator: [u32; 2],
    },
    ZeroModFour {
        p: u32,
        top_phase: RationalDto,
    },
    TwoModFour {
        m: u32,
        top_phase: RationalDto,
        half_phase: RationalDto,
        half_label_valid: bool,
        identity_premises: bool,
        identity_exponent: RationalDto,
        branch: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxCyclicPayload {
    pub analysis: CaseDto,
    pub group: GroupDto,
}

impl From<&MaxCyclic> for MaxCyclicPayload {
    fn from(mc: &MaxCyclic) -> Self {
        let analysis = match &mc.case {
            MaxCyclicCase::Odd { p, generator } => CaseDto::Odd { p: *p, generator: pair(*generator) },
            MaxCyclicCase::ZeroModFour { p, top_phase } => {
                CaseDto::ZeroModFour { p: *p, top_phase: (*top_phase).into() }
            }
            MaxCyclicCase::TwoModFour {
                m,
                top_phase,
                half_phase,
                half_label_valid,
                identity_premises,
                identity_exponent,
                branch,
            } => CaseDto::TwoModFour {
                m: *m,
                top_phase: (*top_phase).into(),
                half_phase: (*half_phase).into(),
                half_label_valid: *half_label_valid,
                identity_premises: *identity_premises,
                identity_exponent: (*identity_exponent).into(),
                branch: match branch {
                    TwoModFourBranch::MinusOne => "minus-one",
                    TwoModFourBranch::PlusMinusI => "plus-minus-i",
                    TwoModFourBranch::Unexpected => "unexpected",
                }
                .to_string(),
            },
        };
        MaxCyclicPayload { analysis, group: (&mc.group).into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessDto {
    None,
    Orbit { orbit: OrbitDto },
    Count { expected: u64, found: u64 },
    Index { value: f64 },
    Entry { row: OrbitDto, col: OrbitDto, expected: u32, found: u32 },
}

impl From<&Witness> for WitnessDto {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::None => WitnessDto::None,
            Witness::Orbit(o) => WitnessDto::Orbit { orbit: (*o).into() },
            Witness::Count { expected, found } => WitnessDto::Count { expected: *expected, found: *found },
            Witness::Index(v) => WitnessDto::Index { value: *v },
            Witness::Entry { row, col, expected, found } => WitnessDto::Entry {
                row: (*row).into(),
                col: (*col).into(),
                expected: *expected,
                found: *found,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub status: String,
    pub witness: WitnessDto,
}

pub const REPORT_SCOPE: &str = "necessary multiplicity-level conditions only";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDto {
    pub scope: String,
    pub passed: bool,
    pub checks: Vec<CheckDto>,
}

impl From<&ValidationReport> for ReportDto {
    fn from(r: &ValidationReport) -> Self {
        ReportDto {
            scope: REPORT_SCOPE.to_string(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDto {
                    name: c.kind.name().to_string(),
                    status: match c.status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "fail",
                        CheckStatus::NotApplicable => "n/a",
                    }
                    .to_string(),
                    witness: (&c.witness).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaDto {
    pub provenance: String,
    pub terms: Vec<TermDto>,
    /// Phase-zero written form of each constituent, where one exists.
    pub integral_forms: Vec<Option<[u32; 2]>>,
    pub display: String,
    pub index: f64,
}

fn provenance_label(p: &Provenance) -> String {
    match p {
        Provenance::SimpleCurrent(h) => format!("simple-current |H|={}", h.order()),
        Provenance::Exceptional(id) => format!("exceptional ({id})"),
        Provenance::Candidate => "candidate".to_string(),
    }
}

fn theta_dto(level: Level, theta: &Theta) -> ThetaDto {
    ThetaDto {
        provenance: provenance_label(&theta.provenance),
        terms: terms(&theta.sector),
        integral_forms: theta.sector.orbits().map(|o| o.integral_form(level).map(pair)).collect(),
        display: theta.sector.to_string(),
        index: theta.index,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntryDto {
    pub orbit: OrbitDto,
    pub z: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantPayload {
    pub theta: ThetaDto,
    /// Every orbit in spectrum order, zeros included.
    pub vacuum_row: Vec<RowEntryDto>,
    /// `⟨θλ, μ⟩`, rows and columns in spectrum order.
    pub alpha_matrix: Vec<Vec<u32>>,
    pub report: ReportDto,
}

pub fn invariant_payload(level: Level, theta: &Theta) -> InvariantPayload {
    let row = vacuum_row(level, theta);
    let matrix = alpha_hom_matrix(level, theta);
    InvariantPayload {
        theta: theta_dto(level, theta),
        vacuum_row: row.entries.iter().map(|(&o, &z)| RowEntryDto { orbit: o.into(), z }).collect(),
        alpha_matrix: matrix.rows().map(<[u32]>::to_vec).collect(),
        report: (&verify_theta(level, theta)).into(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryDto {
    /// `a`..`d` for exceptional entries, `H<generators>` for simple currents.
    pub id: String,
    pub kind: String,
    pub theta: ThetaDto,
    /// Nonzero entries of `Z(0, μ)`.
    pub vacuum_row: Vec<RowEntryDto>,
    pub report: ReportDto,
    pub within_max_cyclic: Option<bool>,
    pub notes: Vec<String>,
}

pub fn entry_id(id: &EntryId) -> String {
    match id {
        EntryId::SimpleCurrent { generators, .. } => {
            let gens: Vec<String> = generators.iter().map(ToString::to_string).collect();
            format!("H<{}>", gens.join(","))
        }
        EntryId::Exceptional(x) => x.to_string(),
    }
}

fn entry_dto(level: Level, e: &ClassifiedEntry) -> EntryDto {
    let (kind, notes) = match e.id {
        EntryId::SimpleCurrent { .. } => ("simple-current", vec![]),
        EntryId::Exceptional(_) => (
            "exceptional",
            vec!["algebra structure and conformal embedding are not checked at this level".to_string()],
        ),
    };
    EntryDto {
        id: entry_id(&e.id),
        kind: kind.to_string(),
        theta: theta_dto(level, &e.theta),
        vacuum_row: e.vacuum_row.support().map(|(&o, &z)| RowEntryDto { orbit: o.into(), z }).collect(),
        report: (&e.report).into(),
        within_max_cyclic: e.within_max_cyclic,
        notes,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyPayload {
    pub max_cyclic: MaxCyclicPayload,
    pub entries: Vec<EntryDto>,
}

pub fn classify_payload(c: &Classification) -> ClassifyPayload {
    ClassifyPayload {
        max_cyclic: (&c.max_cyclic).into(),
        entries: c.entries.iter().map(|e| entry_dto(c.level, e)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ns3Witness {
    pub n: u32,
    pub l: i64,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitarityPayload {
    pub c: RationalDto,
    pub h: RationalDto,
    pub q: RationalDto,
    pub class: String,
    pub witness: Option<Ns3Witness>,
}

pub fn unitarity_payload(c: core::Rational, h: core::Rational, q: core::Rational) -> UnitarityPayload {
    let class = core::unitarity_class(c, h, q);
    let (name, witness) = match class {
        UnitarityClass::Ns1 => ("NS1", None),
        UnitarityClass::Ns2 => ("NS2", None),
        UnitarityClass::Ns3 { n, l, m } => ("NS3", Some(Ns3Witness { n, l, m })),
        UnitarityClass::NotUnitary => ("not-unitary", None),
    };
    UnitarityPayload { c: c.into(), h: h.into(), q: q.into(), class: name.to_string(), witness }
}
