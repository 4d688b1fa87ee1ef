//! Sector data of the N=2 superconformal minimal models.
//!
//! The level-`n` model has central charge `c = 3n/(n+2)`. Its irreducible
//! sectors are orbits of pairs `(l, m)` under `(l, m) ~ (n - l, m + n + 2)`,
//! and everything downstream (fusion, simple currents, extensions) is
//! computed on those orbits with exact rational phases.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod currents;
mod error;
pub mod extensions;
pub mod fusion;
pub mod group;
pub mod label;
mod level;
pub mod matrix;
mod phase;
pub mod unitarity;

pub use currents::{
    local_subgroups, max_cyclic, monodromy_exponent, unit_group_structure, units, CurrentGroup, MaxCyclic,
    MaxCyclicCase, TwoModFourBranch, Unit, UnitElement,
};
pub use error::Error;
pub use extensions::{
    alpha_hom_matrix, classify, exceptional_catalogue, orbit_count_matrix, theta_from_subgroup, vacuum_row,
    verify_theta, Check, CheckKind, CheckStatus, Classification, ClassifiedEntry, EntryId, ExceptionalId,
    InvariantRow, Provenance, Theta, ValidationReport, Witness,
};
pub use fusion::{conjugate, fuse, fuse_raw, fuse_sectors, fusion_matrix, hom_dim, power, Sector};
pub use group::GroupStructure;
pub use label::{
    canonicalize, charge, is_unit, phase_pair, qdim, spectrum, statistics_phase, weight, LabelOrbit, RawLabel,
};
pub use level::Level;
pub use matrix::IntMatrix;
pub use phase::PhaseExponent;
pub use unitarity::{unitarity_class, UnitarityClass};

/// Exact rational type used for weights, charges and central charges.
pub type Rational = num_rational::Rational64;

pub type Result<T, E = Error> = core::result::Result<T, E>;
