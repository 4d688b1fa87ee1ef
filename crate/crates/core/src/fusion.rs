//! The fusion ring on orbits.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::label::{qdim, spectrum, LabelOrbit, RawLabel};
use crate::{IntMatrix, Level};

/// A formal sum of orbits with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sector {
    terms: BTreeMap<LabelOrbit, u32>,
}

impl Sector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn irreducible(orbit: LabelOrbit) -> Self {
        let mut s = Self::new();
        s.add(orbit, 1);
        s
    }

    pub fn vacuum(level: Level) -> Self {
        Self::irreducible(LabelOrbit::vacuum(level))
    }

    /// Adds `mult` copies of `orbit`; a zero multiplicity is a no-op.
    pub fn add(&mut self, orbit: LabelOrbit, mult: u32) {
        if mult > 0 {
            *self.terms.entry(orbit).or_insert(0) += mult;
        }
    }

    pub fn add_sector(&mut self, other: &Sector) {
        for (&o, &k) in other.terms() {
            self.add(o, k);
        }
    }

    pub fn multiplicity(&self, orbit: &LabelOrbit) -> u32 {
        self.terms.get(orbit).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&LabelOrbit, &u32)> {
        self.terms.iter()
    }

    pub fn orbits(&self) -> impl Iterator<Item = LabelOrbit> + '_ {
        self.terms.keys().copied()
    }

    /// Number of distinct orbits.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().map(|&k| u64::from(k)).sum()
    }

    /// `Σ mult · qdim`.
    pub fn qdim(&self, level: Level) -> f64 {
        self.terms.iter().map(|(&o, &k)| f64::from(k) * qdim(level, o)).sum()
    }
}

impl FromIterator<LabelOrbit> for Sector {
    fn from_iter<I: IntoIterator<Item = LabelOrbit>>(iter: I) -> Self {
        let mut s = Sector::new();
        for o in iter {
            s.add(o, 1);
        }
        s
    }
}

impl FromIterator<(LabelOrbit, u32)> for Sector {
    fn from_iter<I: IntoIterator<Item = (LabelOrbit, u32)>>(iter: I) -> Self {
        let mut s = Sector::new();
        for (o, k) in iter {
            s.add(o, k);
        }
        s
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (o, &k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if k != 1 {
                write!(f, "{k}")?;
            }
            write!(f, "{o}")?;
        }
        Ok(())
    }
}

/// The fusion formula on two written forms, before identification:
/// `(l1,m1)(l2,m2) = ⊕ (l, m1+m2)` over `|l1-l2| <= l <= min(l1+l2, 2n-l1-l2)`
/// with `l = l1 + l2 (mod 2)`.
pub fn fuse_raw(level: Level, x: RawLabel, y: RawLabel) -> Vec<RawLabel> {
    let lo = x.l.abs_diff(y.l);
    let hi = (x.l + y.l).min(2 * level.n() - x.l - y.l);
    let m = (x.m + y.m) % level.modulus();
    (lo..=hi).step_by(2).map(|l| RawLabel { l, m }).collect()
}

pub fn fuse(level: Level, a: LabelOrbit, b: LabelOrbit) -> Sector {
    fuse_raw(level, a.canonical(), b.canonical()).into_iter().map(|x| LabelOrbit::of(level, x)).collect()
}

pub fn fuse_sectors(level: Level, a: &Sector, b: &Sector) -> Sector {
    let mut out = Sector::new();
    for (&x, &j) in a.terms() {
        for (&y, &k) in b.terms() {
            for z in fuse(level, x, y).orbits() {
                out.add(z, j * k);
            }
        }
    }
    out
}

/// `a` fused with itself `k` times; `k = 0` gives the vacuum.
pub fn power(level: Level, a: LabelOrbit, k: u32) -> Sector {
    let base = Sector::irreducible(a);
    (0..k).fold(Sector::vacuum(level), |acc, _| fuse_sectors(level, &acc, &base))
}

/// The orbit of `(l, -m)`.
pub fn conjugate(level: Level, a: LabelOrbit) -> LabelOrbit {
    let x = a.canonical();
    LabelOrbit::of(level, RawLabel { l: x.l, m: (level.modulus() - x.m) % level.modulus() })
}

/// `dim Hom(a, b) = Σ mult_a · mult_b`.
pub fn hom_dim(a: &Sector, b: &Sector) -> u64 {
    a.terms().map(|(o, &k)| u64::from(k) * u64::from(b.multiplicity(o))).sum()
}

/// `N_a[x][y] = ⟨a·x, y⟩`, rows and columns in spectrum order.
pub fn fusion_matrix(level: Level, a: LabelOrbit) -> IntMatrix {
    let sectors = spectrum(level);
    let mut out = IntMatrix::zeros(sectors.len());
    for (i, &x) in sectors.iter().enumerate() {
        for (y, &k) in fuse(level, a, x).terms() {
            let j = sectors.binary_search(y).expect("fusion output lies in the spectrum");
            out[(i, j)] = k;
        }
    }
    out
}
