//! Du Val (ADE) singularities and multisets of them.
//!
//! A Du Val point is the quotient of the plane by a finite subgroup of
//! `SL(2, C)`; the type determines the group order and, through it, the
//! exact amount by which the point shifts the orbifold Chern numbers away
//! from those of the minimal resolution.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::DomainError;
use crate::rational::{frac, rat, Rational};

/// The three families of the ADE classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DuValKind {
    A,
    D,
    E,
}

impl fmt::Display for DuValKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DuValKind::A => "A",
            DuValKind::D => "D",
            DuValKind::E => "E",
        })
    }
}

/// A single Du Val singularity type: `A_n` (n >= 1), `D_n` (n >= 4) or
/// `E_6`, `E_7`, `E_8`. Construction validates the index, so every value of
/// this type names an actual singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdeSingularity {
    kind: DuValKind,
    index: u32,
}

impl AdeSingularity {
    pub fn new(kind: DuValKind, n: i64) -> Result<Self, DomainError> {
        let valid = match kind {
            DuValKind::A => n >= 1,
            DuValKind::D => n >= 4,
            DuValKind::E => (6..=8).contains(&n),
        };
        if !valid || n > u32::MAX as i64 {
            return Err(match kind {
                DuValKind::A => DomainError::AIndexOutOfRange(n),
                DuValKind::D => DomainError::DIndexOutOfRange(n),
                DuValKind::E => DomainError::EIndexOutOfRange(n),
            });
        }
        Ok(Self {
            kind,
            index: n as u32,
        })
    }

    pub fn a(n: i64) -> Result<Self, DomainError> {
        Self::new(DuValKind::A, n)
    }

    pub fn d(n: i64) -> Result<Self, DomainError> {
        Self::new(DuValKind::D, n)
    }

    pub fn e(n: i64) -> Result<Self, DomainError> {
        Self::new(DuValKind::E, n)
    }

    pub fn kind(&self) -> DuValKind {
        self.kind
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Order of the corresponding finite subgroup of `SL(2, C)`: cyclic of
    /// order `n + 1` for `A_n`, binary dihedral of order `4(n - 2)` for
    /// `D_n`, and the binary tetrahedral, octahedral and icosahedral groups
    /// (orders 24, 48, 120) for `E_6`, `E_7`, `E_8`.
    pub fn group_order(&self) -> u64 {
        let n = self.index as u64;
        match self.kind {
            DuValKind::A => n + 1,
            DuValKind::D => 4 * (n - 2),
            DuValKind::E => match n {
                6 => 24,
                7 => 48,
                _ => 120,
            },
        }
    }

    /// Local defect `(n + 1) - 1/|G|`: the exact amount one singularity of
    /// this type raises `s2(orb)` above `s2(Y)`. `n + 1` is the Euler number
    /// of the exceptional tree of n rational curves; `1/|G|` is the orbifold
    /// point's own share. Always strictly positive.
    pub fn local_defect(&self) -> Rational {
        rat(self.index as i64 + 1) - frac(1, self.group_order() as i64)
    }

    /// Increase of the certified `m^3` growth coefficient contributed by one
    /// extra singularity of this type: `local_defect / 12`. One node (`A_1`)
    /// jumps the coefficient by exactly 1/8.
    pub fn growth_jump(&self) -> Rational {
        self.local_defect() / rat(12)
    }
}

impl fmt::Display for AdeSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.index)
    }
}

/// A multiset of Du Val singularities, normalized eagerly: duplicate types
/// are merged by adding counts and zero counts are dropped, so structural
/// equality of profiles is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SingularityProfile {
    entries: BTreeMap<AdeSingularity, u64>,
}

impl SingularityProfile {
    pub fn new() -> Self {
        Self::default()
    }

    /// Profile with a single entry. A zero count yields the empty profile.
    pub fn single(s: AdeSingularity, count: u64) -> Self {
        let mut p = Self::new();
        p.add(s, count);
        p
    }

    pub fn from_entries<I: IntoIterator<Item = (AdeSingularity, u64)>>(entries: I) -> Self {
        let mut p = Self::new();
        for (s, count) in entries {
            p.add(s, count);
        }
        p
    }

    pub fn add(&mut self, s: AdeSingularity, count: u64) {
        if count > 0 {
            *self.entries.entry(s).or_insert(0) += count;
        }
    }

    pub fn count(&self, s: AdeSingularity) -> u64 {
        self.entries.get(&s).copied().unwrap_or(0)
    }

    /// Entries in a fixed order (A before D before E, then by index).
    pub fn iter(&self) -> impl Iterator<Item = (AdeSingularity, u64)> + '_ {
        self.entries.iter().map(|(s, c)| (*s, *c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct singularity types present.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Total number of singular points.
    pub fn total_count(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Sum of `count * local_defect` over all entries; equals
    /// `s2(orb) - s2(Y)` for any surface carrying this profile.
    pub fn total_defect(&self) -> Rational {
        self.iter()
            .map(|(s, count)| rat(count as i64) * s.local_defect())
            .sum()
    }
}

impl fmt::Display for SingularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("smooth");
        }
        let mut first = true;
        for (s, count) in self.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{count} x {s}")?;
            first = false;
        }
        Ok(())
    }
}
