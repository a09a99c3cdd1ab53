//! Orbifold Chern/Segre numbers and the bigness criterion.
//!
//! For a canonical surface with minimal resolution `Y` and orbifold
//! structure, `c1^2` agrees on both sides while `c2` drops by the local
//! defect of each singular point:
//!
//! ```text
//! c2(orb) = c2(Y) - sum over singularities of count * ((n + 1) - 1/|G|)
//! ```
//!
//! Strict positivity of `s2(Y) + s2(orb)` certifies that the cotangent
//! bundle of `Y` is big, with at least `(s2(Y) + s2(orb)) / 12 * m^3`
//! independent symmetric differentials of degree `m`.

use std::fmt;

use crate::rational::{rat, Rational};
use crate::singularity::SingularityProfile;

/// Second Segre number `c1^2 - c2`.
pub fn segre(c1_sq: &Rational, c2: &Rational) -> Rational {
    c1_sq - c2
}

/// Orbifold second Chern number: `c2_y` minus the accumulated local defects
/// of the profile. An empty profile returns `c2_y` unchanged.
pub fn orbifold_c2(c2_y: &Rational, profile: &SingularityProfile) -> Rational {
    c2_y - profile.total_defect()
}

/// A canonical surface in the only form the criterion needs: the Chern
/// numbers of its minimal resolution and its singularity profile. There is
/// deliberately no second `c1^2` field; the orbifold shares it.
///
/// Chern numbers are rationals, not forced integers, so synthetic inputs are
/// legal; the constructors in [`crate::families`] always emit integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRecord {
    pub name: String,
    /// `c1^2(Y) = c1^2(orb)`.
    pub c1_sq: Rational,
    /// `c2(Y)` of the minimal resolution.
    pub c2: Rational,
    pub profile: SingularityProfile,
}

impl SurfaceRecord {
    pub fn new(
        name: impl Into<String>,
        c1_sq: Rational,
        c2: Rational,
        profile: SingularityProfile,
    ) -> Self {
        Self {
            name: name.into(),
            c1_sq,
            c2,
            profile,
        }
    }
}

/// Outcome of the criterion. The theorem is one-directional: a non-positive
/// value proves nothing, so the boundary case is inconclusive, never big.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Big,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Big => "BIG",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Everything the criterion computes for one surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    /// `s2(Y) = c1^2(Y) - c2(Y)`.
    pub s2_y: Rational,
    /// `s2(orb) = c1^2(Y) - c2(orb)`.
    pub s2_orb: Rational,
    /// `s2(Y) + s2(orb)`; strictly positive means big.
    pub criterion: Rational,
    pub verdict: Verdict,
    /// Certified lower bound `criterion / 12` on the `m^3` coefficient of
    /// the space of degree-`m` symmetric differentials; only reported when
    /// the verdict is [`Verdict::Big`].
    pub growth_coeff: Option<Rational>,
}

/// Evaluate the bigness criterion on one surface.
pub fn evaluate_criterion(surface: &SurfaceRecord) -> CriterionVerdict {
    let s2_y = segre(&surface.c1_sq, &surface.c2);
    let c2_orb = orbifold_c2(&surface.c2, &surface.profile);
    let s2_orb = segre(&surface.c1_sq, &c2_orb);
    let criterion = &s2_y + &s2_orb;
    let big = criterion > rat(0);
    CriterionVerdict {
        s2_y,
        s2_orb,
        verdict: if big { Verdict::Big } else { Verdict::Inconclusive },
        growth_coeff: big.then(|| &criterion / rat(12)),
        criterion,
    }
}
