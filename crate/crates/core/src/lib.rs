//! Exact arithmetic for the geography of canonical surfaces.
//!
//! A canonical surface `X` (at worst ADE singularities, positive canonical
//! divisor) carries two natural sets of Chern numbers: those of its minimal
//! resolution `Y` and the rational Chern numbers of the orbifold attached to
//! `X`. The difference between the two second Segre numbers
//! `s2 = c1^2 - c2` is a sum of local contributions, one per singular point,
//! and the sign of `s2(Y) + s2(orb)` decides whether the cotangent bundle of
//! `Y` is big: strict positivity certifies symmetric differentials growing
//! like `(s2(Y) + s2(orb)) / 12 * m^3`.
//!
//! Everything here is computed over arbitrary-precision rationals; no
//! floating point enters any criterion or table. The crate is split into
//!
//! * [`singularity`]: Du Val types, binary group orders, local defects;
//! * [`chern`]: orbifold Chern/Segre numbers and the bigness criterion;
//! * [`families`]: explicit surface families (nodal hypersurfaces, cyclic
//!   covers of the plane, line arrangements) with closed-form thresholds;
//! * [`geography`]: Chern-number inequalities and parameter sweeps.

pub mod chern;
pub mod error;
pub mod families;
pub mod geography;
pub mod rational;
pub mod singularity;

pub use chern::{evaluate_criterion, orbifold_c2, segre, CriterionVerdict, SurfaceRecord, Verdict};
pub use error::DomainError;
pub use rational::{frac, rat, Rational};
pub use singularity::{AdeSingularity, DuValKind, SingularityProfile};
