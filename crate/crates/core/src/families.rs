//! Explicit surface families with closed-form Chern numbers and thresholds.
//!
//! Three constructions, all living in or over the projective plane/space:
//!
//! * degree-`d` hypersurfaces with `ell` singularities of type `A_k`,
//! * `n`-cyclic covers of the plane branched along a nodal curve of degree
//!   `d` divisible by `n` (each branch node sits under an `A_{n-1}` point),
//! * the special case of `d = vn` lines, where the node count is forced.
//!
//! Each family comes with the closed-form criterion value or threshold, kept
//! separate from the generic pipeline in [`crate::chern`] so the two routes
//! can be checked against each other exactly.

use num::bigint::BigInt;
use num::ToPrimitive;

use crate::chern::SurfaceRecord;
use crate::error::DomainError;
use crate::rational::{rat, Rational};
use crate::singularity::{AdeSingularity, SingularityProfile};

/// Pairs `(d, n)` for which the cyclic cover is not of general type; every
/// downstream formula presumes general type, so these are hard errors.
const EXCLUDED_PAIRS: [(i64, i64); 5] = [(2, 2), (4, 2), (6, 2), (3, 3), (4, 4)];

/// Degrees 13..=19 with the largest published `A_1` counts for nodal
/// surfaces of that degree (Chmutov's construction).
const CHMUTOV_TABLE: [(i64, u64); 7] = [
    (13, 732),
    (14, 949),
    (15, 1155),
    (16, 1450),
    (17, 1728),
    (18, 2097),
    (19, 2457),
];

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Chern numbers of the minimal resolution of a degree-`d` hypersurface in
/// projective 3-space with at most ADE singularities:
/// `c1^2 = d(d-4)^2`, `c2 = d(d^2-4d+6)`, hence `s2 = 10d - 4d^2`.
pub fn hypersurface_chern(d: i64) -> Result<(Rational, Rational), DomainError> {
    if d < 5 {
        return Err(DomainError::DegreeTooSmall(d));
    }
    let db = bi(d);
    let c1_sq = &db * (&db - bi(4)) * (&db - bi(4));
    let c2 = &db * (&db * &db - bi(4) * &db + bi(6));
    Ok((Rational::from_integer(c1_sq), Rational::from_integer(c2)))
}

/// A degree-`d` hypersurface with `ell` singular points of type `A_k`.
/// Validated on construction: `d >= 5`, `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypersurfaceAk {
    d: i64,
    singularity: AdeSingularity,
    ell: u64,
}

impl HypersurfaceAk {
    pub fn new(d: i64, k: i64, ell: u64) -> Result<Self, DomainError> {
        if d < 5 {
            return Err(DomainError::DegreeTooSmall(d));
        }
        Ok(Self {
            d,
            singularity: AdeSingularity::a(k)?,
            ell,
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn k(&self) -> i64 {
        self.singularity.index() as i64
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }
}

/// Surface record for a hypersurface with `A_k` points.
pub fn make_hypersurface_ak(spec: &HypersurfaceAk) -> SurfaceRecord {
    let (c1_sq, c2) = hypersurface_chern(spec.d).expect("validated on construction");
    SurfaceRecord::new(
        format!(
            "degree-{} hypersurface with {} x {}",
            spec.d, spec.ell, spec.singularity
        ),
        c1_sq,
        c2,
        SingularityProfile::single(spec.singularity, spec.ell),
    )
}

/// Exact threshold `4(k+1)(2d^2 - 5d) / (k(k+2))` on the number of `A_k`
/// points of a degree-`d` hypersurface: any `ell` strictly above it makes the
/// criterion positive. The threshold itself can be an integer (d = 13, k = 1
/// gives exactly 728), in which case the criterion vanishes there.
pub fn ak_threshold(d: i64, k: i64) -> Result<Rational, DomainError> {
    if d < 5 {
        return Err(DomainError::DegreeTooSmall(d));
    }
    if k < 1 {
        return Err(DomainError::AIndexOutOfRange(k));
    }
    let db = bi(d);
    let kb = bi(k);
    let numer = bi(4) * (&kb + bi(1)) * (bi(2) * &db * &db - bi(5) * &db);
    let denom = &kb * (&kb + bi(2));
    Ok(Rational::new(numer, denom))
}

/// Least integer count of `A_k` points that certifies bigness:
/// `floor(ak_threshold) + 1`.
pub fn least_nodes_for_big(d: i64, k: i64) -> Result<u64, DomainError> {
    let least = ak_threshold(d, k)?.floor().to_integer() + bi(1);
    least.to_u64().ok_or(DomainError::CountOverflow)
}

/// Largest published `A_1` count for a nodal degree-`d` surface. Only the
/// degrees 13..=19 are tabulated; anything else is an explicit error rather
/// than an extrapolation.
pub fn chmutov_mu(d: i64) -> Result<u64, DomainError> {
    CHMUTOV_TABLE
        .iter()
        .find(|(deg, _)| *deg == d)
        .map(|(_, mu)| *mu)
        .ok_or(DomainError::NoTabulatedCount(d))
}

/// Where a node-count record comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeSource {
    /// Tabulated Chmutov construction.
    Chmutov,
    /// Lower bound `d^2(d-1)/4` from Segre's construction.
    SegreBound,
}

/// A literature record: a degree and an achievable `A_1` count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeRecord {
    pub d: i64,
    /// Always positive.
    pub count: u64,
    pub source: NodeSource,
}

/// All tabulated Chmutov records, in degree order.
pub fn chmutov_records() -> Vec<NodeRecord> {
    CHMUTOV_TABLE
        .iter()
        .map(|&(d, count)| NodeRecord {
            d,
            count,
            source: NodeSource::Chmutov,
        })
        .collect()
}

/// Segre's nodal hypersurfaces realize at least `d^2(d-1)/4` nodes in degree
/// `d >= 1`. Exceeds [`ak_threshold`]`(d, 1)` exactly from `d = 20` on.
pub fn segre_node_bound(d: i64) -> Rational {
    let db = bi(d);
    Rational::new(&db * &db * (&db - bi(1)), bi(4))
}

fn validate_cyclic(d: i64, n: i64) -> Result<(), DomainError> {
    if n < 2 {
        return Err(DomainError::CoverDegreeTooSmall(n));
    }
    if d < n || d % n != 0 {
        return Err(DomainError::NotADivisor { d, n });
    }
    if EXCLUDED_PAIRS.contains(&(d, n)) {
        return Err(DomainError::ExcludedPair { d, n });
    }
    Ok(())
}

/// Chern numbers of the minimal resolution of the `n`-cyclic cover of the
/// plane branched along a nodal curve of degree `d`:
/// `c1^2 = n(-3 + (1 - 1/n)d)^2`, `c2 = 3n + (n-1)(d^2 - 3d)`.
/// At `n = d` this is a degree-`d` hypersurface and the pair agrees with
/// [`hypersurface_chern`].
pub fn cyclic_cover_chern(d: i64, n: i64) -> Result<(Rational, Rational), DomainError> {
    validate_cyclic(d, n)?;
    let v = d / n;
    let nb = bi(n);
    let db = bi(d);
    // (1 - 1/n) d = (n - 1) v, so c1^2 stays integral.
    let base = (&nb - bi(1)) * bi(v) - bi(3);
    let c1_sq = &nb * &base * &base;
    let c2 = bi(3) * &nb + (&nb - bi(1)) * (&db * &db - bi(3) * &db);
    Ok((Rational::from_integer(c1_sq), Rational::from_integer(c2)))
}

/// An `n`-cyclic cover of the plane branched along a nodal union of smooth
/// curves of total degree `d` divisible by `n`. When the component degrees
/// are listed, each pairwise intersection point of the branch curve carries
/// an `A_{n-1}` singularity upstairs; without them the branch curve is taken
/// smooth and the cover has no singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCoverSpec {
    d: i64,
    n: i64,
    degrees: Option<Vec<i64>>,
    node_count: u64,
}

impl CyclicCoverSpec {
    /// Cover branched along a smooth curve of degree `d`.
    pub fn new(d: i64, n: i64) -> Result<Self, DomainError> {
        validate_cyclic(d, n)?;
        Ok(Self {
            d,
            n,
            degrees: None,
            node_count: 0,
        })
    }

    /// Cover branched along a normal crossing union of smooth curves with
    /// the given degrees; `d` is their sum.
    pub fn with_degrees(n: i64, degrees: Vec<i64>) -> Result<Self, DomainError> {
        let mut d: i64 = 0;
        for &dj in &degrees {
            if dj < 1 {
                return Err(DomainError::NonPositiveCurveDegree(dj));
            }
            d = d.checked_add(dj).ok_or(DomainError::CountOverflow)?;
        }
        validate_cyclic(d, n)?;
        // nodes of the branch curve = sum over pairs i < j of d_i * d_j
        let sum_sq: u128 = degrees.iter().map(|&dj| (dj as u128) * (dj as u128)).sum();
        let pairs = ((d as u128) * (d as u128) - sum_sq) / 2;
        let node_count = u64::try_from(pairs).map_err(|_| DomainError::CountOverflow)?;
        Ok(Self {
            d,
            n,
            degrees: Some(degrees),
            node_count,
        })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    /// Number of nodes of the branch curve, i.e. of `A_{n-1}` points on the
    /// cover. Zero for a smooth branch curve.
    pub fn node_count(&self) -> u64 {
        self.node_count
    }
}

/// Surface record for a cyclic cover of the plane.
pub fn make_cyclic_cover(spec: &CyclicCoverSpec) -> SurfaceRecord {
    let (c1_sq, c2) = cyclic_cover_chern(spec.d, spec.n).expect("validated on construction");
    let profile = if spec.node_count == 0 {
        SingularityProfile::new()
    } else {
        let s = AdeSingularity::a(spec.n - 1).expect("n >= 2 on construction");
        SingularityProfile::single(s, spec.node_count)
    };
    let name = match &spec.degrees {
        Some(degrees) => format!(
            "{}-cyclic cover branched along degrees {:?} (total {})",
            spec.n, degrees, spec.d
        ),
        None => format!(
            "{}-cyclic cover branched along a smooth degree-{} curve",
            spec.n, spec.d
        ),
    };
    SurfaceRecord::new(name, c1_sq, c2, profile)
}

/// Degree-`d = sum d_j` cover of the plane fully branched along `k >= 2`
/// curves: a degree-`d` hypersurface whose `A_{d-1}` points sit over the
/// pairwise intersections of the branch curves.
pub fn make_branched_cover_nd(degrees: &[i64]) -> Result<SurfaceRecord, DomainError> {
    if degrees.len() < 2 {
        return Err(DomainError::TooFewCurves(degrees.len()));
    }
    let mut d: i64 = 0;
    for &dj in degrees {
        if dj < 1 {
            return Err(DomainError::NonPositiveCurveDegree(dj));
        }
        d = d.checked_add(dj).ok_or(DomainError::CountOverflow)?;
    }
    if d < 5 {
        return Err(DomainError::DegreeTooSmall(d));
    }
    let spec = CyclicCoverSpec::with_degrees(d, degrees.to_vec())?;
    Ok(make_cyclic_cover(&spec))
}

/// Sufficient criterion for a degree-`d = sum d_j` branched cover with all
/// component degrees at least `c`: true iff
/// `k(k-1) > 8 d^2 (2d - 5) / (c^2 (d^2 - 1))` holds strictly.
pub fn ram_cover_test(d: i64, c: i64, k: i64) -> Result<bool, DomainError> {
    if d < 5 || c < 1 || k < 2 {
        return Err(DomainError::BadRamParams { d, c, k });
    }
    let db = bi(d);
    let lhs = rat(k) * rat(k - 1);
    let rhs = Rational::new(
        bi(8) * &db * &db * (bi(2) * &db - bi(5)),
        bi(c) * bi(c) * (&db * &db - bi(1)),
    );
    Ok(lhs > rhs)
}

fn validate_line_cover(v: i64, n: i64) -> Result<i64, DomainError> {
    if v < 1 || n < 2 {
        return Err(DomainError::BadLineCover { v, n });
    }
    let d = v.checked_mul(n).ok_or(DomainError::CountOverflow)?;
    if d <= 4 {
        return Err(DomainError::LineCountTooSmall(d));
    }
    if EXCLUDED_PAIRS.contains(&(d, n)) {
        return Err(DomainError::ExcludedPair { d, n });
    }
    Ok(d)
}

/// Closed-form criterion value for the `n`-cyclic cover branched along
/// `d = vn > 4` lines in general position:
/// `2n[6 - (n-1)(3v + v^2)] + (1/2)(nv - 1)(n^2 - 1)v`.
/// Must agree exactly with the pipeline value of [`make_line_cover`].
pub fn line_cover_criterion(v: i64, n: i64) -> Result<Rational, DomainError> {
    let d = validate_line_cover(v, n)?;
    let nb = bi(n);
    let vb = bi(v);
    let smooth_part = bi(2) * &nb * (bi(6) - (&nb - bi(1)) * (bi(3) * &vb + &vb * &vb));
    let node_part = Rational::new((bi(d) - bi(1)) * (&nb * &nb - bi(1)) * &vb, bi(2));
    Ok(Rational::from_integer(smooth_part) + node_part)
}

/// Pipeline route for the same surface: cyclic-cover Chern numbers plus an
/// `A_{n-1}` point for each of the `d(d-1)/2` intersection points of the
/// lines.
pub fn make_line_cover(v: i64, n: i64) -> Result<SurfaceRecord, DomainError> {
    let d = validate_line_cover(v, n)?;
    let (c1_sq, c2) = cyclic_cover_chern(d, n)?;
    let nodes = (d as u128) * (d as u128 - 1) / 2;
    let count = u64::try_from(nodes).map_err(|_| DomainError::CountOverflow)?;
    let s = AdeSingularity::a(n - 1)?;
    Ok(SurfaceRecord::new(
        format!("{n}-cyclic cover of {d} lines (v = {v})"),
        c1_sq,
        c2,
        SingularityProfile::single(s, count),
    ))
}

/// All pairs `(v, n)` in the grid `1 <= v <= v_max`, `4 <= n <= n_max` with
/// `vn > 4` whose line-cover criterion is not positive, in lexicographic
/// order. Finiteness beyond the grid is not certified here; the grid is the
/// caller's claim.
pub fn line_cover_exceptions(v_max: i64, n_max: i64) -> Result<Vec<(i64, i64)>, DomainError> {
    if v_max < 1 || n_max < 4 {
        return Err(DomainError::BadExceptionGrid { v_max, n_max });
    }
    let mut out = Vec::new();
    for v in 1..=v_max {
        for n in 4..=n_max {
            match line_cover_criterion(v, n) {
                Ok(value) => {
                    if value <= rat(0) {
                        out.push((v, n));
                    }
                }
                // pairs outside the hypothesis (vn <= 4) are not exceptions
                Err(DomainError::LineCountTooSmall(_)) | Err(DomainError::ExcludedPair { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// Line covers of degree `n = 2` or `3` never satisfy the criterion; the
/// closed forms are `24 - (27/2)v - v^2` and `36 - 40v`. Provided separately
/// so the general formula can be checked against them.
pub fn small_n_criterion(n: i64, v: i64) -> Result<Rational, DomainError> {
    if n != 2 && n != 3 {
        return Err(DomainError::BadSmallCoverDegree(n));
    }
    line_cover_criterion(v, n)
}
