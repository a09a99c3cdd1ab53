use crate::rational::Rational;
use thiserror::Error;

/// Rejected inputs: indices outside the ADE classification, families outside
/// general type, or parameters outside the tabulated range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("A_n requires n >= 1, got n = {0}")]
    AIndexOutOfRange(i64),
    /// D_2 and D_3 coincide with A-type configurations and the group order
    /// 4(n - 2) degenerates there, so they are rejected outright.
    #[error("D_n requires n >= 4 (D_2/D_3 are A-type configurations in disguise), got n = {0}")]
    DIndexOutOfRange(i64),
    #[error("E_n requires n in {{6, 7, 8}}, got n = {0}")]
    EIndexOutOfRange(i64),
    #[error("hypersurface degree must be at least 5 for general type, got d = {0}")]
    DegreeTooSmall(i64),
    #[error("cover degree must be at least 2, got n = {0}")]
    CoverDegreeTooSmall(i64),
    #[error("cover degree n = {n} must divide the branch degree d = {d}")]
    NotADivisor { d: i64, n: i64 },
    #[error("excluded non-general-type pair (d, n) = ({d}, {n})")]
    ExcludedPair { d: i64, n: i64 },
    #[error("no tabulated A_1 count for degree {0}; the table covers 13 <= d <= 19")]
    NoTabulatedCount(i64),
    #[error("a branched cover needs at least 2 curves, got {0}")]
    TooFewCurves(usize),
    #[error("branch curve degrees must be positive, got {0}")]
    NonPositiveCurveDegree(i64),
    #[error("line arrangement needs v >= 1 and cover degree n >= 2, got v = {v}, n = {n}")]
    BadLineCover { v: i64, n: i64 },
    #[error("a union of d = v*n > 4 lines is required, got d = {0}")]
    LineCountTooSmall(i64),
    #[error("exception grid needs v_max >= 1 and n_max >= 4, got v_max = {v_max}, n_max = {n_max}")]
    BadExceptionGrid { v_max: i64, n_max: i64 },
    #[error("the small-cover closed form applies to n in {{2, 3}}, got n = {0}")]
    BadSmallCoverDegree(i64),
    #[error("ramified cover test needs d >= 5, c >= 1, k >= 2, got d = {d}, c = {c}, k = {k}")]
    BadRamParams { d: i64, c: i64, k: i64 },
    #[error("Chern ratios are undefined unless c1^2 > 0, got c1^2 = {0}")]
    NonPositiveC1Sq(Rational),
    #[error("singularity count does not fit the supported range")]
    CountOverflow,
}
