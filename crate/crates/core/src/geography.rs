//! Position of a surface in the geography of Chern invariants, plus a sweep
//! driver that tabulates whole parameter ranges of the built-in families.
//!
//! The ratio `(c2(Y) + c2(orb)) / c1^2` recasts the bigness criterion: for
//! `c1^2 > 0` the criterion is positive exactly when that ratio is below 2.
//! The checks here locate a surface relative to the Bogomolov-Miyaoka-Yau
//! bound, the `c2 < (5/3) c1^2` region, and the Noether line.

use crate::chern::{evaluate_criterion, orbifold_c2, SurfaceRecord, Verdict};
use crate::error::DomainError;
use crate::families::{
    chmutov_mu, make_branched_cover_nd, make_cyclic_cover, make_hypersurface_ak, make_line_cover,
    CyclicCoverSpec, HypersurfaceAk,
};
use crate::rational::{rat, Rational};

/// Bogomolov-Miyaoka-Yau bound in its orbifold form: `c1^2 <= 3 c2(orb)`.
/// Every minimal resolution coming from a canonical surface satisfies it.
pub fn bmy_check(c1_sq: &Rational, c2_orb: &Rational) -> bool {
    *c1_sq <= rat(3) * c2_orb
}

/// Strict inequality `3 c2(Y) < 5 c1^2`. Follows from a positive criterion
/// together with the orbifold BMY bound, independently of the sign of c1^2.
pub fn chern_35_check(c1_sq: &Rational, c2_y: &Rational) -> bool {
    rat(3) * c2_y < rat(5) * c1_sq
}

/// Position relative to the Noether line `5 c1^2 = c2 - 36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoetherClass {
    Above,
    OnLine,
    Below,
}

impl std::fmt::Display for NoetherClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NoetherClass::Above => "ABOVE",
            NoetherClass::OnLine => "ON_LINE",
            NoetherClass::Below => "BELOW",
        })
    }
}

/// Compare `5 c1^2` against `c2 - 36`. Minimal surfaces of general type are
/// never `Below`.
pub fn noether_classify(c1_sq: &Rational, c2: &Rational) -> NoetherClass {
    let lhs = rat(5) * c1_sq;
    let rhs = c2 - rat(36);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => NoetherClass::Above,
        std::cmp::Ordering::Equal => NoetherClass::OnLine,
        std::cmp::Ordering::Less => NoetherClass::Below,
    }
}

/// Summary of where one surface sits; ratios are exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeographyReport {
    pub bmy_ok: bool,
    pub chern_35_ok: bool,
    pub noether_class: NoetherClass,
    /// `(c2(Y) + c2(orb)) / c1^2`; below 2 exactly when the criterion is
    /// positive.
    pub ratio_sum: Rational,
    /// `c2(Y) / c1^2`.
    pub c2_ratio: Rational,
}

/// Geography of a surface record. The ratios need `c1^2 > 0`; anything else
/// is a domain error (the criterion itself is still available through
/// [`evaluate_criterion`]).
pub fn geography_report(record: &SurfaceRecord) -> Result<GeographyReport, DomainError> {
    if record.c1_sq <= rat(0) {
        return Err(DomainError::NonPositiveC1Sq(record.c1_sq.clone()));
    }
    let c2_orb = orbifold_c2(&record.c2, &record.profile);
    Ok(GeographyReport {
        bmy_ok: bmy_check(&record.c1_sq, &c2_orb),
        chern_35_ok: chern_35_check(&record.c1_sq, &record.c2),
        noether_class: noether_classify(&record.c1_sq, &record.c2),
        ratio_sum: (&record.c2 + &c2_orb) / &record.c1_sq,
        c2_ratio: &record.c2 / &record.c1_sq,
    })
}

/// Inclusive integer range; empty when `lo > hi` (not an error).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn single(x: i64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Singularity count selector for hypersurface sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllSpec {
    /// Inclusive range of counts.
    Range(u64, u64),
    /// Use the tabulated record count for each degree; degrees without a
    /// tabulated count are skipped.
    Chmutov,
}

/// A family together with the ranges to sweep. Tuples are visited in
/// lexicographic order of the listed parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepFamily {
    /// Degree-`d` hypersurfaces with `ell` points of type `A_k`.
    Ak { d: IntRange, k: i64, ell: EllSpec },
    /// `n`-cyclic covers branched along a smooth degree-`d` curve.
    Cyclic { d: IntRange, n: IntRange },
    /// `n`-cyclic covers branched along `vn` general lines.
    Lines { v: IntRange, n: IntRange },
    /// Full covers branched along `curves` curves of a common `degree`.
    Branch { curves: IntRange, degree: IntRange },
}

/// One sweep result, already formatted for tabulation except that numbers
/// stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub family: &'static str,
    pub params: String,
    pub c1_sq: Rational,
    pub c2_y: Rational,
    pub c2_orb: Rational,
    pub s2_y: Rational,
    pub s2_orb: Rational,
    pub criterion: Rational,
    pub verdict: Verdict,
}

/// Rows produced plus the number of parameter tuples skipped because they
/// fall outside a family's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub skipped: u64,
}

fn row_from_record(family: &'static str, params: String, record: &SurfaceRecord) -> SweepRow {
    let v = evaluate_criterion(record);
    SweepRow {
        family,
        params,
        c1_sq: record.c1_sq.clone(),
        c2_y: record.c2.clone(),
        c2_orb: orbifold_c2(&record.c2, &record.profile),
        s2_y: v.s2_y,
        s2_orb: v.s2_orb,
        criterion: v.criterion,
        verdict: v.verdict,
    }
}

/// Evaluate a family over its ranges. Tuples outside the family's domain
/// (degree too small, excluded pair, non-divisor, missing tabulated count)
/// are counted in `skipped`, never silently dropped. Empty ranges yield an
/// empty outcome.
pub fn sweep(family: &SweepFamily) -> SweepOutcome {
    let mut rows = Vec::new();
    let mut skipped: u64 = 0;
    match family {
        SweepFamily::Ak { d, k, ell } => {
            for dv in d.iter() {
                let ells: Vec<u64> = match ell {
                    EllSpec::Range(lo, hi) => (*lo..=*hi).collect(),
                    EllSpec::Chmutov => match chmutov_mu(dv) {
                        Ok(mu) => vec![mu],
                        Err(_) => {
                            skipped += 1;
                            continue;
                        }
                    },
                };
                for ellv in ells {
                    match HypersurfaceAk::new(dv, *k, ellv) {
                        Ok(spec) => {
                            let record = make_hypersurface_ak(&spec);
                            let params = format!("d={dv} k={k} ell={ellv}");
                            rows.push(row_from_record("ak", params, &record));
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        SweepFamily::Cyclic { d, n } => {
            for dv in d.iter() {
                for nv in n.iter() {
                    match CyclicCoverSpec::new(dv, nv) {
                        Ok(spec) => {
                            let record = make_cyclic_cover(&spec);
                            let params = format!("d={dv} n={nv}");
                            rows.push(row_from_record("cyclic", params, &record));
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        SweepFamily::Lines { v, n } => {
            for vv in v.iter() {
                for nv in n.iter() {
                    match make_line_cover(vv, nv) {
                        Ok(record) => {
                            let params = format!("v={vv} n={nv}");
                            rows.push(row_from_record("lines", params, &record));
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
        SweepFamily::Branch { curves, degree } => {
            for kv in curves.iter() {
                for cv in degree.iter() {
                    if kv < 0 {
                        skipped += 1;
                        continue;
                    }
                    let degrees = vec![cv; kv as usize];
                    match make_branched_cover_nd(&degrees) {
                        Ok(record) => {
                            let params = format!("k={kv} c={cv}");
                            rows.push(row_from_record("branch", params, &record));
                        }
                        Err(_) => skipped += 1,
                    }
                }
            }
        }
    }
    SweepOutcome { rows, skipped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::singularity::{AdeSingularity, SingularityProfile};

    fn d13(nodes: u64) -> SurfaceRecord {
        SurfaceRecord::new(
            "test",
            rat(1053),
            rat(1599),
            SingularityProfile::single(AdeSingularity::a(1).unwrap(), nodes),
        )
    }

    #[test]
    fn checks_on_landmark_surfaces() {
        assert!(bmy_check(&rat(1053), &rat(501)));
        assert!(!bmy_check(&rat(10), &rat(1)));
        assert!(chern_35_check(&rat(1053), &rat(1599)));
        assert!(!chern_35_check(&rat(5), &rat(55)));
        assert_eq!(noether_classify(&rat(1053), &rat(1599)), NoetherClass::Above);
        assert_eq!(noether_classify(&rat(1), &rat(41)), NoetherClass::OnLine);
        assert_eq!(noether_classify(&rat(1), &rat(100)), NoetherClass::Below);
    }

    #[test]
    fn report_on_record_surface() {
        let report = geography_report(&d13(732)).unwrap();
        assert!(report.bmy_ok);
        assert!(report.chern_35_ok);
        assert_eq!(report.noether_class, NoetherClass::Above);
        assert_eq!(report.ratio_sum, frac(700, 351));
        assert!(report.ratio_sum < rat(2));
        assert_eq!(report.c2_ratio, frac(1599, 1053));
    }

    #[test]
    fn report_on_smooth_surface() {
        let report = geography_report(&d13(0)).unwrap();
        assert_eq!(report.ratio_sum, frac(82, 27));
        assert!(report.ratio_sum > rat(2));
    }

    #[test]
    fn report_rejects_nonpositive_c1_sq() {
        // K3 numbers: c1^2 = 0, c2 = 24
        let k3 = SurfaceRecord::new("k3", rat(0), rat(24), SingularityProfile::new());
        assert_eq!(
            geography_report(&k3),
            Err(DomainError::NonPositiveC1Sq(rat(0)))
        );
    }

    #[test]
    fn ratio_law_matches_criterion_sign() {
        for nodes in [0u64, 500, 727, 728, 729, 732, 1000] {
            let record = d13(nodes);
            let verdict = evaluate_criterion(&record);
            let report = geography_report(&record).unwrap();
            assert_eq!(
                verdict.criterion > rat(0),
                report.ratio_sum < rat(2),
                "nodes = {nodes}"
            );
            // exact restatement: criterion / c1^2 = 2 - ratio_sum
            assert_eq!(
                &verdict.criterion / &record.c1_sq,
                rat(2) - &report.ratio_sum
            );
        }
    }

    #[test]
    fn big_plus_bmy_forces_chern_35() {
        let outcome = sweep(&SweepFamily::Lines {
            v: IntRange::new(1, 12),
            n: IntRange::new(2, 20),
        });
        let mut checked = 0;
        for row in &outcome.rows {
            if row.verdict == Verdict::Big && bmy_check(&row.c1_sq, &row.c2_orb) {
                assert!(
                    chern_35_check(&row.c1_sq, &row.c2_y),
                    "3/5 failed at {}",
                    row.params
                );
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn ak_sweep_brackets_the_threshold() {
        let outcome = sweep(&SweepFamily::Ak {
            d: IntRange::single(13),
            k: 1,
            ell: EllSpec::Range(727, 733),
        });
        assert_eq!(outcome.skipped, 0);
        assert_eq!(outcome.rows.len(), 7);
        for (i, row) in outcome.rows.iter().enumerate() {
            let ell = 727 + i as u64;
            assert_eq!(row.params, format!("d=13 k=1 ell={ell}"));
            let expected = if ell >= 729 {
                Verdict::Big
            } else {
                Verdict::Inconclusive
            };
            assert_eq!(row.verdict, expected, "ell = {ell}");
        }
        assert_eq!(outcome.rows[5].criterion, rat(6));
    }

    #[test]
    fn chmutov_sweep_skips_untabulated_degrees() {
        let outcome = sweep(&SweepFamily::Ak {
            d: IntRange::new(12, 20),
            k: 1,
            ell: EllSpec::Chmutov,
        });
        assert_eq!(outcome.skipped, 2);
        assert_eq!(outcome.rows.len(), 7);
        assert!(outcome.rows.iter().all(|r| r.verdict == Verdict::Big));
        assert_eq!(outcome.rows[0].params, "d=13 k=1 ell=732");
        assert_eq!(outcome.rows[0].criterion, rat(6));
    }

    #[test]
    fn lines_sweep_counts_skips() {
        let outcome = sweep(&SweepFamily::Lines {
            v: IntRange::new(1, 3),
            n: IntRange::new(2, 15),
        });
        // v=1: n=2..4 give vn <= 4; v=2: n=2 does; v=3: n=2 is the excluded
        // degree-6 double cover
        assert_eq!(outcome.skipped, 5);
        assert_eq!(outcome.rows.len(), 37);
        assert_eq!(outcome.rows[0].params, "v=1 n=5");
        let last = outcome.rows.last().unwrap();
        assert_eq!(last.params, "v=3 n=15");
    }

    #[test]
    fn branch_sweep_small_grid() {
        let outcome = sweep(&SweepFamily::Branch {
            curves: IntRange::new(2, 4),
            degree: IntRange::new(1, 2),
        });
        // only (k, c) with kc >= 5 survive: (3,2) and (4,2)
        assert_eq!(outcome.skipped, 4);
        assert_eq!(outcome.rows.len(), 2);
        assert_eq!(outcome.rows[0].params, "k=3 c=2");
        assert_eq!(outcome.rows[0].criterion, rat(-98));
        assert_eq!(outcome.rows[1].params, "k=4 c=2");
    }

    #[test]
    fn empty_range_is_not_an_error() {
        let outcome = sweep(&SweepFamily::Cyclic {
            d: IntRange::new(10, 5),
            n: IntRange::new(2, 4),
        });
        assert!(outcome.rows.is_empty());
        assert_eq!(outcome.skipped, 0);
    }

    #[test]
    fn cyclic_sweep_rows() {
        let outcome = sweep(&SweepFamily::Cyclic {
            d: IntRange::new(3, 8),
            n: IntRange::new(2, 4),
        });
        // survivors: (6,3), (8,2), (8,4); all other tuples fail divisibility
        // or are excluded pairs
        assert_eq!(outcome.rows.len(), 3);
        assert_eq!(outcome.skipped, 15);
        assert_eq!(outcome.rows[0].params, "d=6 n=3");
        assert_eq!(outcome.rows[0].c1_sq, rat(3));
        assert_eq!(outcome.rows[0].c2_y, rat(45));
    }
}
