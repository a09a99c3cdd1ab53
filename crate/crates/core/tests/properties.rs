//! Randomized checks of the algebraic identities the library promises:
//! exactness of the rational layer, additivity of orbifold corrections,
//! agreement of closed forms with the generic pipeline, and soundness of the
//! derived thresholds.

use std::str::FromStr;

use proptest::prelude::*;

use bigcot_core::families::{
    ak_threshold, cyclic_cover_chern, hypersurface_chern, least_nodes_for_big,
    line_cover_criterion, line_cover_exceptions, make_hypersurface_ak, make_line_cover,
    HypersurfaceAk,
};
use bigcot_core::geography::{geography_report, sweep, IntRange, SweepFamily};
use bigcot_core::{
    evaluate_criterion, frac, orbifold_c2, rat, segre, AdeSingularity, Rational,
    SingularityProfile, SurfaceRecord, Verdict,
};

fn ade() -> impl Strategy<Value = AdeSingularity> {
    prop_oneof![
        (1i64..=200).prop_map(|n| AdeSingularity::a(n).unwrap()),
        (4i64..=200).prop_map(|n| AdeSingularity::d(n).unwrap()),
        (6i64..=8).prop_map(|n| AdeSingularity::e(n).unwrap()),
    ]
}

fn profile() -> impl Strategy<Value = SingularityProfile> {
    proptest::collection::vec((ade(), 0u64..=50), 0..8).prop_map(SingularityProfile::from_entries)
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=10_000).prop_map(|(n, d)| frac(n, d))
}

/// Decimal digit strings up to 78 digits, i.e. beyond 256 bits.
fn big_digits() -> impl Strategy<Value = String> {
    "[1-9][0-9]{0,77}"
}

proptest! {
    #[test]
    fn defect_is_positive_and_below_index_plus_one(s in ade()) {
        let defect = s.local_defect();
        prop_assert!(defect > rat(0));
        prop_assert!(defect < rat(s.index() as i64 + 1));
        prop_assert_eq!(s.growth_jump() * rat(12), s.local_defect());
    }

    #[test]
    fn total_defect_is_additive(p in profile(), q in profile()) {
        let mut merged = p.clone();
        for (s, count) in q.iter() {
            merged.add(s, count);
        }
        prop_assert_eq!(merged.total_defect(), p.total_defect() + q.total_defect());
        prop_assert_eq!(merged.total_count(), p.total_count() + q.total_count());
    }

    #[test]
    fn adding_zero_count_never_changes_a_profile(p in profile(), s in ade()) {
        let mut q = p.clone();
        q.add(s, 0);
        prop_assert_eq!(q, p);
    }

    #[test]
    fn orbifold_c2_subtracts_the_total_defect(c2 in small_rational(), p in profile()) {
        prop_assert_eq!(orbifold_c2(&c2, &p), &c2 - p.total_defect());
    }

    #[test]
    fn criterion_identities_hold_on_random_records(
        c1_sq in small_rational(),
        c2 in small_rational(),
        p in profile(),
    ) {
        let record = SurfaceRecord::new("random", c1_sq.clone(), c2.clone(), p.clone());
        let v = evaluate_criterion(&record);
        prop_assert_eq!(&v.s2_y, &segre(&c1_sq, &c2));
        prop_assert_eq!(&v.s2_orb, &segre(&c1_sq, &orbifold_c2(&c2, &p)));
        prop_assert_eq!(&v.criterion, &(&v.s2_y + &v.s2_orb));
        prop_assert_eq!(v.verdict == Verdict::Big, v.criterion > rat(0));
        match &v.growth_coeff {
            Some(g) => prop_assert_eq!(g * &rat(12), v.criterion.clone()),
            None => prop_assert!(v.criterion <= rat(0)),
        }
    }

    #[test]
    fn criterion_grows_linearly_with_count(
        c1_sq in small_rational(),
        c2 in small_rational(),
        s in ade(),
        count in 0u64..=1000,
        extra in 1u64..=100,
    ) {
        let base = SurfaceRecord::new(
            "base",
            c1_sq.clone(),
            c2.clone(),
            SingularityProfile::single(s, count),
        );
        let more = SurfaceRecord::new(
            "more",
            c1_sq,
            c2,
            SingularityProfile::single(s, count + extra),
        );
        let gap = evaluate_criterion(&more).criterion - evaluate_criterion(&base).criterion;
        prop_assert_eq!(gap.clone(), rat(extra as i64) * s.local_defect());
        prop_assert!(gap > rat(0));
    }

    #[test]
    fn node_threshold_is_sound_and_sharp(d in 5i64..=300, k in 1i64..=60) {
        let least = least_nodes_for_big(d, k).unwrap();
        let big = evaluate_criterion(&make_hypersurface_ak(
            &HypersurfaceAk::new(d, k, least).unwrap(),
        ));
        prop_assert_eq!(big.verdict, Verdict::Big);
        let below = evaluate_criterion(&make_hypersurface_ak(
            &HypersurfaceAk::new(d, k, least - 1).unwrap(),
        ));
        prop_assert!(below.criterion <= rat(0));

        // when the threshold is attained exactly the criterion vanishes
        let threshold = ak_threshold(d, k).unwrap();
        if threshold.is_integer() {
            prop_assert_eq!(below.criterion, rat(0));
        } else {
            prop_assert!(below.criterion < rat(0));
        }
    }

    #[test]
    fn line_cover_routes_agree_or_both_reject(v in 1i64..=100, n in 2i64..=100) {
        match line_cover_criterion(v, n) {
            Ok(closed) => {
                let record = make_line_cover(v, n).unwrap();
                prop_assert_eq!(closed, evaluate_criterion(&record).criterion);
            }
            Err(e) => {
                prop_assert_eq!(make_line_cover(v, n).unwrap_err(), e);
            }
        }
    }

    #[test]
    fn full_degree_cyclic_cover_is_a_hypersurface(d in 5i64..=400) {
        prop_assert_eq!(cyclic_cover_chern(d, d).unwrap(), hypersurface_chern(d).unwrap());
    }

    #[test]
    fn ratio_law_for_positive_c1_sq(
        c1_sq in 1i64..=1_000_000,
        c2 in -1_000_000i64..=1_000_000,
        p in profile(),
    ) {
        let record = SurfaceRecord::new("random", rat(c1_sq), rat(c2), p);
        let v = evaluate_criterion(&record);
        let report = geography_report(&record).unwrap();
        prop_assert_eq!(v.criterion > rat(0), report.ratio_sum < rat(2));
        prop_assert_eq!(&v.criterion / &record.c1_sq, rat(2) - &report.ratio_sum);
    }

    #[test]
    fn sweeps_account_for_every_tuple(v_max in 1i64..=12, n_max in 4i64..=20) {
        let outcome = sweep(&SweepFamily::Lines {
            v: IntRange::new(1, v_max),
            n: IntRange::new(2, n_max),
        });
        let tuples = (v_max as u64) * (n_max as u64 - 1);
        prop_assert_eq!(outcome.rows.len() as u64 + outcome.skipped, tuples);
        for row in &outcome.rows {
            prop_assert_eq!(row.verdict == Verdict::Big, row.criterion > rat(0));
            prop_assert_eq!(&row.criterion, &(&row.s2_y + &row.s2_orb));
        }
    }

    #[test]
    fn exception_grids_restrict_consistently(v_max in 1i64..=15, n_max in 4i64..=18) {
        let small = line_cover_exceptions(v_max, n_max).unwrap();
        let large = line_cover_exceptions(15, 18).unwrap();
        let restricted: Vec<(i64, i64)> = large
            .into_iter()
            .filter(|&(v, n)| v <= v_max && n <= n_max)
            .collect();
        prop_assert_eq!(small, restricted);
    }

    #[test]
    fn rational_parsing_round_trips_past_256_bits(
        a in big_digits(),
        b in big_digits(),
        negate in any::<bool>(),
    ) {
        let sign = if negate { "-" } else { "" };
        let x = Rational::from_str(&format!("{sign}{a}/{b}")).unwrap();
        let y = Rational::from_str(&x.to_string()).unwrap();
        prop_assert_eq!(&x, &y);
        // reduced form has positive denominator and coprime parts
        prop_assert!(x.denom() > &num::BigInt::from(0));
    }

    #[test]
    fn arithmetic_is_exact_past_256_bits(
        a in big_digits(),
        b in big_digits(),
        c in big_digits(),
        d in big_digits(),
    ) {
        let x = Rational::from_str(&format!("{a}/{b}")).unwrap();
        let y = Rational::from_str(&format!("{c}/{d}")).unwrap();
        prop_assert_eq!(&(&(&x + &y) - &y), &x);
        prop_assert_eq!(&(&(&x * &y) / &y), &x);
        let z = &x - &x;
        prop_assert_eq!(z, rat(0));
    }
}
