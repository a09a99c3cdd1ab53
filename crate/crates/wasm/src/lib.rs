//! Browser bindings: each export takes plain integers and returns a JSON
//! string, so the page needs no bindings beyond `JSON.parse`. Errors come
//! back as `{"error": "..."}` rather than exceptions.
//!
//! The same functions compile and run on native targets, which is how the
//! test suite exercises them.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use bigcot_core::families::{
    ak_threshold, chmutov_mu, least_nodes_for_big, line_cover_criterion, make_hypersurface_ak,
    make_line_cover, HypersurfaceAk,
};
use bigcot_core::geography::geography_report;
use bigcot_core::rational::approx;
use bigcot_core::{evaluate_criterion, orbifold_c2, Rational, SurfaceRecord};

#[derive(Serialize)]
struct Number {
    exact: String,
    approx: f64,
}

fn number(r: &Rational) -> Number {
    Number {
        exact: r.to_string(),
        approx: approx(r),
    }
}

#[derive(Serialize)]
struct Geography {
    bmy_ok: bool,
    chern_35_ok: bool,
    noether: String,
    ratio_sum: Number,
    c2_ratio: Number,
}

#[derive(Serialize)]
struct Report {
    name: String,
    profile: String,
    c1_sq: Number,
    c2_y: Number,
    c2_orb: Number,
    s2_y: Number,
    s2_orb: Number,
    criterion: Number,
    verdict: String,
    growth: Option<Number>,
    geography: Option<Geography>,
}

fn report(record: &SurfaceRecord) -> Report {
    let v = evaluate_criterion(record);
    let c2_orb = orbifold_c2(&record.c2, &record.profile);
    let geography = geography_report(record).ok().map(|geo| Geography {
        bmy_ok: geo.bmy_ok,
        chern_35_ok: geo.chern_35_ok,
        noether: geo.noether_class.to_string(),
        ratio_sum: number(&geo.ratio_sum),
        c2_ratio: number(&geo.c2_ratio),
    });
    Report {
        name: record.name.clone(),
        profile: record.profile.to_string(),
        c1_sq: number(&record.c1_sq),
        c2_y: number(&record.c2),
        c2_orb: number(&c2_orb),
        s2_y: number(&v.s2_y),
        s2_orb: number(&v.s2_orb),
        criterion: number(&v.criterion),
        verdict: v.verdict.to_string(),
        growth: v.growth_coeff.as_ref().map(number),
        geography,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}"))
}

fn error_json(message: impl std::fmt::Display) -> String {
    to_json(&serde_json::json!({ "error": message.to_string() }))
}

#[derive(Serialize)]
struct AkReport {
    #[serde(flatten)]
    report: Report,
    threshold: Number,
    least_ell: u64,
    record_ell: Option<u64>,
}

/// Degree-d hypersurface with ell points of type A_k.
#[wasm_bindgen]
pub fn ak_report(d: i64, k: i64, ell: u64) -> String {
    let spec = match HypersurfaceAk::new(d, k, ell) {
        Ok(spec) => spec,
        Err(e) => return error_json(e),
    };
    let record = make_hypersurface_ak(&spec);
    let threshold = ak_threshold(d, k).expect("validated");
    let least_ell = match least_nodes_for_big(d, k) {
        Ok(least) => least,
        Err(e) => return error_json(e),
    };
    to_json(&AkReport {
        report: report(&record),
        threshold: number(&threshold),
        least_ell,
        record_ell: chmutov_mu(d).ok(),
    })
}

#[derive(Serialize)]
struct LinesReport {
    #[serde(flatten)]
    report: Report,
    closed_form: Number,
    routes_agree: bool,
}

/// n-cyclic cover of v*n general lines, with the closed-form cross-check.
#[wasm_bindgen]
pub fn lines_report(v: i64, n: i64) -> String {
    let record = match make_line_cover(v, n) {
        Ok(record) => record,
        Err(e) => return error_json(e),
    };
    let closed = line_cover_criterion(v, n).expect("same validation");
    let pipeline = evaluate_criterion(&record).criterion;
    to_json(&LinesReport {
        routes_agree: closed == pipeline,
        closed_form: number(&closed),
        report: report(&record),
    })
}

#[derive(Serialize)]
struct GridCell {
    v: i64,
    n: i64,
    /// "big", "nonpositive", or "outside" (hypothesis fails or excluded).
    status: String,
    criterion: Option<Number>,
}

#[derive(Serialize)]
struct Grid {
    v_max: i64,
    n_max: i64,
    exceptional_count: usize,
    cells: Vec<GridCell>,
}

/// Full (v, n) grid with the criterion sign per cell, n from 2 upward.
#[wasm_bindgen]
pub fn exception_grid(v_max: i64, n_max: i64) -> String {
    if !(1..=60).contains(&v_max) || !(2..=60).contains(&n_max) {
        return error_json("grid bounds must satisfy 1 <= v_max <= 60, 2 <= n_max <= 60");
    }
    let mut cells = Vec::new();
    let mut exceptional_count = 0;
    for v in 1..=v_max {
        for n in 2..=n_max {
            let cell = match line_cover_criterion(v, n) {
                Ok(value) => {
                    let status = if value > Rational::from_integer(0.into()) {
                        "big"
                    } else {
                        exceptional_count += 1;
                        "nonpositive"
                    };
                    GridCell {
                        v,
                        n,
                        status: status.to_string(),
                        criterion: Some(number(&value)),
                    }
                }
                Err(_) => GridCell {
                    v,
                    n,
                    status: "outside".to_string(),
                    criterion: None,
                },
            };
            cells.push(cell);
        }
    }
    to_json(&Grid {
        v_max,
        n_max,
        exceptional_count,
        cells,
    })
}
