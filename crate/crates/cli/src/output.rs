//! Human report and CSV emission. Machine output keeps rationals exact
//! (`p/q` reduced, bare integer when the denominator is 1); decimals appear
//! only in the human report, marked as approximations.

use std::io::{self, Write};

use bigcot_core::geography::{geography_report, SweepOutcome};
use bigcot_core::{evaluate_criterion, orbifold_c2, rational::approx, Rational, SurfaceRecord};

pub const CSV_HEADER: &str = "family,params,c1_sq,c2_Y,c2_orb,s2_Y,s2_orb,criterion,verdict";

/// Exact value, with a tagged decimal approximation when it is not an
/// integer.
fn show(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("{r} (~ {:.6})", approx(r))
    }
}

pub fn print_report(record: &SurfaceRecord, out: &mut impl Write) -> io::Result<()> {
    let v = evaluate_criterion(record);
    let c2_orb = orbifold_c2(&record.c2, &record.profile);
    writeln!(out, "name      = {}", record.name)?;
    writeln!(out, "profile   = {}", record.profile)?;
    writeln!(out, "c1_sq     = {}", show(&record.c1_sq))?;
    writeln!(out, "c2_Y      = {}", show(&record.c2))?;
    writeln!(out, "c2_orb    = {}", show(&c2_orb))?;
    writeln!(out, "s2_Y      = {}", show(&v.s2_y))?;
    writeln!(out, "s2_orb    = {}", show(&v.s2_orb))?;
    writeln!(out, "criterion = {}", show(&v.criterion))?;
    writeln!(out, "verdict   = {}", v.verdict)?;
    match &v.growth_coeff {
        Some(g) => writeln!(out, "growth    = {} (~ {:.6})", g, approx(g))?,
        None => writeln!(out, "growth    = none (criterion is not positive)")?,
    }
    match geography_report(record) {
        Ok(geo) => {
            writeln!(out, "bmy_ok      = {}", geo.bmy_ok)?;
            writeln!(out, "chern_35_ok = {}", geo.chern_35_ok)?;
            writeln!(out, "noether     = {}", geo.noether_class)?;
            writeln!(out, "ratio_sum   = {}", show(&geo.ratio_sum))?;
            writeln!(out, "c2_ratio    = {}", show(&geo.c2_ratio))?;
        }
        Err(_) => writeln!(out, "geography = unavailable (needs c1_sq > 0)")?,
    }
    Ok(())
}

/// Deterministic CSV: header, one row per tuple, `# skipped=N` trailer.
pub fn write_csv(outcome: &SweepOutcome, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &outcome.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.family,
            row.params,
            row.c1_sq,
            row.c2_y,
            row.c2_orb,
            row.s2_y,
            row.s2_orb,
            row.criterion,
            row.verdict
        )?;
    }
    writeln!(out, "# skipped={}", outcome.skipped)
}
