//! `bigcot`: decide whether the cotangent bundle of the minimal resolution
//! of a canonical surface is big, from exact Chern numbers and an ADE
//! singularity profile.
//!
//! Exit codes: 0 = ran to completion (whatever the verdict), 1 = unusable
//! input or output, 2 = input outside the mathematical domain, 3 = a
//! reference table failed to reproduce.

mod doc;
mod error;
mod output;
mod tables;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bigcot_core::families::{
    make_branched_cover_nd, make_cyclic_cover, make_hypersurface_ak, make_line_cover,
    CyclicCoverSpec, HypersurfaceAk,
};
use bigcot_core::geography::{sweep, EllSpec, IntRange, SweepFamily};

use error::CliError;

#[derive(Parser)]
#[command(
    name = "bigcot",
    version,
    about = "Bigness criterion for cotangent bundles of resolved canonical surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the criterion for a TOML surface document
    Check(CheckArgs),
    /// Evaluate a built-in family member
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Recompute a frozen reference table and diff it
    Tables {
        /// "corollary-nodes" or "lines-exceptions"
        id: String,
    },
    /// Tabulate a family over parameter ranges as CSV
    Sweep {
        #[command(subcommand)]
        sweep: SweepCommand,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Path to the surface document
    path: PathBuf,
    /// Print the normalized document instead of the report
    #[arg(long)]
    emit_normalized: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Degree-d hypersurface with ell singular points of type A_k
    #[command(name = "hypersurface-ak")]
    HypersurfaceAk {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        ell: u64,
    },
    /// n-cyclic cover of the plane branched along v*n general lines
    Lines {
        #[arg(long)]
        v: i64,
        #[arg(long)]
        n: i64,
    },
    /// n-cyclic cover branched along a degree-d curve (smooth unless
    /// --degrees lists nodal components)
    Cyclic {
        #[arg(long, required_unless_present = "degrees")]
        d: Option<i64>,
        #[arg(long)]
        n: i64,
        /// Component degrees, e.g. "2,2,2" or "1x6" (degree 1, six times)
        #[arg(long, value_parser = parse_degrees)]
        degrees: Option<Degrees>,
    },
    /// Full cover of the plane branched along the listed curve degrees
    Branch {
        /// Component degrees, e.g. "5,5,5" or "1x15" (degree 1, 15 times)
        #[arg(long, value_parser = parse_degrees)]
        degrees: Degrees,
    },
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Hypersurfaces with A_k points: d and ell ranges, fixed k
    Ak {
        /// Degree range, "13..19" or a single value
        #[arg(long, value_parser = parse_range)]
        d: IntRange,
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Count range "700..740", single value, or "chmutov" for the
        /// tabulated record count per degree
        #[arg(long, value_parser = parse_ell)]
        ell: EllSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cyclic covers branched along smooth curves: d and n ranges
    Cyclic {
        #[arg(long, value_parser = parse_range)]
        d: IntRange,
        #[arg(long, value_parser = parse_range)]
        n: IntRange,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Line covers: v and n ranges
    Lines {
        #[arg(long, value_parser = parse_range)]
        v: IntRange,
        #[arg(long, value_parser = parse_range)]
        n: IntRange,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full covers of k curves of one common degree: ranges for both
    Branch {
        #[arg(long, value_parser = parse_range)]
        curves: IntRange,
        #[arg(long, value_parser = parse_range)]
        degree: IntRange,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Newtype so clap's value parser has a concrete Clone target.
#[derive(Debug, Clone)]
struct Degrees(Vec<i64>);

fn parse_degrees(s: &str) -> Result<Degrees, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        match item.split_once(['x', 'X']) {
            Some((deg, times)) => {
                let deg: i64 = deg
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid degree '{deg}' in '{item}'"))?;
                let times: usize = times
                    .trim()
                    .parse()
                    .map_err(|_| format!("invalid repetition '{times}' in '{item}'"))?;
                out.extend(std::iter::repeat_n(deg, times));
            }
            None => out.push(
                item.parse()
                    .map_err(|_| format!("invalid degree '{item}'"))?,
            ),
        }
    }
    Ok(Degrees(out))
}

fn parse_range(s: &str) -> Result<IntRange, String> {
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo
                .trim()
                .parse()
                .map_err(|_| format!("invalid range bound '{lo}'"))?;
            let hi = hi
                .trim()
                .parse()
                .map_err(|_| format!("invalid range bound '{hi}'"))?;
            Ok(IntRange::new(lo, hi))
        }
        None => {
            let x = s
                .trim()
                .parse()
                .map_err(|_| format!("invalid integer '{s}'"))?;
            Ok(IntRange::single(x))
        }
    }
}

fn parse_ell(s: &str) -> Result<EllSpec, String> {
    if s.trim() == "chmutov" {
        return Ok(EllSpec::Chmutov);
    }
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo
                .trim()
                .parse()
                .map_err(|_| format!("invalid count bound '{lo}'"))?;
            let hi = hi
                .trim()
                .parse()
                .map_err(|_| format!("invalid count bound '{hi}'"))?;
            Ok(EllSpec::Range(lo, hi))
        }
        None => {
            let x = s
                .trim()
                .parse()
                .map_err(|_| format!("invalid count '{s}' (integer, range, or 'chmutov')"))?;
            Ok(EllSpec::Range(x, x))
        }
    }
}

fn cmd_check(args: &CheckArgs, out: &mut impl Write) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.path.display())))?;
    let document = doc::parse_document(&text)?;
    let record = doc::document_to_record(&document)?;
    if args.emit_normalized {
        let normalized = doc::record_to_document(&record)?;
        write!(out, "{}", doc::serialize_document(&normalized)?)?;
    } else {
        output::print_report(&record, out)?;
    }
    Ok(())
}

fn cmd_family(family: &FamilyCommand, out: &mut impl Write) -> Result<(), CliError> {
    let record = match family {
        FamilyCommand::HypersurfaceAk { d, k, ell } => {
            make_hypersurface_ak(&HypersurfaceAk::new(*d, *k, *ell)?)
        }
        FamilyCommand::Lines { v, n } => make_line_cover(*v, *n)?,
        FamilyCommand::Cyclic { d, n, degrees } => {
            let spec = match degrees {
                Some(Degrees(list)) => {
                    let spec = CyclicCoverSpec::with_degrees(*n, list.clone())?;
                    if let Some(d) = d {
                        if *d != spec.d() {
                            return Err(CliError::Usage(format!(
                                "--d {} disagrees with the degree list total {}",
                                d,
                                spec.d()
                            )));
                        }
                    }
                    spec
                }
                None => {
                    let d = d.expect("clap requires --d without --degrees");
                    CyclicCoverSpec::new(d, *n)?
                }
            };
            make_cyclic_cover(&spec)
        }
        FamilyCommand::Branch {
            degrees: Degrees(list),
        } => make_branched_cover_nd(list)?,
    };
    output::print_report(&record, out)?;
    Ok(())
}

fn cmd_sweep(command: SweepCommand, out: &mut impl Write) -> Result<(), CliError> {
    let (family, path) = match command {
        SweepCommand::Ak { d, k, ell, out } => (SweepFamily::Ak { d, k, ell }, out),
        SweepCommand::Cyclic { d, n, out } => (SweepFamily::Cyclic { d, n }, out),
        SweepCommand::Lines { v, n, out } => (SweepFamily::Lines { v, n }, out),
        SweepCommand::Branch {
            curves,
            degree,
            out,
        } => (SweepFamily::Branch { curves, degree }, out),
    };
    let outcome = sweep(&family);
    match path {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            output::write_csv(&outcome, &mut file)?;
        }
        None => output::write_csv(&outcome, out)?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Check(args) => cmd_check(&args, &mut out),
        Command::Family { family } => cmd_family(&family, &mut out),
        Command::Tables { id } => tables::cmd_tables(&id, &mut out),
        Command::Sweep { sweep } => cmd_sweep(sweep, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists_parse_plain_and_repeated() {
        assert_eq!(parse_degrees("5,5,5").unwrap().0, vec![5, 5, 5]);
        assert_eq!(parse_degrees("1x15").unwrap().0, vec![1; 15]);
        assert_eq!(parse_degrees("2, 1x3, 4").unwrap().0, vec![2, 1, 1, 1, 4]);
        assert!(parse_degrees("five").is_err());
        assert!(parse_degrees("1x").is_err());
    }

    #[test]
    fn ranges_parse_inclusive_or_single() {
        assert_eq!(parse_range("13..19").unwrap(), IntRange::new(13, 19));
        assert_eq!(parse_range("7").unwrap(), IntRange::single(7));
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn ell_specs_parse_all_three_forms() {
        assert_eq!(parse_ell("chmutov").unwrap(), EllSpec::Chmutov);
        assert_eq!(parse_ell("700..740").unwrap(), EllSpec::Range(700, 740));
        assert_eq!(parse_ell("732").unwrap(), EllSpec::Range(732, 732));
        assert!(parse_ell("-3").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
