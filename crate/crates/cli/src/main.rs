//! `betti` computes the Poincaré polynomials of the moduli spaces of
//! pointed stable rational curves (and of the Fulton-MacPherson
//! compactifications of the projective line), isolates their roots with
//! certified exact arithmetic, and runs the verification suites for
//! real-rootedness, interlacing, ultra-log-concavity, the
//! generating-function identities, and the branch-crossing picture.
//!
//! Exit codes: 0 all requested checks pass, 1 a verified failure was found
//! (with its witness printed), 2 usage or configuration error.

mod cachefiles;
mod output;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use betti_core::arith::{parse_rat, Rat};
use betti_core::branches::{branches_csv, crossings_json, default_grid, figure_grid};
use betti_core::realroot::{isolate_roots, Bound, Domain};
use betti_core::recurrences::{Cache, DeformFamily, UniFamily};

#[derive(Parser)]
#[command(
    name = "betti",
    version,
    about = "Exact Betti-number polynomials of pointed-curve moduli spaces: \
             computation, certified real-root analysis, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Output format for machine-readable commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Truncation order for the series identities
    #[arg(long, global = true, default_value_t = 15)]
    order: usize,

    /// Isolation interval width (rational or decimal, e.g. 1e-8 or 1/256)
    #[arg(long, global = true, default_value = "1e-6")]
    width: String,

    /// Worker threads for fanning verdicts out (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for the on-disk polynomial cache
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Fractional digits for decimal renderings (exact columns are
    /// unaffected)
    #[arg(long, global = true, default_value_t = 8)]
    digits: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute polynomial family members over an index range
    Compute {
        /// Family: P, S, Ptilde, Phat, G, K, F or Fhat
        family: String,
        /// Index or inclusive range, e.g. `6` or `4..6`
        range: String,
    },
    /// Isolate the real roots of a univariate family member
    Roots {
        /// Family: P, S, Ptilde, Phat, G or K
        family: String,
        index: u32,
        /// Interval to search, e.g. `-inf..0` (open); defaults to all reals
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
    },
    /// Run a verification suite
    Verify {
        /// all, realroot, interlace, ulc, identities, location, crossings or fm
        suite: String,
        #[command(flatten)]
        bounds: suites::SuiteBounds,
    },
    /// Run the generating-function identity suite (same as `verify identities`)
    Identities {
        #[command(flatten)]
        bounds: suites::SuiteBounds,
    },
    /// Track positive root branches of a deformation over a t-grid
    Branches {
        index: u32,
        /// F (default) or Fhat
        #[arg(long, default_value = "F")]
        family: String,
        /// Use the 29 published grid times
        #[arg(long)]
        figure_grid: bool,
        /// Use the dyadic ladder grid, densified near the crossings
        #[arg(long)]
        default_grid: bool,
        /// Explicit grid time (repeatable)
        #[arg(short = 't', long = "t", allow_hyphen_values = true)]
        times: Vec<String>,
        /// Emit the certified crossing report instead of the branch table
        #[arg(long)]
        crossings: bool,
        /// Write the output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every suite and emit a consolidated report
    Report {
        #[command(flatten)]
        bounds: suites::SuiteBounds,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<bool> {
    let cache = Cache::new();
    if let Some(dir) = &cli.global.cache {
        cachefiles::load_dir(&cache, dir);
    }
    let width = parse_rat(&cli.global.width)?;
    if width <= Rat::from_integer(0.into()) {
        anyhow::bail!("--width must be positive");
    }

    let all_pass = match cli.command {
        Command::Compute { family, range } => {
            let (lo, hi) = parse_range(&range)?;
            cmd_compute(&cache, &family, lo, hi, cli.global.format)?;
            if let Some(dir) = &cli.global.cache {
                if let Ok(fam) = UniFamily::from_str(&family) {
                    cachefiles::save_family(&cache, dir, fam, hi)?;
                }
            }
            true
        }
        Command::Roots {
            family,
            index,
            domain,
        } => {
            let fam = UniFamily::from_str(&family)?;
            let poly = cache.uni(fam, index)?;
            let dom = match domain {
                Some(spec) => parse_domain(&spec)?,
                None => Domain::real_line(),
            };
            let list = isolate_roots(&poly, &dom, &width)?;
            output::print_roots(&list, cli.global.format, cli.global.digits);
            true
        }
        Command::Verify { suite, bounds } => {
            run_suite(&cache, &suite, &bounds, &cli.global, &width)?
        }
        Command::Identities { bounds } => {
            run_suite(&cache, "identities", &bounds, &cli.global, &width)?
        }
        Command::Report { bounds } => {
            let report = suites::run_report(&cache, &bounds, cli.global.order, &width, cli.global.jobs)?;
            output::print_report(&report, cli.global.format);
            report.summary.failed == 0
        }
        Command::Branches {
            index,
            family,
            figure_grid: use_figure,
            default_grid: use_default,
            times,
            crossings,
            out,
        } => {
            let fam = DeformFamily::from_str(&family)?;
            let min_index = match fam {
                DeformFamily::F => 3,
                DeformFamily::Fhat => 2,
            };
            if index < min_index {
                anyhow::bail!("family {family} has no positive branches below index {min_index}");
            }
            if crossings {
                let records = betti_core::branches::find_crossings(&cache, fam, index, &width)?;
                let json = crossings_json(&records);
                output::emit(out.as_deref(), &serde_json::to_string_pretty(&json)?)?;
                return Ok(true);
            }
            let grid = if use_figure {
                figure_grid()
            } else if !times.is_empty() {
                times
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()?
            } else if use_default || times.is_empty() {
                let slice = betti_core::branches::crossing_polynomial(&cache, fam, index)?;
                default_grid(&slice)?
            } else {
                unreachable!()
            };
            let trace = betti_core::branches::track_branches(&cache, fam, index, &grid, &width)?;
            let csv = branches_csv(&trace, cli.global.digits);
            output::emit(out.as_deref(), &csv)?;
            true
        }
    };
    Ok(all_pass)
}

fn run_suite(
    cache: &Cache,
    suite: &str,
    bounds: &suites::SuiteBounds,
    global: &GlobalOpts,
    width: &Rat,
) -> anyhow::Result<bool> {
    let verdicts = suites::run_suite(cache, suite, bounds, global.order, width, global.jobs)?;
    output::print_verdicts(&verdicts, global.format);
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    if global.format == Format::Table {
        println!(
            "{} verdicts, {} passed, {} failed",
            verdicts.len(),
            verdicts.len() - failed,
            failed
        );
    }
    Ok(failed == 0)
}

fn parse_range(spec: &str) -> anyhow::Result<(u32, u32)> {
    if let Some((a, b)) = spec.split_once("..") {
        let lo: u32 = a.trim().parse()?;
        let hi: u32 = b.trim().trim_start_matches('=').trim().parse()?;
        if lo > hi {
            anyhow::bail!("empty range {spec}");
        }
        Ok((lo, hi))
    } else {
        let n: u32 = spec.trim().parse()?;
        Ok((n, n))
    }
}

fn parse_domain(spec: &str) -> anyhow::Result<Domain> {
    let (a, b) = spec
        .split_once("..")
        .ok_or_else(|| anyhow::anyhow!("domain must look like LO..HI"))?;
    let lo = match a.trim() {
        "-inf" => Bound::NegInf,
        s => Bound::Finite(parse_rat(s)?),
    };
    let hi = match b.trim() {
        "inf" | "+inf" => Bound::PosInf,
        s => Bound::Finite(parse_rat(s)?),
    };
    Ok(Domain {
        lo,
        hi,
        lo_closed: false,
        hi_closed: false,
    })
}

fn cmd_compute(
    cache: &Cache,
    family: &str,
    lo: u32,
    hi: u32,
    format: Format,
) -> anyhow::Result<()> {
    if let Ok(fam) = UniFamily::from_str(family) {
        if lo < fam.min_index() {
            anyhow::bail!("{} is defined from index {}", fam.tag(), fam.min_index());
        }
        for n in lo..=hi {
            let poly = cache.uni(fam, n)?;
            output::print_uni(fam, n, &poly, format);
        }
        return Ok(());
    }
    let fam = DeformFamily::from_str(family)?;
    if lo < 1 {
        anyhow::bail!("{} is indexed from 1", fam.tag());
    }
    for n in lo..=hi {
        let poly = cache.deform(fam, n);
        output::print_deform(fam, n, &poly, format);
    }
    Ok(())
}
