//! Command-line front end.
//!
//! ```text
//! rational-gauge compute --group <expr> --b2 <n> --space <tag> [--format text|json|latex]
//!                        [--series <N>] [--max-degree <N>] [--check]
//! rational-gauge tables  --group <expr> --b2 <n> [--format ...] [--series <N>]
//! rational-gauge selftest
//! ```
//!
//! Exit codes: 0 on success, 1 for invalid arguments or groups, 2 when a
//! consistency check fails.

mod render;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

pub use render::{render_report, render_reports, Format};
pub use report::{build_report, AlgebraReport, FactorReport, GroupReport, Report};

use crate::homotopy::{BaseData, SpaceTag};
use crate::liegroups::{parse_group_spec, GroupSpec};
use crate::verify;

/// Largest `--series` degree accepted.
pub const MAX_SERIES_DEGREE: usize = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "rational-gauge",
    version,
    about = "Rational homotopy and cohomology of gauge groups and moduli of connections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report one space.
    Compute(ComputeArgs),
    /// Report every space for one group and b2.
    Tables(TablesArgs),
    /// Run the consistency checks over the built-in group list.
    Selftest,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Structure group, e.g. `SU(2)`, `E8`, `Spin(7)xSp(2)`, `SU(3)^2`.
    #[arg(long)]
    group: String,
    /// Second Betti number of the four-manifold.
    #[arg(long)]
    b2: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Expand the Poincaré series through this degree.
    #[arg(long, value_name = "N")]
    series: Option<usize>,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// g | g0 | gauge | gauge-tilde | b-tilde | b-tilde-star | b-star | bg
    #[arg(long)]
    space: SpaceTag,
    /// Highest degree listed (default 2·max exponent + 2).
    #[arg(long, value_name = "N")]
    max_degree: Option<u32>,
    /// Run the consistency checks for this group and b2 first.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args)]
struct TablesArgs {
    #[command(flatten)]
    common: CommonArgs,
}

/// Runs the CLI with process stdout/stderr and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against the given writers. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match cli.command {
        Command::Compute(args) => compute(args, out, err),
        Command::Tables(args) => tables(args, out, err),
        Command::Selftest => selftest(out),
    }
}

fn parse_common(args: &CommonArgs, err: &mut dyn Write) -> Option<GroupSpec> {
    if args.series.is_some_and(|n| n > MAX_SERIES_DEGREE) {
        let _ = writeln!(err, "error: --series must be at most {MAX_SERIES_DEGREE}");
        return None;
    }
    match parse_group_spec(&args.group) {
        Ok(g) => Some(g),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            None
        }
    }
}

fn compute(args: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(g) = parse_common(&args.common, err) else {
        return 1;
    };
    let base = BaseData::new(args.common.b2);
    let max_degree = args
        .max_degree
        .unwrap_or_else(|| verify::default_max_degree(&g));
    if args.check {
        let checks = verify::check_all(&g, base, max_degree.max(1));
        if !checks.all_passed() {
            let _ = write!(err, "consistency check failed:\n{checks}");
            return 2;
        }
        let _ = writeln!(err, "checks: {} passed", checks.len());
    }
    let report = build_report(&g, base, args.space, args.common.series, Some(max_degree));
    let _ = write!(out, "{}", render_report(&report, args.common.format));
    0
}

fn tables(args: TablesArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(g) = parse_common(&args.common, err) else {
        return 1;
    };
    let base = BaseData::new(args.common.b2);
    let reports: Vec<Report> = SpaceTag::ALL
        .into_iter()
        .map(|space| build_report(&g, base, space, args.common.series, None))
        .collect();
    let _ = write!(out, "{}", render_reports(&reports, args.common.format));
    0
}

fn selftest(out: &mut dyn Write) -> i32 {
    let zoo = verify::group_zoo();
    let summary = verify::run_selftest(&zoo, &verify::SELFTEST_B2);
    let _ = writeln!(
        out,
        "selftest: {} groups x {} values of b2 = {} cases, {} checks",
        summary.groups,
        verify::SELFTEST_B2.len(),
        summary.cases,
        summary.checks
    );
    if summary.passed() {
        let _ = writeln!(out, "all checks passed");
        0
    } else {
        for (group, b2, check) in &summary.failures {
            let _ = writeln!(
                out,
                "FAIL  {group}, b2 = {b2}: {}: {}",
                check.name, check.detail
            );
        }
        let _ = writeln!(out, "{} checks failed", summary.failures.len());
        2
    }
}
