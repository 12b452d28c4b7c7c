//! Command-line front end: stream the sequences, extract structure, verify
//! the claimed invariants, certify twin pairs, and sweep seed ranges.
//!
//! Exit codes: 0 success, 1 usage error, 2 a checked claim has a
//! counterexample in the scanned range, 3 overflow or other abort.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use gcdtwin_core::alt_seq::alt_verify;
use gcdtwin_core::analysis::{
    detect_events, record_differences, segment_stats, verify_observations, ClaimStatus,
    EventClass, quadruples,
};
use gcdtwin_core::primality::is_prime;
use gcdtwin_core::seq::{stream, SequenceSpec};
use gcdtwin_core::twin_forge::{criterion_check, scan_range, twins_from, ScanReport};
use gcdtwin_core::{analysis, Error as CoreError};

use output::{Cell, Format, Table};

#[derive(Parser)]
#[command(
    name = "gcdtwin",
    version,
    about = "Gcd-driven recurrences, their structure, and the twin primes they generate"
)]
struct Cli {
    /// Output format for the primary result
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: FormatArg,

    /// Write the primary output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Worker threads for seed scans (0 = one per core)
    #[arg(long, global = true, env = "GCDTWIN_WORKERS", default_value_t = 0)]
    workers: usize,

    /// Suppress the timing footer on stderr
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    Canonical,
    Seeded,
    Alternate,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Fundamentals,
    Segments,
    Records,
    Betas,
    Quadruples,
    Events,
    RhoRatios,
}

#[derive(Subcommand)]
enum Command {
    /// Stream points and increments of one sequence
    Gen {
        #[arg(long, value_enum)]
        seq: SeqArg,
        /// Start value for the seeded family
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        n_max: u64,
    },
    /// Extract structure from the canonical sequence
    Analyze {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value = "segments")]
        what: What,
    },
    /// Check every claimed invariant over a canonical prefix
    Verify {
        #[arg(long)]
        n_max: u64,
    },
    /// Build and certify a twin-prime pair from a seed m >= 4
    TwinsFrom { m: u64 },
    /// Test whether every step of the seeded sequence for m is trivial,
    /// cross-checked against m being the greater of a twin-prime pair
    Criterion { m: u64 },
    /// Run the twin construction for every seed in [LO, HI]
    Scan { lo: u64, hi: u64 },
    /// Verify the alternate sequence's fundamental points
    Alt {
        #[arg(long)]
        n_max: u64,
    },
}

enum AppError {
    Usage(String),
    Core(CoreError),
    Io(io::Error),
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        AppError::Core(e)
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::Io(e)
    }
}

/// Whether the run surfaced a counterexample to a checked claim.
enum Outcome {
    Clean,
    CounterexampleFound,
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let quiet = cli.quiet;
    let code = match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::CounterexampleFound) => ExitCode::from(2),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                CoreError::Overflow { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    };
    if !quiet {
        eprintln!("# elapsed {:?}", started.elapsed());
    }
    code
}

fn run(cli: Cli) -> Result<Outcome, AppError> {
    let format: Format = cli.format.into();
    let mut writer: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };

    let outcome = match cli.command {
        Command::Gen { seq, seed, n_max } => cmd_gen(seq, seed, n_max, format, &mut writer)?,
        Command::Analyze { n_max, what } => cmd_analyze(n_max, what, format, &mut writer)?,
        Command::Verify { n_max } => cmd_verify(n_max, format, &mut writer)?,
        Command::TwinsFrom { m } => cmd_twins_from(m, format, &mut writer)?,
        Command::Criterion { m } => cmd_criterion(m, format, &mut writer)?,
        Command::Scan { lo, hi } => cmd_scan(lo, hi, cli.workers, format, &mut writer)?,
        Command::Alt { n_max } => cmd_alt(n_max, format, &mut writer)?,
    };
    writer.flush()?;
    Ok(outcome)
}

fn spec_for(seq: SeqArg, seed: Option<u64>) -> Result<SequenceSpec, AppError> {
    match (seq, seed) {
        (SeqArg::Canonical, None) => Ok(SequenceSpec::canonical()),
        (SeqArg::Alternate, None) => Ok(SequenceSpec::alternate()),
        (SeqArg::Seeded, Some(m)) => Ok(SequenceSpec::seeded(m)?),
        (SeqArg::Seeded, None) => Err(AppError::Usage(
            "--seq seeded requires --seed M".to_string(),
        )),
        _ => Err(AppError::Usage(
            "--seed only applies to --seq seeded".to_string(),
        )),
    }
}

fn cmd_gen(
    seq: SeqArg,
    seed: Option<u64>,
    n_max: u64,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, AppError> {
    let spec = spec_for(seq, seed)?;
    let mut table = Table::new("points", vec!["n", "value", "h", "kind"]);
    for item in stream(spec, n_max)? {
        let it = item?;
        let (h, kind) = match it.event {
            None => (Cell::Empty, "start"),
            Some(e) if e.reset => (Cell::Int(e.h), "reset"),
            Some(e) if e.is_trivial() => (Cell::Int(e.h), "trivial"),
            Some(e) => (Cell::Int(e.h), "nontrivial"),
        };
        table.row(vec![
            it.point.n.into(),
            it.point.value.into(),
            h,
            Cell::text(kind),
        ]);
    }
    table.write(format, out)?;
    Ok(Outcome::Clean)
}

fn status_cells(status: &ClaimStatus) -> [Cell; 4] {
    match status {
        ClaimStatus::Holds { cases } => [
            Cell::text("holds"),
            (*cases).into(),
            Cell::Empty,
            Cell::Empty,
        ],
        ClaimStatus::Counterexample { n, details } => [
            Cell::text("counterexample"),
            Cell::Empty,
            (*n).into(),
            Cell::text(details.clone()),
        ],
        ClaimStatus::Vacuous => [
            Cell::text("vacuous"),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
        ],
    }
}

fn cmd_verify(n_max: u64, format: Format, out: &mut dyn Write) -> Result<Outcome, AppError> {
    let report = verify_observations(n_max)?;
    let mut table = Table::new(
        "verification",
        vec!["check", "status", "cases", "witness_n", "details"],
    );
    for (name, status) in report.checks() {
        let [status_cell, cases, n, details] = status_cells(status);
        table.row(vec![Cell::text(name), status_cell, cases, n, details]);
    }
    table.write(format, out)?;

    if format == Format::Table {
        let mut ratios = Table::new(
            "rho-ratios",
            vec!["ordinal", "rho", "m", "ratio", "decimal"],
        );
        for r in &report.rho_ratios {
            ratios.row(vec![
                u64::from(r.ordinal).into(),
                r.rho.into(),
                r.m.into(),
                Cell::text(format!("{}/{}", r.rho, r.m)),
                Cell::text(format!("{:.6}", r.ratio.to_f64())),
            ]);
        }
        writeln!(out)?;
        ratios.write(format, out)?;
    }

    Ok(if report.all_hold() {
        Outcome::Clean
    } else {
        Outcome::CounterexampleFound
    })
}

fn cmd_analyze(
    n_max: u64,
    what: What,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, AppError> {
    let det = detect_events(n_max)?;
    let table = match what {
        What::Fundamentals => {
            let mut t = Table::new(
                "fundamental-points",
                vec!["ordinal", "m", "value", "div6", "lower", "upper", "twins_prime"],
            );
            for f in &det.fundamentals {
                t.row(vec![
                    u64::from(f.ordinal).into(),
                    f.m.into(),
                    f.value.into(),
                    f.divisible_by_6.into(),
                    f.twin.map(|w| w.lower).into(),
                    f.twin.map(|w| w.upper).into(),
                    f.twin.map(|w| w.both_prime).into(),
                ]);
            }
            t
        }
        What::Segments => {
            let mut t = Table::new(
                "segments",
                vec![
                    "ordinal",
                    "from",
                    "to",
                    "main_point",
                    "main_h",
                    "minors",
                    "minor_sum",
                    "rho",
                    "rho_value",
                    "lambda",
                    "lambda_dec",
                    "predicted_next",
                    "parity_ok",
                    "mod6_ok",
                    "cutoff_ok",
                    "rho_gamma_ok",
                    "lambda_ok",
                    "doubling_ok",
                    "main_ok",
                    "predictor_ok",
                ],
            );
            for r in segment_stats(&det.segments) {
                let s = &r.segment;
                t.row(vec![
                    u64::from(s.ordinal()).into(),
                    s.from.m.into(),
                    s.to.m.into(),
                    s.main_point.into(),
                    s.main_h.into(),
                    s.h_count.into(),
                    s.minor_sum.into(),
                    s.rho.into(),
                    s.rho_value.into(),
                    Cell::text(format!("{}/{}", s.rho, s.main_point)),
                    Cell::text(format!("{:.6}", s.lambda.to_f64())),
                    s.predicted_next.into(),
                    r.checks.minor_sum_parity.into(),
                    r.checks.minor_congruence_mod6.into(),
                    r.checks.minor_cutoff.into(),
                    r.checks.rho_gamma_bound.into(),
                    r.checks.lambda_bound.into(),
                    r.checks.doubling.into(),
                    r.checks.main_shape.into(),
                    r.checks.predictor.into(),
                ]);
            }
            t
        }
        What::Records => {
            let mut t = Table::new(
                "records",
                vec!["idx", "n", "h", "lower", "upper", "greater_of_twins"],
            );
            for (i, r) in record_differences(&det.events).iter().enumerate() {
                t.row(vec![
                    (i as u64 + 1).into(),
                    r.n.into(),
                    r.h.into(),
                    r.twin.map(|w| w.lower).into(),
                    r.twin.map(|w| w.upper).into(),
                    r.twin.map(|w| w.both_prime).into(),
                ]);
            }
            t
        }
        What::Betas => {
            let mut t = Table::new("ratio-3-points", vec!["idx", "n", "value"]);
            for (i, n) in analysis::beta_points(n_max)?.iter().enumerate() {
                t.row(vec![(i as u64 + 1).into(), (*n).into(), (3 * n).into()]);
            }
            t
        }
        What::Quadruples => {
            let mut t = Table::new(
                "quadruples",
                vec![
                    "from", "to", "doubled", "p", "p_plus_2", "twop_plus_1", "twop_plus_3",
                    "all_prime",
                ],
            );
            for q in quadruples(&det.segments) {
                t.row(vec![
                    q.from_m.into(),
                    q.to_m.into(),
                    q.doubled.into(),
                    q.members[0].0.into(),
                    q.members[1].0.into(),
                    q.members[2].0.into(),
                    q.members[3].0.into(),
                    q.all_prime.into(),
                ]);
            }
            t
        }
        What::Events => {
            let mut t = Table::new("events", vec!["n", "h", "value", "class"]);
            for e in &det.events {
                let class = match e.class {
                    EventClass::Main => "main",
                    EventClass::Minor => "minor",
                    EventClass::Orphan => "orphan",
                };
                t.row(vec![
                    e.n.into(),
                    e.h.into(),
                    e.value_after.into(),
                    Cell::text(class),
                ]);
            }
            t
        }
        What::RhoRatios => {
            let mut t = Table::new(
                "rho-ratios",
                vec!["ordinal", "rho", "m", "ratio", "decimal"],
            );
            for s in &det.segments {
                t.row(vec![
                    u64::from(s.ordinal()).into(),
                    s.rho.into(),
                    s.to.m.into(),
                    Cell::text(format!("{}/{}", s.rho, s.to.m)),
                    Cell::text(format!("{:.6}", s.rho as f64 / s.to.m as f64)),
                ]);
            }
            t
        }
    };
    table.write(format, out)?;
    Ok(Outcome::Clean)
}

fn cmd_twins_from(m: u64, format: Format, out: &mut dyn Write) -> Result<Outcome, AppError> {
    let cert = twins_from(m)?;
    let mut table = Table::new(
        "twin-certificate",
        vec!["m", "n_star", "value", "p", "p_plus_2", "verified", "bound_ok"],
    );
    table.row(vec![
        cert.m.into(),
        cert.n_star.into(),
        cert.c_at_n_star.into(),
        cert.pair.0.into(),
        cert.pair.1.into(),
        cert.verified.into(),
        cert.satisfies_bound.into(),
    ]);
    table.write(format, out)?;
    Ok(if cert.verified && cert.bound_consistent() {
        Outcome::Clean
    } else {
        Outcome::CounterexampleFound
    })
}

fn cmd_criterion(m: u64, format: Format, out: &mut dyn Write) -> Result<Outcome, AppError> {
    let by_steps = criterion_check(m)?;
    let by_oracle = is_prime(m - 2) && is_prime(m);
    let mut table = Table::new(
        "criterion",
        vec!["m", "all_steps_trivial", "twin_greater", "agree"],
    );
    table.row(vec![
        m.into(),
        by_steps.into(),
        by_oracle.into(),
        (by_steps == by_oracle).into(),
    ]);
    table.write(format, out)?;
    Ok(if by_steps == by_oracle {
        Outcome::Clean
    } else {
        Outcome::CounterexampleFound
    })
}

fn cmd_scan(
    lo: u64,
    hi: u64,
    workers: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<Outcome, AppError> {
    let report: ScanReport = if workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| AppError::Usage(e.to_string()))?;
        pool.install(|| scan_range(lo, hi))?
    } else {
        scan_range(lo, hi)?
    };

    let mut table = Table::new(
        "scan",
        vec![
            "lo",
            "hi",
            "total",
            "verified",
            "n_star_one",
            "failures",
            "bound_anomalies",
            "errors",
            "first_failure_m",
        ],
    );
    table.row(vec![
        report.lo.into(),
        report.hi.into(),
        report.total.into(),
        report.verified_count.into(),
        report.n_star_one.into(),
        (report.failures.len() as u64).into(),
        (report.bound_anomalies.len() as u64).into(),
        (report.errors.len() as u64).into(),
        report.failures.first().map(|c| c.m).into(),
    ]);
    table.write(format, out)?;

    if format == Format::Table && !report.all_verified() {
        let mut details = Table::new(
            "scan-failures",
            vec!["m", "n_star", "value", "p", "p_plus_2", "verified"],
        );
        for c in report.failures.iter().chain(&report.bound_anomalies) {
            details.row(vec![
                c.m.into(),
                c.n_star.into(),
                c.c_at_n_star.into(),
                c.pair.0.into(),
                c.pair.1.into(),
                c.verified.into(),
            ]);
        }
        writeln!(out)?;
        details.write(format, out)?;
    }
    for (m, e) in &report.errors {
        eprintln!("seed {m}: {e}");
    }

    Ok(if report.all_verified() {
        Outcome::Clean
    } else {
        Outcome::CounterexampleFound
    })
}

fn cmd_alt(n_max: u64, format: Format, out: &mut dyn Write) -> Result<Outcome, AppError> {
    let report = alt_verify(n_max)?;
    let mut table = Table::new(
        "alt-verify",
        vec![
            "ordinal",
            "m",
            "lower",
            "upper",
            "twins_prime",
            "main_shape_ok",
            "last_reset_offset",
            "relation_ok",
        ],
    );
    for (i, f) in report.fundamentals.iter().enumerate() {
        let seg = if i >= 1 { report.segments.get(i - 1) } else { None };
        table.row(vec![
            u64::from(f.ordinal).into(),
            f.m.into(),
            f.twin.lower.into(),
            f.twin.upper.into(),
            f.twin.both_prime.into(),
            f.main_shape.into(),
            seg.and_then(|s| s.last_reset_offset).into(),
            seg.and_then(|s| s.relation_holds).into(),
        ]);
    }
    table.write(format, out)?;
    Ok(if report.all_checks_pass() {
        Outcome::Clean
    } else {
        Outcome::CounterexampleFound
    })
}
