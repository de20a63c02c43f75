//! `qdisc` subcommands: `disc`, `roots`, `verify` and `scan`.

pub mod scan;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qdisc_core::closed_form::discriminant_closed_form;
use qdisc_core::exact::{format_rational, parse_rational, Poly};
use qdisc_core::real_roots::{default_width, isolate_real_roots};
use qdisc_core::verify::run_verification;
use qdisc_core::QuadrinomialParams;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "qdisc",
    version,
    about = "Exact discriminants and real roots of xⁿ + t(x² + ax + b)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Δ(t) as coefficients, constant term first, or its value at t.
    Disc {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Count and isolate the real roots of a polynomial given constant-first.
    Roots {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Compare the closed form with the Bezoutian and resultant oracles.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate Δ over an integer grid and sort by |Δ|.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        range: i64,
        #[arg(long)]
        t_range: i64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl From<qdisc_core::Error> for CliError {
    fn from(e: qdisc_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Disc { n, a, b, t } => cmd_disc(n, &a, &b, t.as_deref(), out),
        Command::Roots { poly } => cmd_roots(&poly, out),
        Command::Verify {
            n_max,
            trials,
            seed,
        } => cmd_verify(n_max, trials, seed, out),
        Command::Scan {
            n,
            range,
            t_range,
            out: path,
            format,
        } => {
            let opts = scan::ScanOptions {
                n,
                range,
                t_range,
                threads: scan::threads_from_env(),
            };
            let records = scan::run_scan(&opts)?;
            let checked = scan::spot_check(&records, &opts)?;
            eprintln!(
                "spot-checked {checked} of {} records against the resultant",
                records.len()
            );
            match path {
                Some(p) => {
                    let file = std::fs::File::create(&p).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", p.display()))
                    })?;
                    let mut w = std::io::BufWriter::new(file);
                    scan::write_records(&records, format, &mut w)?;
                    w.flush()?;
                    Ok(())
                }
                None => scan::write_records(&records, format, out),
            }
        }
    }
}

pub fn cmd_disc(
    n: usize,
    a: &str,
    b: &str,
    t: Option<&str>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let params = QuadrinomialParams::new(n, parse_rational(a)?, parse_rational(b)?)?;
    let d = discriminant_closed_form(&params)?;
    match t {
        Some(t) => writeln!(out, "{}", format_rational(&d.eval(&parse_rational(t)?)))?,
        None => writeln!(out, "{}", d.to_coeff_list())?,
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct Interval {
    lo: String,
    hi: String,
}

#[derive(Debug, Serialize)]
struct RootsReport {
    count: usize,
    intervals: Vec<Interval>,
    exact_roots: Vec<String>,
}

pub fn cmd_roots(poly: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let f = Poly::parse(poly, 'x')?;
    if f.is_zero() {
        return Err(CliError::Usage(
            "the zero polynomial has no finite root count".into(),
        ));
    }
    let iso = isolate_real_roots(&f, &default_width())?;
    let report = RootsReport {
        count: iso.intervals.len(),
        intervals: iso
            .intervals
            .iter()
            .map(|(lo, hi)| Interval {
                lo: format_rational(lo),
                hi: format_rational(hi),
            })
            .collect(),
        exact_roots: iso.exact_roots.iter().map(format_rational).collect(),
    };
    serde_json::to_writer(&mut *out, &report).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn cmd_verify(
    n_max: usize,
    trials: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let report = run_verification(n_max, trials, seed)?;
    for d in &report.degrees {
        let tag = if d.ok() { "pass" } else { "FAIL" };
        writeln!(out, "n={}: {}/{} {tag}", d.n, d.passed, d.trials)?;
    }
    let summary = format!("{}/{}", report.passed_degrees(), report.degrees.len());
    if report.all_passed() {
        writeln!(out, "OK {summary}")?;
        Ok(())
    } else {
        writeln!(out, "FAILED {summary}")?;
        Err(CliError::Verification(format!(
            "closed form disagrees with an oracle ({summary} degrees passed)"
        )))
    }
}
