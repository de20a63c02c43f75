//! Brute-force scan of `Δ(f_c(t; x))` over `[−R, R]² × [1, T]`.

use std::io::Write;

use num::{BigInt, Signed, Zero};
use qdisc_core::closed_form::discriminant_closed_form;
use qdisc_core::exact::rat;
use qdisc_core::real_roots::sturm_total;
use qdisc_core::verify::discriminant_by_resultant;
use qdisc_core::QuadrinomialParams;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::{CliError, Format};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub n: usize,
    pub a: i64,
    pub b: i64,
    pub t: i64,
    #[serde(serialize_with = "as_string")]
    pub disc: BigInt,
    #[serde(serialize_with = "as_string")]
    pub abs_disc: BigInt,
    pub n_real_roots: usize,
}

fn as_string<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl ScanRecord {
    /// Nonzero `|Δ|` ascending, zeros last, then `(a, b, t)`.
    fn sort_key(&self) -> (bool, &BigInt, i64, i64, i64) {
        (
            self.abs_disc.is_zero(),
            &self.abs_disc,
            self.a,
            self.b,
            self.t,
        )
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub n: usize,
    pub range: i64,
    pub t_range: i64,
    pub threads: usize,
}

/// `QDISC_THREADS` if set to a positive integer, else the available
/// parallelism.
pub fn threads_from_env() -> usize {
    std::env::var("QDISC_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |k| k.get()))
}

fn scan_row(n: usize, a: i64, range: i64, t_range: i64) -> Result<Vec<ScanRecord>, CliError> {
    let mut out = Vec::new();
    for b in -range..=range {
        // f = xⁿ + t·x² has no meaningful minimal discriminant.
        if a == 0 && b == 0 {
            continue;
        }
        let params = QuadrinomialParams::new(n, rat(a), rat(b))?;
        let d = discriminant_closed_form(&params)?;
        for t in 1..=t_range {
            let tr = rat(t);
            let disc = d.eval(&tr).to_integer();
            out.push(ScanRecord {
                n,
                a,
                b,
                t,
                abs_disc: disc.abs(),
                disc,
                n_real_roots: sturm_total(&params.f_at(&tr))?,
            });
        }
    }
    Ok(out)
}

/// All records, sorted. Rows of constant `a` are sharded across scoped
/// threads and concatenated in order before sorting.
pub fn run_scan(opts: &ScanOptions) -> Result<Vec<ScanRecord>, CliError> {
    if opts.n < 3 {
        return Err(CliError::Usage(format!(
            "n must be at least 3, got {}",
            opts.n
        )));
    }
    if opts.range < 1 || opts.t_range < 1 {
        return Err(CliError::Usage(
            "--range and --t-range must be at least 1".into(),
        ));
    }
    let rows: Vec<i64> = (-opts.range..=opts.range).collect();
    let chunk = rows.len().div_ceil(opts.threads.max(1));
    let shards: Vec<Result<Vec<ScanRecord>, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = rows
            .chunks(chunk)
            .map(|as_| {
                scope.spawn(move || {
                    let mut buf = Vec::new();
                    for &a in as_ {
                        buf.extend(scan_row(opts.n, a, opts.range, opts.t_range)?);
                    }
                    Ok(buf)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut records = Vec::new();
    for shard in shards {
        records.extend(shard?);
    }
    records.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(records)
}

/// Re-derives `disc` with the resultant oracle on a seeded 1% sample (at
/// least one record). Returns the number of records checked.
pub fn spot_check(records: &[ScanRecord], opts: &ScanOptions) -> Result<usize, CliError> {
    if records.is_empty() {
        return Ok(0);
    }
    let seed = (opts.n as u64) << 40 ^ (opts.range as u64) << 20 ^ opts.t_range as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = records.len().div_ceil(100);
    for i in sample(&mut rng, records.len(), k) {
        let r = &records[i];
        let params = QuadrinomialParams::new(r.n, rat(r.a), rat(r.b))?;
        let oracle = discriminant_by_resultant(&params.f_at(&rat(r.t)))?;
        if oracle != num::BigRational::from_integer(r.disc.clone()) {
            return Err(CliError::Verification(format!(
                "spot check failed at (a, b, t) = ({}, {}, {}): closed form {}, resultant {oracle}",
                r.a, r.b, r.t, r.disc
            )));
        }
    }
    Ok(k)
}

pub fn write_records(
    records: &[ScanRecord],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let io = |e: String| CliError::Usage(format!("write failed: {e}"));
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(|e| io(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records).map_err(|e| io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}
