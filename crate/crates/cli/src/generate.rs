use std::io::{self, Write};

use bidegree::generate::{counterexample1_min_n, GeneratorSpec};
use clap::{Args, ValueEnum};

use crate::record::{RecordFormat, SequenceRecord};
use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Both vectors uniform over `[min..max]` with sum `total`.
    Uniform,
    /// Independent power-law in- and out-degrees.
    Powerlaw,
    /// The sharpness family for the max-product bound.
    Counterexample1,
    /// `a = b =` the extremal minimizer vector.
    Extremal,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GenParams {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub total: Option<u64>,
    /// Minimum degree (uniform; default 0).
    #[arg(long)]
    pub min: Option<u64>,
    /// Maximum degree (uniform: default n; extremal: required).
    #[arg(long)]
    pub max: Option<u64>,
    /// Power-law exponent, must exceed 2 (default 2.5).
    #[arg(long)]
    pub exponent: Option<f64>,
    /// Maximum in-degree (counterexample1).
    #[arg(long = "Ma")]
    pub max_in: Option<u64>,
    /// Maximum out-degree (counterexample1).
    #[arg(long = "Mb")]
    pub max_out: Option<u64>,
}

fn required(value: Option<u64>, flag: &str, kind: &str) -> Result<u64, String> {
    value.ok_or_else(|| format!("--kind {kind} needs --{flag}"))
}

impl GenParams {
    pub fn spec(&self, kind: Kind, seed: u64) -> Result<GeneratorSpec, String> {
        Ok(match kind {
            Kind::Uniform => {
                let n = required(self.n, "n", "uniform")?;
                GeneratorSpec::UniformBounded {
                    n,
                    total: required(self.total, "total", "uniform")?,
                    min: self.min.unwrap_or(0),
                    max: self.max.unwrap_or(n),
                    seed,
                }
            }
            Kind::Powerlaw => GeneratorSpec::PowerLaw {
                n: required(self.n, "n", "powerlaw")?,
                exponent: self.exponent.unwrap_or(2.5),
                seed,
            },
            Kind::Counterexample1 => {
                let max_in = required(self.max_in, "Ma", "counterexample1")?;
                let max_out = required(self.max_out, "Mb", "counterexample1")?;
                GeneratorSpec::Counterexample1 {
                    max_in,
                    max_out,
                    n: self.n.unwrap_or_else(|| counterexample1_min_n(max_in, max_out)),
                }
            }
            Kind::Extremal => GeneratorSpec::ExtremalMinimizer {
                n: required(self.n, "n", "extremal")?,
                total: required(self.total, "total", "extremal")?,
                max: required(self.max, "max", "extremal")?,
            },
        })
    }
}

/// Generates `count` records; record `i` uses seed `seed + i` (wrapping).
pub fn generate_records(
    kind: Kind,
    params: &GenParams,
    count: u64,
    seed: u64,
) -> impl Iterator<Item = Result<SequenceRecord, String>> + '_ {
    (0..count).map(move |i| {
        let spec = params.spec(kind, seed.wrapping_add(i))?;
        spec.generate().map(|s| SequenceRecord::from_sequence(&s)).map_err(|e| e.to_string())
    })
}

pub fn run_generate<W: Write, E: Write>(
    kind: Kind,
    params: &GenParams,
    count: u64,
    seed: u64,
    format: RecordFormat,
    out: &mut W,
    err: &mut E,
) -> io::Result<Status> {
    for record in generate_records(kind, params, count, seed) {
        match record {
            Ok(r) => writeln!(out, "{}", r.render(format))?,
            Err(msg) => {
                writeln!(err, "{msg}")?;
                return Ok(Status::InputError);
            }
        }
    }
    Ok(Status::Ok)
}
