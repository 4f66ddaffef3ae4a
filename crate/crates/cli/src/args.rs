use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{bench, write_report, ReportFormat};
use crate::bound::{run_bound, TableFormat};
use crate::check::{run_check, CheckOptions, Method};
use crate::generate::{generate_records, run_generate, GenParams, Kind};
use crate::realize::{run_realize, MatrixFormat};
use crate::record::{load, records, Loaded, RecordFormat};
use crate::Status;

/// Graphicality checks, bounds, realizations and generators for
/// directed degree sequences.
#[derive(Debug, Parser)]
#[command(name = "bidegree", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide graphicality of each record.
    Check {
        /// Record file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        policy: LoopPolicy,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Run the exact check when the chosen certificate is inconclusive.
        #[arg(long)]
        fallback_exact: bool,
    },
    /// Print the maximum-degree bound of each condition for given stats.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        /// Edge count S (sum of either degree vector).
        #[arg(long)]
        total: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Print a 0-1 realization of each graphic record.
    Realize {
        input: Option<PathBuf>,
        #[command(flatten)]
        policy: LoopPolicy,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Dense)]
        format: MatrixFormat,
    },
    /// Emit generated records.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        params: GenParams,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Base seed; record i uses seed + i.
        #[arg(long, env = "BIDEGREE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputRecordFormat::Plain)]
        format: OutputRecordFormat,
    },
    /// Coverage and timing of every condition over a corpus.
    Bench {
        /// Record file to benchmark.
        #[arg(long, conflicts_with = "kind")]
        corpus: Option<PathBuf>,
        /// Generate the corpus instead of reading one.
        #[arg(long, value_enum, required_unless_present = "corpus")]
        kind: Option<Kind>,
        #[command(flatten)]
        params: GenParams,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, env = "BIDEGREE_SEED", default_value_t = 0)]
        seed: u64,
        /// Calls per check per record; timings are the per-call mean.
        #[arg(long, default_value_t = 5)]
        repeat: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

/// `--loops` (default) or `--no-loops`; the last one given wins.
#[derive(Debug, Clone, Copy, Args)]
pub struct LoopPolicy {
    /// Allow self-loops (default).
    #[arg(long, overrides_with = "no_loops")]
    loops: bool,
    /// Forbid self-loops.
    #[arg(long = "no-loops", overrides_with = "loops")]
    no_loops: bool,
}

impl LoopPolicy {
    pub fn allow_loops(self) -> bool {
        !self.no_loops
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputRecordFormat {
    Plain,
    Json,
}

impl From<OutputRecordFormat> for RecordFormat {
    fn from(f: OutputRecordFormat) -> Self {
        match f {
            OutputRecordFormat::Plain => RecordFormat::Plain,
            OutputRecordFormat::Json => RecordFormat::Json,
        }
    }
}

fn open(path: Option<&PathBuf>) -> io::Result<Box<dyn BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(io::stdin().lock())),
    }
}

fn load_corpus<E: Write>(input: Box<dyn BufRead>, err: &mut E) -> io::Result<Option<Vec<bidegree::BidegreeSequence>>> {
    let mut corpus = Vec::new();
    for item in records(input) {
        let (line_no, parsed) = item?;
        match load(parsed) {
            Loaded::Sequence(s) => corpus.push(s),
            Loaded::SumMismatch => {
                writeln!(err, "line {line_no}: in- and out-degree sums differ")?;
                return Ok(None);
            }
            Loaded::Invalid(msg) => {
                writeln!(err, "line {line_no}: {msg}")?;
                return Ok(None);
            }
        }
    }
    Ok(Some(corpus))
}

fn dispatch<W: Write, E: Write>(cli: Cli, out: &mut W, err: &mut E) -> io::Result<Status> {
    match cli.command {
        Command::Check { input, policy, method, fallback_exact } => {
            let opts = CheckOptions { allow_loops: policy.allow_loops(), method, fallback_exact };
            if let Err(msg) = opts.validate() {
                writeln!(err, "{msg}")?;
                return Ok(Status::InputError);
            }
            run_check(open(input.as_ref())?, out, err, &opts)
        }
        Command::Bound { n, m, total, format } => run_bound(n, m, total, format, out, err),
        Command::Realize { input, policy, format } => {
            run_realize(open(input.as_ref())?, out, err, policy.allow_loops(), format)
        }
        Command::Generate { kind, params, count, seed, format } => {
            run_generate(kind, &params, count, seed, format.into(), out, err)
        }
        Command::Bench { corpus, kind, params, count, seed, repeat, format } => {
            let sequences = match kind {
                Some(kind) => {
                    let mut v = Vec::new();
                    for r in generate_records(kind, &params, count, seed) {
                        match r.and_then(|r| r.to_sequence().map_err(|e| e.to_string())) {
                            Ok(s) => v.push(s),
                            Err(msg) => {
                                writeln!(err, "{msg}")?;
                                return Ok(Status::InputError);
                            }
                        }
                    }
                    v
                }
                None => match load_corpus(open(corpus.as_ref())?, err)? {
                    Some(v) => v,
                    None => return Ok(Status::InputError),
                },
            };
            write_report(&bench(&sequences, repeat), format, out)?;
            Ok(Status::Ok)
        }
    }
}

/// Runs a parsed command against the process's standard streams and
/// returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let status = match dispatch(cli, &mut out, &mut err).and_then(|s| out.flush().map(|()| s)) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Status::Ok,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::InputError
        }
    };
    status.code()
}
