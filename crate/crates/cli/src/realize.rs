use std::io::{self, BufRead, Write};

use bidegree::{realize, Realized};
use clap::ValueEnum;

use crate::record::{load, records, Loaded};
use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    /// `n` lines of `0`/`1`; row `i` lists the sources of edges into `i`.
    Dense,
    /// One `src dst` line per edge.
    Edges,
}

/// Writes a realization per record, separated by blank lines.
pub fn run_realize<R: BufRead, W: Write, E: Write>(
    input: R,
    out: &mut W,
    err: &mut E,
    allow_loops: bool,
    format: MatrixFormat,
) -> io::Result<Status> {
    let mut status = Status::Ok;
    let mut first = true;
    for item in records(input) {
        let (line_no, parsed) = item?;
        if !std::mem::take(&mut first) {
            writeln!(out)?;
        }
        let s = match load(parsed) {
            Loaded::Sequence(seq) => match realize(&seq, allow_loops) {
                Realized::Graphic(m) => {
                    match format {
                        MatrixFormat::Dense => {
                            for row in m.dense_rows() {
                                writeln!(out, "{row}")?;
                            }
                        }
                        MatrixFormat::Edges => {
                            for (src, dst) in m.edges() {
                                writeln!(out, "{src} {dst}")?;
                            }
                        }
                    }
                    Status::Ok
                }
                Realized::NotGraphic(w) => {
                    writeln!(out, "NOT_GRAPHIC {w}")?;
                    Status::NotGraphic
                }
            },
            Loaded::SumMismatch => {
                writeln!(out, "NOT_GRAPHIC sum-mismatch")?;
                Status::NotGraphic
            }
            Loaded::Invalid(msg) => {
                writeln!(err, "line {line_no}: {msg}")?;
                writeln!(out, "ERROR line {line_no}")?;
                Status::InputError
            }
        };
        status = status.merge(s);
    }
    Ok(status)
}
