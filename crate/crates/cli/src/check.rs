use std::io::{self, BufRead, Write};

use bidegree::exact;
use bidegree::sufficient::certify;
use bidegree::{BidegreeSequence, CheckOutcome, Condition};
use clap::ValueEnum;

use crate::record::{load, records, Loaded};
use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Cor2,
    Cor3,
    Cor5,
    Auto,
}

impl Method {
    pub fn condition(self) -> Option<Condition> {
        match self {
            Method::Exact | Method::Auto => None,
            other => Condition::from_name(other.to_possible_value()?.get_name()),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub allow_loops: bool,
    pub method: Method,
    pub fallback_exact: bool,
}

impl CheckOptions {
    /// Rejects loop-only certificates when loops are forbidden.
    pub fn validate(&self) -> Result<(), String> {
        match self.method.condition() {
            Some(c) if c.needs_loops() && !self.allow_loops => {
                Err(format!("{c} only certifies graphicality with loops; drop --no-loops"))
            }
            _ => Ok(()),
        }
    }
}

fn exact_line(seq: &BidegreeSequence, allow_loops: bool) -> (String, Status) {
    match exact::check(seq, allow_loops) {
        CheckOutcome::NotGraphic(w) => (format!("NOT_GRAPHIC exact {w}"), Status::NotGraphic),
        _ => ("GRAPHIC exact".to_string(), Status::Ok),
    }
}

/// Verdict line for one valid sequence.
pub fn check_sequence(seq: &BidegreeSequence, opts: &CheckOptions) -> (String, Status) {
    let (outcome, label) = match opts.method {
        Method::Exact => return exact_line(seq, opts.allow_loops),
        Method::Auto => (certify(seq, opts.allow_loops, false), "auto".to_string()),
        m => {
            let c = m.condition().expect("condition method");
            (c.check(seq), c.to_string())
        }
    };
    match outcome.certificate() {
        Some(cert) => (format!("GRAPHIC {cert}"), Status::Ok),
        None if opts.fallback_exact => exact_line(seq, opts.allow_loops),
        None => (format!("INCONCLUSIVE {label}"), Status::Inconclusive),
    }
}

/// Writes one verdict line per record and returns the combined status.
pub fn run_check<R: BufRead, W: Write, E: Write>(
    input: R,
    out: &mut W,
    err: &mut E,
    opts: &CheckOptions,
) -> io::Result<Status> {
    let mut status = Status::Ok;
    for item in records(input) {
        let (line_no, parsed) = item?;
        let (line, s) = match load(parsed) {
            Loaded::Sequence(seq) => check_sequence(&seq, opts),
            Loaded::SumMismatch => ("NOT_GRAPHIC sum-mismatch".to_string(), Status::NotGraphic),
            Loaded::Invalid(msg) => {
                writeln!(err, "line {line_no}: {msg}")?;
                (format!("ERROR line {line_no}"), Status::InputError)
            }
        };
        writeln!(out, "{line}")?;
        status = status.merge(s);
    }
    Ok(status)
}
