use std::io::{self, Write};

use bidegree::sufficient::bound_table;
use clap::ValueEnum;

use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

fn cell(h: Option<u64>) -> String {
    h.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

/// Prints the largest certified maximum degree of each condition for the
/// stats `(n, m, S)`, and which of them is largest.
pub fn run_bound<W: Write, E: Write>(
    n: u64,
    m: u64,
    total: u64,
    format: TableFormat,
    out: &mut W,
    err: &mut E,
) -> io::Result<Status> {
    let table = match bound_table(n, m, total) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "{e}")?;
            return Ok(Status::InputError);
        }
    };
    let largest: Vec<String> = table.largest().iter().map(|j| format!("H{j}")).collect();
    match format {
        TableFormat::Text => {
            let row: Vec<String> = (2..=6).map(|j| format!("H{j}={}", cell(table.get(j)))).collect();
            writeln!(out, "{}", row.join(" "))?;
            writeln!(out, "largest: {}", largest.join(" "))?;
        }
        TableFormat::Csv => {
            writeln!(out, "n,m,total,H2,H3,H4,H5,H6,largest")?;
            let cells: Vec<String> = (2..=6).map(|j| cell(table.get(j))).collect();
            writeln!(out, "{n},{m},{total},{},{}", cells.join(","), largest.join(" "))?;
        }
    }
    Ok(Status::Ok)
}
