//! Coverage and timing of every condition over a corpus.
//!
//! Per record the `stats` row times the O(n) precomputation (summary
//! statistics plus the symmetry flag). The stats-based conditions are then
//! timed on those precomputed values only, so their timings are independent
//! of `n`. `cor5` and the exact checks read the whole sequence.

use std::hint::black_box;
use std::io::{self, Write};
use std::time::Instant;

use bidegree::exact;
use bidegree::sufficient::{
    check_cor5, cor2_from_stats, cor3_from_stats, thm2_from_stats, thm3_from_stats,
    thm4_from_stats, thm5_from_stats, thm6_from_stats,
};
use bidegree::{BidegreeSequence, CheckOutcome, Condition, SequenceStats};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Input {
    Stats,
    Sequence,
}

impl Input {
    fn name(self) -> &'static str {
        match self {
            Input::Stats => "stats",
            Input::Sequence => "sequence",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub name: String,
    pub allow_loops: Option<bool>,
    pub input: Input,
    /// Rows that only time a step and decide nothing (the stats row).
    pub timing_only: bool,
    pub certified: usize,
    pub inconclusive: usize,
    /// Only reported for the exact checks.
    pub not_graphic: Option<usize>,
    /// Records graphic under this row's policy.
    pub exact_graphic: usize,
    pub median_ns: f64,
    pub p99_ns: f64,
}

impl BenchRow {
    /// `certified / exact_graphic`, `None` when nothing is graphic.
    pub fn coverage(&self) -> Option<f64> {
        (self.exact_graphic > 0).then(|| self.certified as f64 / self.exact_graphic as f64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub records: usize,
    pub repeat: u32,
    pub rows: Vec<BenchRow>,
}

/// Mean wall time per call over `repeat` calls, and the last result.
fn timed<T>(repeat: u32, mut f: impl FnMut() -> T) -> (T, f64) {
    let start = Instant::now();
    let mut last = f();
    for _ in 1..repeat {
        last = black_box(f());
    }
    (last, start.elapsed().as_nanos() as f64 / f64::from(repeat))
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Nearest-rank percentile.
fn percentile(sorted: &[f64], p: f64) -> f64 {
    let rank = ((p / 100.0) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

struct Acc {
    certified: usize,
    inconclusive: usize,
    not_graphic: usize,
    exact_graphic: usize,
    times: Vec<f64>,
}

impl Acc {
    fn new() -> Self {
        Self { certified: 0, inconclusive: 0, not_graphic: 0, exact_graphic: 0, times: Vec::new() }
    }
}

type StatCheck = fn(&SequenceStats) -> CheckOutcome;

const STATS_CHECKS: [(Condition, StatCheck); 6] = [
    (Condition::MaxProductLoops, thm3_from_stats),
    (Condition::MaxProductNoLoops, thm4_from_stats),
    (Condition::MeanMinLoops, thm5_from_stats),
    (Condition::MeanMinNoLoops, thm6_from_stats),
    (Condition::MultiplicityLoops, cor2_from_stats),
    (Condition::MultiplicityNoLoops, cor3_from_stats),
];

/// Runs every check `repeat` times on each sequence.
pub fn bench<'a>(corpus: impl IntoIterator<Item = &'a BidegreeSequence>, repeat: u32) -> BenchReport {
    let repeat = repeat.max(1);
    let mut stats_acc = Acc::new();
    let mut exact_acc = [Acc::new(), Acc::new()];
    let mut cond_acc: Vec<Acc> = Condition::ALL.iter().map(|_| Acc::new()).collect();
    let mut records = 0;

    for seq in corpus {
        records += 1;
        let ((stats, symmetric), t) =
            timed(repeat, || (seq.stats(), seq.sort_canonical().is_symmetric()));
        stats_acc.times.push(t);

        let mut graphic = [false; 2];
        for (slot, loops) in [(0, true), (1, false)] {
            let acc = &mut exact_acc[slot];
            let (out, t) = timed(repeat, || exact::check(black_box(seq), loops));
            acc.times.push(t);
            graphic[slot] = out.is_graphic();
            if graphic[slot] {
                acc.certified += 1;
                acc.exact_graphic += 1;
            } else {
                acc.not_graphic += 1;
            }
        }

        for (ci, condition) in Condition::ALL.into_iter().enumerate() {
            let (out, t) = match condition {
                Condition::Zz => timed(repeat, || thm2_from_stats(black_box(&stats), symmetric)),
                Condition::HeavyTail => timed(repeat, || check_cor5(black_box(seq))),
                c => {
                    let f = STATS_CHECKS.iter().find(|(k, _)| *k == c).expect("stats check").1;
                    timed(repeat, || f(black_box(&stats)))
                }
            };
            let acc = &mut cond_acc[ci];
            acc.times.push(t);
            if out.is_graphic() {
                acc.certified += 1;
            } else {
                acc.inconclusive += 1;
            }
            if graphic[if condition.needs_loops() { 0 } else { 1 }] {
                acc.exact_graphic += 1;
            }
        }
    }

    let finish = |name: String, loops: Option<bool>, input, acc: Acc, exact: bool| {
        let mut times = acc.times;
        times.sort_by(f64::total_cmp);
        BenchRow {
            name,
            allow_loops: loops,
            input,
            timing_only: loops.is_none(),
            certified: acc.certified,
            inconclusive: acc.inconclusive,
            not_graphic: exact.then_some(acc.not_graphic),
            exact_graphic: acc.exact_graphic,
            median_ns: median(&times),
            p99_ns: percentile(&times, 99.0),
        }
    };

    let mut rows = Vec::new();
    if records > 0 {
        rows.push(finish("stats".into(), None, Input::Sequence, stats_acc, false));
        let [with, without] = exact_acc;
        rows.push(finish("exact".into(), Some(true), Input::Sequence, with, true));
        rows.push(finish("exact".into(), Some(false), Input::Sequence, without, true));
        for (condition, acc) in Condition::ALL.into_iter().zip(cond_acc) {
            let input = if condition == Condition::HeavyTail { Input::Sequence } else { Input::Stats };
            rows.push(finish(condition.to_string(), Some(condition.needs_loops()), input, acc, false));
        }
    }
    BenchReport { records, repeat, rows }
}

fn policy(loops: Option<bool>) -> &'static str {
    match loops {
        None => "-",
        Some(true) => "loops",
        Some(false) => "no-loops",
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Count columns: certified, inconclusive, not_graphic, exact_graphic, coverage.
fn counts(r: &BenchRow, percent: bool) -> [String; 5] {
    if r.timing_only {
        return std::array::from_fn(|_| "-".to_string());
    }
    let coverage = r.coverage().map(|c| if percent { format!("{:.2}%", 100.0 * c) } else { format!("{c:.4}") });
    [
        r.certified.to_string(),
        r.inconclusive.to_string(),
        opt(r.not_graphic),
        r.exact_graphic.to_string(),
        opt(coverage),
    ]
}

pub fn write_report<W: Write>(report: &BenchReport, format: ReportFormat, out: &mut W) -> io::Result<()> {
    match format {
        ReportFormat::Csv => {
            writeln!(
                out,
                "condition,policy,input,certified,inconclusive,not_graphic,exact_graphic,coverage,median_ns,p99_ns"
            )?;
            for r in &report.rows {
                let [c, i, ng, eg, cov] = counts(r, false);
                writeln!(
                    out,
                    "{},{},{},{c},{i},{ng},{eg},{cov},{:.1},{:.1}",
                    r.name,
                    policy(r.allow_loops),
                    r.input.name(),
                    r.median_ns,
                    r.p99_ns
                )?;
            }
        }
        ReportFormat::Text => {
            writeln!(
                out,
                "records: {}  repeat: {}  (input=stats rows are timed on precomputed stats)",
                report.records, report.repeat
            )?;
            if report.rows.is_empty() {
                return Ok(());
            }
            writeln!(
                out,
                "{:<9} {:<9} {:<9} {:>10} {:>12} {:>11} {:>13} {:>9} {:>12} {:>12}",
                "condition", "policy", "input", "certified", "inconclusive", "not_graphic",
                "exact_graphic", "coverage", "median_ns", "p99_ns"
            )?;
            for r in &report.rows {
                let [c, i, ng, eg, cov] = counts(r, true);
                writeln!(
                    out,
                    "{:<9} {:<9} {:<9} {c:>10} {i:>12} {ng:>11} {eg:>13} {cov:>9} {:>12.1} {:>12.1}",
                    r.name,
                    policy(r.allow_loops),
                    r.input.name(),
                    r.median_ns,
                    r.p99_ns
                )?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percentiles() {
        let v: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(median(&v), 50.5);
        assert_eq!(percentile(&v, 99.0), 99.0);
        assert_eq!(percentile(&[7.0], 99.0), 7.0);
    }

    #[test]
    fn empty_corpus_has_no_rows() {
        let report = bench(std::iter::empty(), 3);
        assert_eq!(report.records, 0);
        assert!(report.rows.is_empty());
        let mut csv = Vec::new();
        write_report(&report, ReportFormat::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 1);
    }

    #[test]
    fn counts_reflect_soundness() {
        let corpus: Vec<BidegreeSequence> = (0..50)
            .map(|seed| bidegree::generate::gen_uniform(30, 120, 1, 12, seed).unwrap())
            .collect();
        let report = bench(&corpus, 1);
        assert_eq!(report.rows.len(), 11);
        for r in &report.rows[1..] {
            assert!(r.certified <= r.exact_graphic, "{}", r.name);
            assert_eq!(r.certified + r.inconclusive + r.not_graphic.unwrap_or(0), 50);
        }
    }
}
