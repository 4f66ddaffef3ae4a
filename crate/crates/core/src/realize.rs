//! Greedy construction of explicit 0-1 realizations.
//!
//! Sources are processed in non-increasing out-degree order. Each source
//! sends its out-stubs to the nodes of largest residual in-degree, ties
//! broken by larger residual out-degree and then by lower index, skipping
//! itself when loops are forbidden. With loops this is Ryser's column-by-
//! column construction; without loops it is the Kleitman-Wang step, whose
//! lexicographic tie-break is what keeps every intermediate residual
//! sequence graphic.

use crate::error::{Error, Result};
use crate::exact::{self, CheckOutcome, Witness};
use crate::sequence::BidegreeSequence;

/// Dense 0-1 adjacency matrix. Entry `(i, j)` is 1 when there is an edge
/// from node `j` to node `i`, so row `i` sums to the in-degree of `i` and
/// column `j` to the out-degree of `j`. Node indices follow the input
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyRealization {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    loops_allowed: bool,
}

impl AdjacencyRealization {
    pub fn zeros(n: usize, loops_allowed: bool) -> Self {
        let words_per_row = n.div_ceil(64);
        Self { n, words_per_row, bits: vec![0; n * words_per_row], loops_allowed }
    }

    /// Builds a matrix from `0`/`1` rows.
    pub fn from_rows(rows: &[Vec<bool>], loops_allowed: bool) -> Self {
        let mut m = Self::zeros(rows.len(), loops_allowed);
        for (i, row) in rows.iter().enumerate() {
            for (j, &bit) in row.iter().enumerate().take(m.n) {
                if bit {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words_per_row + col / 64] >> (col % 64) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let word = &mut self.bits[row * self.words_per_row + col / 64];
        let mask = 1u64 << (col % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        self.bits[row * self.words_per_row + col / 64] ^= 1u64 << (col % 64);
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        self.row_words(row).iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn column_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.n];
        for row in 0..self.n {
            for (w, &word) in self.row_words(row).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    sums[w * 64 + word.trailing_zeros() as usize] += 1;
                    word &= word - 1;
                }
            }
        }
        sums
    }

    /// Rows as strings of `0` / `1`.
    pub fn dense_rows(&self) -> impl Iterator<Item = String> + '_ {
        (0..self.n).map(move |i| (0..self.n).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
    }

    /// Edges as `(source, destination)`, ordered by source then destination.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for src in 0..self.n {
            for dst in 0..self.n {
                if self.get(dst, src) {
                    out.push((src, dst));
                }
            }
        }
        out
    }
}

/// Outcome of [`realize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realized {
    Graphic(AdjacencyRealization),
    NotGraphic(Witness),
}

/// Builds a realization of `seq`, or reports why none exists.
///
/// # Panics
///
/// If the greedy wiring gets stuck on a sequence the exact check accepted,
/// or produces a matrix that fails verification; either is a bug.
pub fn realize(seq: &BidegreeSequence, allow_loops: bool) -> Realized {
    match exact::check(seq, allow_loops) {
        CheckOutcome::NotGraphic(w) => return Realized::NotGraphic(w),
        CheckOutcome::Graphic(_) => {}
        CheckOutcome::Inconclusive => unreachable!("exact checks are never inconclusive"),
    }

    let n = seq.len();
    let mut res_in = seq.in_degrees().to_vec();
    let mut res_out = seq.out_degrees().to_vec();
    let mut matrix = AdjacencyRealization::zeros(n, allow_loops);

    let mut sources: Vec<usize> = (0..n).collect();
    sources.sort_by(|&x, &y| res_out[y].cmp(&res_out[x]));

    let mut targets: Vec<usize> = (0..n).collect();
    let key_order = |res_in: &[u64], res_out: &[u64], x: usize, y: usize| {
        res_in[y].cmp(&res_in[x]).then(res_out[y].cmp(&res_out[x])).then(x.cmp(&y))
    };
    targets.sort_by(|&x, &y| key_order(&res_in, &res_out, x, y));

    for &src in &sources {
        let stubs = res_out[src] as usize;
        if stubs == 0 {
            break;
        }
        let mut placed = 0;
        for &dst in &targets {
            if placed == stubs {
                break;
            }
            if dst == src && !allow_loops {
                continue;
            }
            assert!(
                res_in[dst] > 0,
                "greedy realization stuck at source {src} on a graphic sequence"
            );
            res_in[dst] -= 1;
            matrix.set(dst, src, true);
            placed += 1;
        }
        assert_eq!(placed, stubs, "greedy realization ran out of targets at source {src}");
        res_out[src] = 0;
        // only a prefix lost one unit and `src` changed its secondary key, so
        // the list is a few sorted runs and the stable sort merges them in O(n)
        targets.sort_by(|&x, &y| key_order(&res_in, &res_out, x, y));
    }

    assert!(
        verify_realization(&matrix, seq).unwrap_or(false),
        "greedy realization produced a matrix with wrong margins"
    );
    Realized::Graphic(matrix)
}

/// Checks row sums, column sums, and the diagonal policy bit-exactly.
pub fn verify_realization(real: &AdjacencyRealization, seq: &BidegreeSequence) -> Result<bool> {
    if real.n() != seq.len() {
        return Err(Error::DimensionMismatch { expected: seq.len(), found: real.n() });
    }
    if !real.loops_allowed() && (0..real.n()).any(|i| real.get(i, i)) {
        return Ok(false);
    }
    let rows_ok = (0..real.n()).all(|i| real.row_sum(i) == seq.in_degrees()[i]);
    Ok(rows_ok && real.column_sums() == seq.out_degrees())
}
