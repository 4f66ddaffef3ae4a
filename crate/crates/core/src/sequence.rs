//! Validated bidegree sequences and their summary statistics.

use crate::error::{Error, Result};
use crate::profile::ConjugateProfile;

/// Paired in-degree / out-degree vectors over `n` nodes.
///
/// Node `i` has in-degree `in_degrees[i]` (row sum of the adjacency
/// matrix) and out-degree `out_degrees[i]` (column sum). Construction
/// guarantees equal lengths, `n >= 1`, equal sums, and every entry `<= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BidegreeSequence {
    in_degrees: Vec<u64>,
    out_degrees: Vec<u64>,
    total: u64,
}

impl BidegreeSequence {
    pub fn new(in_degrees: Vec<u64>, out_degrees: Vec<u64>) -> Result<Self> {
        if in_degrees.len() != out_degrees.len() {
            return Err(Error::LengthMismatch {
                in_len: in_degrees.len(),
                out_len: out_degrees.len(),
            });
        }
        let n = in_degrees.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (index, &value) in in_degrees.iter().chain(&out_degrees).enumerate() {
            if value > n as u64 {
                return Err(Error::DegreeExceedsN { index: index % n, value, n });
            }
        }
        let in_sum: u64 = in_degrees.iter().sum();
        let out_sum: u64 = out_degrees.iter().sum();
        if in_sum != out_sum {
            return Err(Error::SumMismatch { in_sum, out_sum });
        }
        Ok(Self { in_degrees, out_degrees, total: in_sum })
    }

    /// Builds a sequence from signed input, rejecting negative entries.
    pub fn from_signed(in_degrees: &[i64], out_degrees: &[i64]) -> Result<Self> {
        fn convert(values: &[i64]) -> Result<Vec<u64>> {
            values
                .iter()
                .enumerate()
                .map(|(index, &value)| {
                    u64::try_from(value).map_err(|_| Error::NegativeDegree { index, value })
                })
                .collect()
        }
        if in_degrees.len() != out_degrees.len() {
            return Err(Error::LengthMismatch {
                in_len: in_degrees.len(),
                out_len: out_degrees.len(),
            });
        }
        Self::new(convert(in_degrees)?, convert(out_degrees)?)
    }

    pub fn len(&self) -> usize {
        self.in_degrees.len()
    }

    /// Always false: sequences hold at least one node.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn in_degrees(&self) -> &[u64] {
        &self.in_degrees
    }

    pub fn out_degrees(&self) -> &[u64] {
        &self.out_degrees
    }

    /// Number of edges, equal to both degree sums.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn stats(&self) -> SequenceStats {
        SequenceStats::of(self)
    }

    /// Jointly permutes the pairs so that in-degrees are non-increasing,
    /// breaking ties by out-degree, also non-increasing.
    pub fn sort_canonical(&self) -> Self {
        let order = self.canonical_order();
        Self {
            in_degrees: order.iter().map(|&i| self.in_degrees[i]).collect(),
            out_degrees: order.iter().map(|&i| self.out_degrees[i]).collect(),
            total: self.total,
        }
    }

    /// The permutation used by [`sort_canonical`](Self::sort_canonical):
    /// `order[p]` is the input index placed at position `p`.
    ///
    /// Stable, so equal pairs keep their input order. Entries are bounded by
    /// `n`, so this is an O(n) two-pass counting sort (out-degree, then
    /// in-degree).
    pub fn canonical_order(&self) -> Vec<usize> {
        let by_out = counting_sort_desc((0..self.len()).collect(), &self.out_degrees);
        counting_sort_desc(by_out, &self.in_degrees)
    }

    pub fn is_canonical(&self) -> bool {
        self.in_degrees
            .iter()
            .zip(&self.out_degrees)
            .zip(self.in_degrees.iter().zip(&self.out_degrees).skip(1))
            .all(|((&a0, &b0), (&a1, &b1))| a0 > a1 || (a0 == a1 && b0 >= b1))
    }

    /// Conjugate profile of the out-degree vector.
    pub fn out_profile(&self) -> ConjugateProfile {
        ConjugateProfile::from_valid(&self.out_degrees, self.len())
    }

    /// `true` when the in- and out-degree vectors coincide elementwise.
    pub fn is_symmetric(&self) -> bool {
        self.in_degrees == self.out_degrees
    }
}

/// Stable sort of `order` by `keys[i]` descending; keys are at most `len`.
fn counting_sort_desc(order: Vec<usize>, keys: &[u64]) -> Vec<usize> {
    let len = keys.len();
    // start[v] = number of entries with key > v
    let mut start = vec![0usize; len + 2];
    for &i in &order {
        start[len - keys[i] as usize + 1] += 1;
    }
    for v in 1..start.len() {
        start[v] += start[v - 1];
    }
    let mut out = vec![0; order.len()];
    for i in order {
        let slot = &mut start[len - keys[i] as usize];
        out[*slot] = i;
        *slot += 1;
    }
    out
}

/// Exact summary statistics of a sequence.
///
/// `total` is the edge count `S`; the mean degree is `total / n` and is
/// never materialised as a fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceStats {
    pub n: u64,
    pub total: u64,
    /// Minimum over both vectors.
    pub min_degree: u64,
    pub max_in: u64,
    pub max_out: u64,
    pub max_degree: u64,
}

impl SequenceStats {
    pub fn of(seq: &BidegreeSequence) -> Self {
        let max_in = seq.in_degrees.iter().copied().max().unwrap_or(0);
        let max_out = seq.out_degrees.iter().copied().max().unwrap_or(0);
        let min_degree =
            seq.in_degrees.iter().chain(&seq.out_degrees).copied().min().unwrap_or(0);
        Self {
            n: seq.len() as u64,
            total: seq.total,
            min_degree,
            max_in,
            max_out,
            max_degree: max_in.max(max_out),
        }
    }
}

/// Embeds a bipartite margin problem (`p` row sums, `q` column sums) into a
/// square bidegree sequence of side `max(p, q)` by zero-padding the shorter
/// vector. The padded sequence is graphic with loops exactly when a 0-1
/// `p x q` matrix with these margins exists.
pub fn pad_bipartite(row_sums: &[u64], col_sums: &[u64]) -> Result<BidegreeSequence> {
    let in_sum: u64 = row_sums.iter().sum();
    let out_sum: u64 = col_sums.iter().sum();
    if in_sum != out_sum {
        return Err(Error::SumMismatch { in_sum, out_sum });
    }
    let n = row_sums.len().max(col_sums.len()).max(1);
    let pad = |v: &[u64]| {
        let mut out = v.to_vec();
        out.resize(n, 0);
        out
    };
    BidegreeSequence::new(pad(row_sums), pad(col_sums))
}
