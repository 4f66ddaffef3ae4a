//! Conjugate profile `F(j, b) = Σ_i min(b_i, j)` of a degree vector.
//!
//! `F(j, b)` equals the sum of the first `j` column counts of the Ferrers
//! diagram of `b`, i.e. `Σ_{i<=j} #{z : b_z >= i}`. The counts are built from
//! a histogram with a suffix sum and the profile by a prefix sum, so the
//! whole table costs O(n).

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateProfile {
    /// `cumulative[j] = F(j, b)` for `j` in `[0..n]`.
    cumulative: Vec<u64>,
    /// `counts[i] = #{z : b_z >= i}`; index 0 holds `n` and is never used
    /// as an increment.
    counts: Vec<u64>,
}

impl ConjugateProfile {
    /// Builds the profile of `values`, each of which must lie in `[0..n]`.
    pub fn new(values: &[u64], n: usize) -> Result<Self> {
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v > n as u64) {
            return Err(Error::EntryOutOfRange { index, value, n });
        }
        Ok(Self::from_valid(values, n))
    }

    pub(crate) fn from_valid(values: &[u64], n: usize) -> Self {
        let mut counts = vec![0u64; n + 1];
        for &v in values {
            counts[v as usize] += 1;
        }
        for i in (0..n).rev() {
            counts[i] += counts[i + 1];
        }
        let mut cumulative = Vec::with_capacity(n + 1);
        cumulative.push(0);
        let mut acc = 0u64;
        for &c in &counts[1..] {
            acc += c;
            cumulative.push(acc);
        }
        Self { cumulative, counts }
    }

    pub fn n(&self) -> usize {
        self.cumulative.len() - 1
    }

    /// `F(j, b)`; saturates at the total for `j > n`.
    pub fn at(&self, j: usize) -> u64 {
        self.cumulative[j.min(self.n())]
    }

    pub fn cumulative(&self) -> &[u64] {
        &self.cumulative
    }

    /// `#{z : b_z >= i}` for `i >= 1`, the increment `F(i) - F(i-1)`.
    pub fn count_at_least(&self, i: usize) -> u64 {
        if i > self.n() {
            0
        } else {
            self.counts[i]
        }
    }

    /// Increments for `i` in `[1..n]`.
    pub fn counts(&self) -> &[u64] {
        &self.counts[1..]
    }
}

/// Free-function form of [`ConjugateProfile::new`].
pub fn conjugate_profile(out_degrees: &[u64], n: usize) -> Result<ConjugateProfile> {
    ConjugateProfile::new(out_degrees, n)
}
