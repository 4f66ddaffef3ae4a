//! Exact graphicality via the Gale-Ryser / Fulkerson-Chen-Anstee
//! inequalities.
//!
//! With the pairs sorted so that in-degrees are non-increasing, a sequence
//! is graphic with loops iff for every `j` in `[1..n-1]`
//!
//! ```text
//!     Σ_{i<=j} a_i  <=  F(j) = Σ_i min(b_i, j)
//! ```
//!
//! and graphic (zero diagonal) iff
//!
//! ```text
//!     Σ_{i<=j} a_i  <=  Σ_{i<=j} min(b_i, j-1) + Σ_{i>j} min(b_i, j).
//! ```
//!
//! The right-hand side of the loopless system is `F(j)` minus the number of
//! leading pairs `i <= j` with `b_i >= j`, which is maintained incrementally
//! so both checks run in O(n) after the sort.

use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::BidegreeSequence;
use crate::sufficient::Certificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Graphic,
    NotGraphic,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Graphic => "GRAPHIC",
            Verdict::NotGraphic => "NOT_GRAPHIC",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Evidence that a sequence cannot be realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// The `j`-th inequality (1-based, canonical order) fails.
    Inequality(usize),
    /// In- and out-degree sums differ.
    SumMismatch,
    /// Input node with a degree equal to `n`, impossible without loops.
    SaturatedNode(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Inequality(j) => write!(f, "j={j}"),
            Witness::SumMismatch => f.write_str("sum-mismatch"),
            Witness::SaturatedNode(i) => write!(f, "saturated-node={i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Realizable. Exact checks carry no certificate; sufficient checks
    /// carry the condition that fired.
    Graphic(Option<Certificate>),
    NotGraphic(Witness),
    /// A sufficient condition did not apply. Never produced by exact checks.
    Inconclusive,
}

impl CheckOutcome {
    pub fn verdict(&self) -> Verdict {
        match self {
            CheckOutcome::Graphic(_) => Verdict::Graphic,
            CheckOutcome::NotGraphic(_) => Verdict::NotGraphic,
            CheckOutcome::Inconclusive => Verdict::Inconclusive,
        }
    }

    pub fn is_graphic(&self) -> bool {
        matches!(self, CheckOutcome::Graphic(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CheckOutcome::Graphic(c) => c.as_ref(),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            CheckOutcome::NotGraphic(w) => Some(*w),
            _ => None,
        }
    }
}

/// Exact check under the chosen loop policy.
pub fn check(seq: &BidegreeSequence, allow_loops: bool) -> CheckOutcome {
    if allow_loops {
        check_with_loops(seq)
    } else {
        check_no_loops(seq)
    }
}

/// Exact decision of graphicality with loops.
pub fn check_with_loops(seq: &BidegreeSequence) -> CheckOutcome {
    match first_violation(seq, true) {
        Ok(None) => CheckOutcome::Graphic(None),
        Ok(Some(j)) => CheckOutcome::NotGraphic(Witness::Inequality(j)),
        Err(w) => CheckOutcome::NotGraphic(w),
    }
}

/// Exact decision of graphicality without loops.
pub fn check_no_loops(seq: &BidegreeSequence) -> CheckOutcome {
    match first_violation(seq, false) {
        Ok(None) => CheckOutcome::Graphic(None),
        Ok(Some(j)) => CheckOutcome::NotGraphic(Witness::Inequality(j)),
        Err(w) => CheckOutcome::NotGraphic(w),
    }
}

/// Every `j` in `[1..n-1]` at which the relevant inequality fails; empty iff
/// the sequence is graphic under the policy.
///
/// For the loopless policy a node of degree `n` makes the sequence
/// non-graphic even when no inequality in `[1..n-1]` fails (e.g. `n = 1`);
/// such sequences report the failing indices, if any, and callers wanting a
/// verdict should use [`check_no_loops`].
pub fn violated_indices(seq: &BidegreeSequence, allow_loops: bool) -> Vec<usize> {
    let mut out = Vec::new();
    scan(&seq.sort_canonical(), allow_loops, |j| {
        out.push(j);
        true
    });
    out
}

fn first_violation(seq: &BidegreeSequence, allow_loops: bool) -> std::result::Result<Option<usize>, Witness> {
    let n = seq.len() as u64;
    if !allow_loops {
        if let Some(i) =
            (0..seq.len()).find(|&i| seq.in_degrees()[i] == n || seq.out_degrees()[i] == n)
        {
            return Err(Witness::SaturatedNode(i));
        }
    }
    let mut found = None;
    scan(&seq.sort_canonical(), allow_loops, |j| {
        found = Some(j);
        false
    });
    Ok(found)
}

/// Walks the inequalities `j = 1..n-1` of a canonically sorted sequence,
/// calling `on_violation(j)` for each failure; stops when it returns false.
fn scan(sorted: &BidegreeSequence, allow_loops: bool, mut on_violation: impl FnMut(usize) -> bool) {
    let n = sorted.len();
    let a = sorted.in_degrees();
    let b = sorted.out_degrees();
    let profile = sorted.out_profile();

    let mut prefix = 0u64;
    // leading[v] = #{i < j : b_i == v}
    let mut leading = vec![0u64; n + 1];
    // #{i < j : b_i >= j}
    let mut leading_at_least = 0u64;
    for j in 1..n {
        prefix += a[j - 1];
        let bj = b[j - 1];
        let rhs = if allow_loops {
            profile.at(j)
        } else {
            profile.at(j) - leading_at_least - u64::from(bj >= j as u64)
        };
        if prefix > rhs && !on_violation(j) {
            return;
        }
        leading_at_least = leading_at_least - leading[j] + u64::from(bj > j as u64);
        leading[bj as usize] += 1;
    }
    debug_assert!(
        !allow_loops || prefix + a[n - 1] <= profile.at(n),
        "the j = n inequality follows from equal sums"
    );
}

/// Default brute-force cap with loops (2^16 candidate matrices).
pub const BRUTE_FORCE_CAP_LOOPS: usize = 4;
/// Default brute-force cap without loops (2^20 candidate matrices).
pub const BRUTE_FORCE_CAP_NO_LOOPS: usize = 5;

/// Ground-truth oracle: searches all 0-1 matrices with the required row sums
/// (zero diagonal when loops are disallowed) for one whose column sums match.
pub fn brute_force_exists(seq: &BidegreeSequence, allow_loops: bool) -> Result<bool> {
    let cap = if allow_loops { BRUTE_FORCE_CAP_LOOPS } else { BRUTE_FORCE_CAP_NO_LOOPS };
    brute_force_exists_capped(seq, allow_loops, cap)
}

pub fn brute_force_exists_capped(
    seq: &BidegreeSequence,
    allow_loops: bool,
    cap: usize,
) -> Result<bool> {
    let n = seq.len();
    if n > cap || n > 16 {
        return Err(Error::InstanceTooLarge { n, cap: cap.min(16) });
    }
    let mut residual: Vec<u64> = seq.out_degrees().to_vec();
    Ok(fill_row(0, seq.in_degrees(), &mut residual, allow_loops))
}

/// Tries every subset of columns for `row` whose size is the row sum.
fn fill_row(row: usize, rows: &[u64], residual: &mut [u64], allow_loops: bool) -> bool {
    let n = rows.len();
    if row == n {
        return residual.iter().all(|&r| r == 0);
    }
    let want = rows[row] as u32;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != want {
            continue;
        }
        if !allow_loops && mask & (1 << row) != 0 {
            continue;
        }
        if (0..n).any(|c| mask & (1 << c) != 0 && residual[c] == 0) {
            continue;
        }
        for c in (0..n).filter(|c| mask & (1 << c) != 0) {
            residual[c] -= 1;
        }
        let ok = fill_row(row + 1, rows, residual, allow_loops);
        for c in (0..n).filter(|c| mask & (1 << c) != 0) {
            residual[c] += 1;
        }
        if ok {
            return true;
        }
    }
    false
}
