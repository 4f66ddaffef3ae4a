//! Constant-time sufficient conditions for graphicality.
//!
//! Each condition looks only at a handful of summary statistics: `n`, the
//! edge count `S = Σ a_i = Σ b_i`, the minimum degree `m` over both vectors
//! and the maxima `M_a`, `M_b`, `M = max(M_a, M_b)`. The mean degree
//! `c = S / n` never appears as a fraction; every bound is rewritten over
//! `S` and evaluated in exact integer arithmetic.
//!
//! | condition | policy     | certifies when                                        |
//! |-----------|------------|-------------------------------------------------------|
//! | `thm2`    | loops      | `a == b` and `⌊(m + M)² / 4⌋ <= m n`                  |
//! | `thm3`    | loops      | `M_a M_b <= S + 1`                                    |
//! | `thm4`    | no loops   | `(M_a + 1) M_b <= S`                                  |
//! | `thm5`    | loops      | `m >= 1` and `M <= min(⌊(S - n m) / k⌋ + m, n)`       |
//! | `thm6`    | no loops   | `1 <= m <= n-1` and `M <= min(⌊(S - n m) / k⌋ + m, n-1)` |
//! | `cor2`    | loops      | `M < n` and some `k >= M` with `M k <= S`             |
//! | `cor3`    | no loops   | `M < n` and some `k > M` with `M k <= S`              |
//! | `cor5`    | loops      | `thm5` after setting aside a light-sum heavy prefix   |
//!
//! For `thm5` the threshold `k` is `⌈m + √(m² + S - 2 m n)⌉` (or 1 when the
//! root is imaginary); `thm6` uses `⌈m + 1 + √((m+1)² + S - 2 m n)⌉`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, CheckOutcome};
use crate::isqrt::{ceil_isqrt, isqrt, isqrt_u128};
use crate::sequence::{BidegreeSequence, SequenceStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Min/max bound for symmetric sequences.
    Zz,
    MaxProductLoops,
    MaxProductNoLoops,
    MeanMinLoops,
    MeanMinNoLoops,
    MultiplicityLoops,
    MultiplicityNoLoops,
    HeavyTail,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::Zz,
        Condition::MaxProductLoops,
        Condition::MaxProductNoLoops,
        Condition::MeanMinLoops,
        Condition::MeanMinNoLoops,
        Condition::MultiplicityLoops,
        Condition::MultiplicityNoLoops,
        Condition::HeavyTail,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Zz => "thm2",
            Condition::MaxProductLoops => "thm3",
            Condition::MaxProductNoLoops => "thm4",
            Condition::MeanMinLoops => "thm5",
            Condition::MeanMinNoLoops => "thm6",
            Condition::MultiplicityLoops => "cor2",
            Condition::MultiplicityNoLoops => "cor3",
            Condition::HeavyTail => "cor5",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Whether the certificate only guarantees a realization with loops.
    pub fn needs_loops(self) -> bool {
        matches!(
            self,
            Condition::Zz
                | Condition::MaxProductLoops
                | Condition::MeanMinLoops
                | Condition::MultiplicityLoops
                | Condition::HeavyTail
        )
    }

    pub fn check(self, seq: &BidegreeSequence) -> CheckOutcome {
        match self {
            Condition::Zz => check_thm2(seq),
            Condition::MaxProductLoops => check_thm3(seq),
            Condition::MaxProductNoLoops => check_thm4(seq),
            Condition::MeanMinLoops => check_thm5(seq),
            Condition::MeanMinNoLoops => check_thm6(seq),
            Condition::MultiplicityLoops => check_cor2(seq),
            Condition::MultiplicityNoLoops => check_cor3(seq),
            Condition::HeavyTail => check_cor5(seq),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The condition that fired plus the integers needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub condition: Condition,
    pub parameters: Vec<(&'static str, i64)>,
}

impl Certificate {
    fn new(condition: Condition, parameters: &[(&'static str, u64)]) -> Self {
        Self {
            condition,
            parameters: parameters.iter().map(|&(k, v)| (k, v as i64)).collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.parameters.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.condition.name())?;
        for (k, v) in &self.parameters {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

fn graphic(condition: Condition, parameters: &[(&'static str, u64)]) -> CheckOutcome {
    CheckOutcome::Graphic(Some(Certificate::new(condition, parameters)))
}

/// Threshold index `k` of the mean/min conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KStar {
    pub k: u64,
    /// Whether the defining root was real (otherwise `k = 1`).
    pub real: bool,
    /// The discriminant under the root.
    pub discriminant: i128,
}

fn kstar(offset: u64, discriminant: i128) -> KStar {
    if discriminant < 0 {
        KStar { k: 1, real: false, discriminant }
    } else {
        KStar { k: offset + ceil_isqrt(discriminant as u64), real: true, discriminant }
    }
}

fn validate_stats(n: u64, total: u64, m: u64, max_m: u64) -> Result<()> {
    if m < 1 || m > max_m {
        return Err(Error::InvalidStats(format!("minimum degree {m} outside [1..{max_m}]")));
    }
    if total < n * m {
        return Err(Error::InvalidStats(format!("total {total} below n * m = {}", n * m)));
    }
    Ok(())
}

/// `k = ⌈m + √(m² + S - 2mn)⌉`, or 1 when the discriminant is negative.
pub fn kstar_with_loops(n: u64, total: u64, m: u64) -> Result<KStar> {
    validate_stats(n, total, m, n)?;
    let d = (m * m) as i128 + total as i128 - (2 * m * n) as i128;
    Ok(kstar(m, d))
}

/// `k = ⌈m + 1 + √((m+1)² + S - 2mn)⌉`, or 1 when the discriminant is negative.
pub fn kstar_no_loops(n: u64, total: u64, m: u64) -> Result<KStar> {
    validate_stats(n, total, m, n.saturating_sub(1))?;
    let d = ((m + 1) * (m + 1)) as i128 + total as i128 - (2 * m * n) as i128;
    Ok(kstar(m + 1, d))
}

/// `(⌊(m + M)² / 4⌋, m n)`, the two sides of the symmetric min/max bound.
pub fn thm2_sides(stats: &SequenceStats) -> (u64, u64) {
    let s = stats.min_degree + stats.max_degree;
    (s * s / 4, stats.min_degree * stats.n)
}

/// Symmetric min/max bound; `symmetric` states whether `a == b`.
pub fn thm2_from_stats(stats: &SequenceStats, symmetric: bool) -> CheckOutcome {
    if !symmetric {
        return CheckOutcome::Inconclusive;
    }
    let (lhs, mn) = thm2_sides(stats);
    if lhs <= mn {
        graphic(
            Condition::Zz,
            &[("m", stats.min_degree), ("M", stats.max_degree), ("lhs", lhs), ("mn", mn)],
        )
    } else {
        CheckOutcome::Inconclusive
    }
}

pub fn check_thm2(seq: &BidegreeSequence) -> CheckOutcome {
    // pairs are compared position by position in canonical order
    let symmetric = seq.sort_canonical().is_symmetric();
    thm2_from_stats(&seq.stats(), symmetric)
}

pub fn thm3_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let product = stats.max_in * stats.max_out;
    if product <= stats.total + 1 {
        graphic(Condition::MaxProductLoops, &[("MaMb", product), ("bound", stats.total + 1)])
    } else {
        CheckOutcome::Inconclusive
    }
}

pub fn check_thm3(seq: &BidegreeSequence) -> CheckOutcome {
    thm3_from_stats(&seq.stats())
}

pub fn thm4_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let product = (stats.max_in + 1) * stats.max_out;
    if product <= stats.total {
        graphic(Condition::MaxProductNoLoops, &[("Ma1Mb", product), ("bound", stats.total)])
    } else {
        CheckOutcome::Inconclusive
    }
}

pub fn check_thm4(seq: &BidegreeSequence) -> CheckOutcome {
    thm4_from_stats(&seq.stats())
}

/// Largest `M` with `M (M + 1) <= S`, i.e. `⌊√(1/4 + S) - 1/2⌋`.
pub fn thm4_symmetric_max(total: u64) -> u64 {
    (isqrt(4 * total + 1) - 1) / 2
}

/// `min(⌊(S - n m) / k⌋ + m, cap)`.
fn mean_min_bound(stats: &SequenceStats, k: u64, cap: u64) -> u64 {
    let m = stats.min_degree;
    ((stats.total - stats.n * m) / k + m).min(cap)
}

pub fn thm5_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let Ok(ks) = kstar_with_loops(stats.n, stats.total, stats.min_degree) else {
        return CheckOutcome::Inconclusive;
    };
    let bound = mean_min_bound(stats, ks.k, stats.n);
    if stats.max_degree <= bound {
        graphic(Condition::MeanMinLoops, &[("k", ks.k), ("Mmax", bound)])
    } else {
        CheckOutcome::Inconclusive
    }
}

pub fn check_thm5(seq: &BidegreeSequence) -> CheckOutcome {
    thm5_from_stats(&seq.stats())
}

pub fn thm6_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let Ok(ks) = kstar_no_loops(stats.n, stats.total, stats.min_degree) else {
        return CheckOutcome::Inconclusive;
    };
    let bound = mean_min_bound(stats, ks.k, stats.n - 1);
    if stats.max_degree > bound {
        return CheckOutcome::Inconclusive;
    }
    let mut params = vec![("k", ks.k), ("Mmax", bound)];
    if let Some(alt) = thm6_proof_bound(stats, &ks) {
        params.push(("Mmax_proof", alt));
    }
    graphic(Condition::MeanMinNoLoops, &params)
}

/// `⌊(S - (n - k*) m) / k⌋` with the real root `k* = m + 1 + √D`, the form the
/// loopless bound takes inside its derivation. Recorded next to the stated
/// bound so the two can be compared; `None` when `k*` is not real.
fn thm6_proof_bound(stats: &SequenceStats, ks: &KStar) -> Option<u64> {
    if !ks.real {
        return None;
    }
    let m = stats.min_degree as u128;
    let base = stats.total as u128 - stats.n as u128 * m + m * (m + 1);
    // m √D = √(m² D), floored; flooring inside is exact because k is an integer
    let root = isqrt_u128(m * m * ks.discriminant as u128);
    Some(((base + root) / ks.k as u128) as u64)
}

pub fn check_thm6(seq: &BidegreeSequence) -> CheckOutcome {
    thm6_from_stats(&seq.stats())
}

/// `⌊S / M⌋`, the largest `k` with `M k <= S` (all of `n` when `M = 0`).
fn multiplicity_k(stats: &SequenceStats) -> u64 {
    stats.total.checked_div(stats.max_degree).unwrap_or(stats.n)
}

/// General form of the multiplicity condition with loops.
pub fn cor2_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let big_m = stats.max_degree;
    let k = multiplicity_k(stats);
    if big_m < stats.n && big_m <= k {
        graphic(Condition::MultiplicityLoops, &[("M", big_m), ("k", k)])
    } else {
        CheckOutcome::Inconclusive
    }
}

/// Multiplicity condition with loops. The count `#(a_i = M)` is recorded
/// alongside `k = ⌊S / M⌋`; a count of at least `M` always implies `M <= k`.
pub fn check_cor2(seq: &BidegreeSequence) -> CheckOutcome {
    with_multiplicity(seq, cor2_from_stats(&seq.stats()))
}

pub fn cor3_from_stats(stats: &SequenceStats) -> CheckOutcome {
    let big_m = stats.max_degree;
    let k = multiplicity_k(stats);
    if big_m < stats.n && big_m < k {
        graphic(Condition::MultiplicityNoLoops, &[("M", big_m), ("k", k)])
    } else {
        CheckOutcome::Inconclusive
    }
}

pub fn check_cor3(seq: &BidegreeSequence) -> CheckOutcome {
    with_multiplicity(seq, cor3_from_stats(&seq.stats()))
}

fn with_multiplicity(seq: &BidegreeSequence, outcome: CheckOutcome) -> CheckOutcome {
    match outcome {
        CheckOutcome::Graphic(Some(mut cert)) => {
            let big_m = cert.get("M").unwrap_or(0) as u64;
            let count = seq.in_degrees().iter().filter(|&&a| a == big_m).count();
            cert.parameters.push(("count", count as i64));
            CheckOutcome::Graphic(Some(cert))
        }
        other => other,
    }
}

/// Heavy-tail extension of the mean/min bound with loops.
///
/// With pairs in canonical order, the first `R` nodes form an exception set
/// whose in-degree sum `P = n λ` stays below `n m`, whose out-degree sum is
/// at most `P`, and which leaves `m (n - R - 1) >= P`. The remaining nodes
/// must satisfy the mean/min bound with the discriminant shifted by `R m`
/// and the numerator reduced by `P - R m`. `R = 0` is the plain `thm5`.
/// The smallest certifying `R` is reported.
pub fn check_cor5(seq: &BidegreeSequence) -> CheckOutcome {
    let stats = seq.stats();
    let m = stats.min_degree;
    if m < 1 {
        return CheckOutcome::Inconclusive;
    }
    let n = stats.n;
    let s = stats.total;
    let sorted = seq.sort_canonical();
    let a = sorted.in_degrees();
    let b = sorted.out_degrees();

    // suffix_max[i] = max over positions >= i of max(a, b)
    let mut suffix_max = vec![0u64; a.len() + 1];
    for i in (0..a.len()).rev() {
        suffix_max[i] = suffix_max[i + 1].max(a[i]).max(b[i]);
    }

    let mut heavy_in = 0u64;
    let mut heavy_out = 0u64;
    for r in 0..n {
        if r > 0 {
            heavy_in += a[r as usize - 1];
            heavy_out += b[r as usize - 1];
        }
        // λ < m and n - nλ/m - R >= 1; both only get harder as R grows
        if heavy_in >= n * m || m * (n - r - 1) < heavy_in {
            break;
        }
        if heavy_out > heavy_in {
            continue;
        }
        let big_m = suffix_max[r as usize];
        let d = (m * m) as i128 + s as i128 - (2 * m * n) as i128 + (r * m) as i128;
        let ks = kstar(m, d);
        let k = ks.k;
        // heavy nodes carry at least m each, so P <= S - (n - R) m
        let bound = ((s + r * m - n * m - heavy_in) / k + m).min(n);
        let room = k <= big_m || k * m <= m * (n - r) - heavy_in;
        if big_m <= bound && room {
            return graphic(
                Condition::HeavyTail,
                &[("R", r), ("P", heavy_in), ("k", k), ("M", big_m), ("Mmax", bound)],
            );
        }
    }
    CheckOutcome::Inconclusive
}

/// The out-degree vector minimizing `F(j, ·)` pointwise among vectors of
/// length `n` with sum `S` and entries in `[m..M]`: `k` leading entries `M`,
/// one remainder in `[m..M]`, then `m`s.
pub fn minimizer_b_star(n: u64, total: u64, max: u64, min: u64) -> Result<Vec<u64>> {
    if min > max || max > n {
        return Err(Error::Infeasible(format!("need {min} <= {max} <= {n}")));
    }
    if total < n * min || total > n * max {
        return Err(Error::Infeasible(format!(
            "total {total} outside [{}..{}]",
            n * min,
            n * max
        )));
    }
    let n = n as usize;
    let mut out = vec![min; n];
    if max == min {
        return Ok(out);
    }
    let excess = total - n as u64 * min;
    let k = (excess / (max - min)) as usize;
    for x in out.iter_mut().take(k) {
        *x = max;
    }
    if k < n {
        out[k] = min + excess - k as u64 * (max - min);
    }
    Ok(out)
}

/// Largest maximum degree each condition certifies, for fixed `(n, m, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    pub n: u64,
    pub m: u64,
    pub total: u64,
    /// Entries `2..=6`; `None` where the condition's hypotheses on `m` fail.
    pub h: [Option<u64>; 5],
}

impl BoundTable {
    /// `H_J` for `J` in `2..=6`.
    pub fn get(&self, j: usize) -> Option<u64> {
        self.h.get(j.checked_sub(2)?).copied().flatten()
    }

    /// Labels (`2..=6`) achieving the largest available bound.
    pub fn largest(&self) -> Vec<usize> {
        let best = self.h.iter().flatten().max().copied();
        (2..=6).filter(|&j| best.is_some() && self.get(j) == best).collect()
    }
}

/// Bound table for the symmetric min/max, max-product, and mean/min
/// conditions. `H5` requires `m >= 1` and `H6` additionally `m <= n - 1`;
/// they are `None` otherwise.
pub fn bound_table(n: u64, m: u64, total: u64) -> Result<BoundTable> {
    if n == 0 || m > n {
        return Err(Error::InvalidStats(format!("need 0 <= m <= n with n >= 1, got n={n} m={m}")));
    }
    if total < n * m || total > n * n {
        return Err(Error::InvalidStats(format!(
            "total {total} outside [{}..{}]",
            n * m,
            n * n
        )));
    }
    // ⌊x² / 4⌋ <= t  <=>  x² <= 4t + 3
    let h2 = (isqrt(4 * m * n + 3) - m).min(n);
    let h3 = isqrt(total + 1).min(n);
    let h4 = thm4_symmetric_max(total).min(n);
    let stats = SequenceStats { n, total, min_degree: m, max_in: 0, max_out: 0, max_degree: 0 };
    let h5 = kstar_with_loops(n, total, m).ok().map(|ks| mean_min_bound(&stats, ks.k, n));
    let h6 = kstar_no_loops(n, total, m).ok().map(|ks| mean_min_bound(&stats, ks.k, n - 1));
    Ok(BoundTable { n, m, total, h: [Some(h2), Some(h3), Some(h4), h5, h6] })
}

/// Order in which [`certify`] tries conditions, cheapest first.
pub fn ladder(allow_loops: bool) -> &'static [Condition] {
    if allow_loops {
        &[
            Condition::MaxProductLoops,
            Condition::MultiplicityLoops,
            Condition::MeanMinLoops,
            Condition::HeavyTail,
            Condition::Zz,
        ]
    } else {
        &[Condition::MaxProductNoLoops, Condition::MultiplicityNoLoops, Condition::MeanMinNoLoops]
    }
}

/// Runs the applicable sufficient conditions in [`ladder`] order and returns
/// the first certificate. If none fires and `fallback_exact` is set, the exact
/// check decides; otherwise the result is `Inconclusive`.
pub fn certify(seq: &BidegreeSequence, allow_loops: bool, fallback_exact: bool) -> CheckOutcome {
    for &condition in ladder(allow_loops) {
        let outcome = condition.check(seq);
        if outcome.is_graphic() {
            return outcome;
        }
    }
    if fallback_exact {
        exact::check(seq, allow_loops)
    } else {
        CheckOutcome::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{check_no_loops, check_with_loops, Witness};
    use crate::profile::ConjugateProfile;
    use crate::sequence::tests::arb_sequence;
    use proptest::prelude::*;

    const MEAN_MIN_EXAMPLE: [u64; 10] = [6, 6, 6, 6, 6, 4, 2, 2, 1, 1];

    fn seq(a: &[u64], b: &[u64]) -> BidegreeSequence {
        BidegreeSequence::new(a.to_vec(), b.to_vec()).unwrap()
    }

    fn cert(outcome: &CheckOutcome) -> &Certificate {
        outcome.certificate().expect("expected a certificate")
    }

    /// Smallest integer `k >= offset` with `(k - offset)² >= D`, by search.
    fn k_by_search(offset: u64, d: i128) -> u64 {
        if d < 0 {
            return 1;
        }
        let mut k = offset;
        while (((k - offset) as i128) * ((k - offset) as i128)) < d {
            k += 1;
        }
        k
    }

    #[test]
    fn kstar_with_loops_examples() {
        assert_eq!(kstar_with_loops(10, 40, 1).unwrap().k, 6);
        let ks = kstar_with_loops(10, 40, 3).unwrap();
        assert_eq!((ks.k, ks.real, ks.discriminant), (1, false, -11));
        assert_eq!(kstar_with_loops(10, 40, 2).unwrap().k, 4);
        assert!(kstar_with_loops(10, 40, 0).is_err());
        assert!(kstar_with_loops(10, 20, 3).is_err());
    }

    #[test]
    fn kstar_no_loops_examples() {
        assert_eq!(kstar_no_loops(10, 40, 1).unwrap().k, 7);
        let ks = kstar_no_loops(10, 40, 3).unwrap();
        assert_eq!((ks.k, ks.real), (1, false));
        assert_eq!(kstar_no_loops(100, 400, 2).unwrap().k, 6);
        assert!(kstar_no_loops(4, 16, 4).is_err());
    }

    #[test]
    fn thm2_examples() {
        let s = seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE);
        assert_eq!(check_thm2(&s), CheckOutcome::Inconclusive);
        assert_eq!(thm2_sides(&s.stats()), (12, 10));

        let out = check_thm2(&seq(&[2; 4], &[2; 4]));
        assert_eq!(cert(&out).get("lhs"), Some(4));
        assert_eq!(cert(&out).get("mn"), Some(8));

        assert_eq!(check_thm2(&seq(&[2, 1, 1], &[1, 1, 2])), CheckOutcome::Inconclusive);
    }

    #[test]
    fn thm2_symmetry_is_tested_after_sorting() {
        // same pairs in a different order are still symmetric
        let s = seq(&[1, 2, 2], &[1, 2, 2]);
        assert!(check_thm2(&s).is_graphic());
        // a permuted out-vector that pairs differently is not
        let s = seq(&[2, 2, 1], &[1, 2, 2]);
        assert_eq!(check_thm2(&s), CheckOutcome::Inconclusive);
    }

    #[test]
    fn thm3_examples() {
        assert!(check_thm3(&seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE)).is_graphic());
        assert_eq!(check_thm3(&seq(&[2, 2, 2, 0], &[4, 2, 0, 0])), CheckOutcome::Inconclusive);
        assert!(check_thm3(&seq(&[0; 3], &[0; 3])).is_graphic());
    }

    #[test]
    fn thm4_examples() {
        assert_eq!(thm4_symmetric_max(40), 5);
        assert!(check_thm4(&seq(&[1, 1], &[1, 1])).is_graphic());
        assert_eq!(check_thm4(&seq(&[2, 2, 2, 0], &[4, 2, 0, 0])), CheckOutcome::Inconclusive);
        for s in 0..2000u64 {
            let m = thm4_symmetric_max(s);
            assert!(m * (m + 1) <= s && (m + 1) * (m + 2) > s);
        }
    }

    #[test]
    fn thm5_examples() {
        let out = check_thm5(&seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE));
        assert_eq!(cert(&out).to_string(), "thm5 k=6 Mmax=6");

        let d = [7, 7, 7, 7, 2, 2, 2, 2, 2, 2];
        let s = seq(&d, &d);
        let out = check_thm5(&s);
        assert_eq!((cert(&out).get("k"), cert(&out).get("Mmax")), (Some(4), Some(7)));
        assert_eq!(check_thm3(&s), CheckOutcome::Inconclusive);
        assert!(check_with_loops(&s).is_graphic());

        assert_eq!(check_thm5(&seq(&[2, 1, 0], &[1, 1, 1])), CheckOutcome::Inconclusive);
    }

    #[test]
    fn thm6_examples() {
        let s = seq(&[2; 4], &[2; 4]);
        let out = check_thm6(&s);
        // D = 3² + 8 - 16 = 1
        assert_eq!((cert(&out).get("k"), cert(&out).get("Mmax")), (Some(4), Some(2)));
        assert!(check_no_loops(&s).is_graphic());

        assert_eq!(check_thm6(&seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE)), CheckOutcome::Inconclusive);
        let stats = seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE).stats();
        let ks = kstar_no_loops(stats.n, stats.total, stats.min_degree).unwrap();
        assert_eq!((ks.k, mean_min_bound(&stats, ks.k, 9)), (7, 5));

        // m = n
        assert_eq!(check_thm6(&seq(&[3; 3], &[3; 3])), CheckOutcome::Inconclusive);
    }

    #[test]
    fn thm6_proof_bound_matches_float_evaluation() {
        for n in 2..40u64 {
            for m in 1..n {
                for total in (n * m..=n * (n - 1)).step_by(3) {
                    let stats = SequenceStats {
                        n,
                        total,
                        min_degree: m,
                        max_in: 0,
                        max_out: 0,
                        max_degree: 0,
                    };
                    let ks = kstar_no_loops(n, total, m).unwrap();
                    let Some(exact) = thm6_proof_bound(&stats, &ks) else { continue };
                    let kstar = (m + 1) as f64 + (ks.discriminant as f64).sqrt();
                    let approx =
                        (total as f64 - (n as f64 - kstar) * m as f64) / ks.k as f64;
                    assert!((exact as f64 - approx.floor()).abs() <= 1.0, "{n} {m} {total}");
                    assert!(exact as f64 <= approx + 1e-9);
                }
            }
        }
    }

    #[test]
    fn cor2_cor3_examples() {
        let s = seq(&[3, 3, 3, 1], &[3, 3, 3, 1]);
        let out = check_cor2(&s);
        assert_eq!(cert(&out).get("count"), Some(3));
        assert_eq!(cert(&out).get("k"), Some(3));
        assert!(check_with_loops(&s).is_graphic());
        assert_eq!(check_cor3(&s), CheckOutcome::Inconclusive);

        // M = n
        let s = seq(&[3, 0, 0], &[1, 1, 1]);
        assert_eq!(check_cor2(&s), CheckOutcome::Inconclusive);
        assert_eq!(check_cor3(&s), CheckOutcome::Inconclusive);
    }

    #[test]
    fn cor5_examples() {
        // R = 0 matches the plain bound
        let s = seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE);
        let out = check_cor5(&s);
        assert_eq!(cert(&out).get("R"), Some(0));
        assert_eq!(cert(&out).get("Mmax"), cert(&check_thm5(&s)).get("Mmax"));

        let mut a = vec![10];
        a.extend([2; 19]);
        let mut b = vec![6];
        b.extend([4; 7]);
        b.extend([2; 2]);
        b.extend([1; 10]);
        let s = seq(&a, &b);
        assert_eq!(s.total(), 48);
        assert_eq!(check_thm5(&s), CheckOutcome::Inconclusive);
        let out = check_cor5(&s);
        let c = cert(&out);
        assert_eq!(
            (c.get("R"), c.get("P"), c.get("k"), c.get("M"), c.get("Mmax")),
            (Some(1), Some(10), Some(5), Some(4), Some(4))
        );
        assert!(check_with_loops(&s).is_graphic());

        // thm5 fails, and the heavy node alone already carries n m in-degree
        let s = seq(&[6, 6, 6, 6, 6, 1], &[1, 6, 6, 6, 6, 6]);
        assert_eq!(check_thm5(&s), CheckOutcome::Inconclusive);
        assert_eq!(check_cor5(&s), CheckOutcome::Inconclusive);

        // the scan reaches R = 2 with P = 12 > S - n m = 10
        let s = seq(&[6, 6, 6, 6, 6, 4], &[6, 6, 6, 6, 4, 6]);
        assert_eq!(check_cor5(&s), CheckOutcome::Inconclusive);
    }

    #[test]
    fn minimizer_examples() {
        assert_eq!(minimizer_b_star(5, 10, 4, 0).unwrap(), vec![4, 4, 2, 0, 0]);
        assert_eq!(minimizer_b_star(4, 4, 1, 1).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(minimizer_b_star(4, 6, 4, 0).unwrap(), vec![4, 2, 0, 0]);
        assert_eq!(minimizer_b_star(3, 9, 3, 0).unwrap(), vec![3, 3, 3]);
        assert!(matches!(minimizer_b_star(4, 17, 4, 0), Err(Error::Infeasible(_))));
        assert!(matches!(minimizer_b_star(4, 3, 4, 1), Err(Error::Infeasible(_))));
    }

    #[test]
    fn bound_table_examples() {
        let t = bound_table(10, 1, 40).unwrap();
        assert_eq!(t.h, [Some(5), Some(6), Some(5), Some(6), Some(5)]);
        assert_eq!(t.largest(), vec![3, 5]);

        let t = bound_table(10, 2, 40).unwrap();
        assert_eq!((t.get(5), t.get(3)), (Some(7), Some(6)));

        let t = bound_table(10, 3, 40).unwrap();
        assert_eq!(t.get(5), Some(10));

        let t = bound_table(10, 0, 40).unwrap();
        assert_eq!((t.get(5), t.get(6)), (None, None));

        assert!(bound_table(10, 3, 20).is_err());
    }

    #[test]
    fn bound_table_entries_are_tight() {
        for n in 1..30u64 {
            for m in 0..=n {
                for total in n * m..=n * n {
                    let t = bound_table(n, m, total).unwrap();
                    for h in t.h.iter().flatten() {
                        assert!(*h <= n);
                    }
                    let h2 = t.get(2).unwrap();
                    assert!((m + h2) * (m + h2) / 4 <= m * n);
                    if h2 < n {
                        assert!((m + h2 + 1) * (m + h2 + 1) / 4 > m * n);
                    }
                    let h3 = t.get(3).unwrap();
                    assert!(h3 * h3 <= total + 1);
                    if h3 < n {
                        assert!((h3 + 1) * (h3 + 1) > total + 1);
                    }
                    let h4 = t.get(4).unwrap();
                    assert!(h4 * (h4 + 1) <= total);
                    if h4 < n {
                        assert!((h4 + 1) * (h4 + 2) > total);
                    }
                }
            }
        }
    }

    #[test]
    fn certify_examples() {
        let out = certify(&seq(&MEAN_MIN_EXAMPLE, &MEAN_MIN_EXAMPLE), true, false);
        assert_eq!(cert(&out).condition, Condition::MaxProductLoops);

        let ce = seq(&[2, 2, 2, 0], &[4, 2, 0, 0]);
        assert_eq!(certify(&ce, true, true), CheckOutcome::NotGraphic(Witness::Inequality(3)));
        assert_eq!(certify(&ce, true, false), CheckOutcome::Inconclusive);
    }

    #[test]
    fn condition_names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(Condition::from_name(c.name()), Some(c));
        }
        assert_eq!(Condition::from_name("exact"), None);
    }

    proptest! {
        #[test]
        fn kstar_matches_integer_search(n in 1u64..5000, m_frac in 0.0f64..1.0, s_frac in 0.0f64..1.0) {
            let m = 1 + ((n - 1) as f64 * m_frac) as u64;
            let total = n * m + ((n * n - n * m) as f64 * s_frac) as u64;
            let ks = kstar_with_loops(n, total, m).unwrap();
            prop_assert_eq!(ks.k, k_by_search(m, ks.discriminant));
            if m < n {
                let ks = kstar_no_loops(n, total, m).unwrap();
                prop_assert_eq!(ks.k, k_by_search(m + 1, ks.discriminant));
            }
        }

        #[test]
        fn certificates_are_sound(s in arb_sequence(12)) {
            for c in Condition::ALL {
                if c.check(&s).is_graphic() {
                    let exact = if c.needs_loops() { check_with_loops(&s) } else { check_no_loops(&s) };
                    prop_assert!(exact.is_graphic(), "{} certified {:?}", c, s);
                }
            }
        }

        #[test]
        fn certify_with_fallback_matches_exact(s in arb_sequence(30), loops in any::<bool>()) {
            prop_assert_eq!(
                certify(&s, loops, true).verdict(),
                crate::exact::check(&s, loops).verdict()
            );
        }

        #[test]
        fn minimizer_dominates_with_minimum(
            n in 1u64..12, min in 0u64..4, extra in 0u64..6, seed in any::<u64>()
        ) {
            use rand::{Rng, SeedableRng};
            let max = (min + extra).min(n);
            prop_assume!(min <= max);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let b: Vec<u64> = (0..n).map(|_| rng.gen_range(min..=max)).collect();
            let total = b.iter().sum();
            let star = minimizer_b_star(n, total, max, min).unwrap();
            prop_assert_eq!(star.iter().sum::<u64>(), total);
            let ps = ConjugateProfile::new(&star, n as usize).unwrap();
            let pb = ConjugateProfile::new(&b, n as usize).unwrap();
            for j in 0..=n as usize {
                prop_assert!(ps.at(j) <= pb.at(j));
            }
        }

        /// A linear function with increments in {γ-1, γ} that lies below a
        /// concave one at both ends of an interval lies below it throughout.
        #[test]
        fn concave_profile_dominates_linear_between_endpoints(
            b in (2usize..40).prop_flat_map(|n| proptest::collection::vec(0..=n as u64, n)),
            gamma in 1u64..8,
            steps in proptest::collection::vec(any::<bool>(), 40),
            lo in 0usize..40,
            hi in 0usize..40,
        ) {
            let n = b.len();
            let p = ConjugateProfile::new(&b, n).unwrap();
            let (lo, hi) = (lo.min(hi).min(n), lo.max(hi).min(n));
            let mut phi = vec![0i64; n + 1];
            for j in 1..=n {
                phi[j] = phi[j - 1] + gamma as i64 - i64::from(steps[j - 1]);
            }
            // shift so Φ(lo) <= Ψ(lo) with equality
            let shift = p.at(lo) as i64 - phi[lo];
            let phi: Vec<i64> = phi.iter().map(|x| x + shift).collect();
            prop_assume!(phi[hi] <= p.at(hi) as i64);
            for j in lo..=hi {
                prop_assert!(phi[j] <= p.at(j) as i64);
            }
        }

        #[test]
        fn bound_table_consistency(s in arb_sequence(25)) {
            let st = s.stats();
            let t = bound_table(st.n, st.min_degree, st.total).unwrap();
            if st.max_degree <= t.get(3).unwrap() {
                prop_assert!(check_thm3(&s).is_graphic());
            }
            if st.max_degree <= t.get(4).unwrap() {
                prop_assert!(check_thm4(&s).is_graphic());
            }
            if st.max_degree <= t.get(2).unwrap() && s.sort_canonical().is_symmetric() {
                prop_assert!(check_thm2(&s).is_graphic());
            }
            if let Some(h5) = t.get(5) {
                if st.max_degree <= h5 {
                    prop_assert!(check_thm5(&s).is_graphic());
                }
            }
            if let Some(h6) = t.get(6) {
                if st.max_degree <= h6 {
                    prop_assert!(check_thm6(&s).is_graphic());
                }
            }
        }
    }
}
