//! Shared fixtures for the criterion benches.

use bidegree::generate::gen_uniform;
use bidegree::BidegreeSequence;

/// Sizes the benches sweep over.
pub const SIZES: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];

/// Uniform sequence with mean degree 8, minimum 1 and maximum 40, seeded
/// by `n` so each size is stable across runs.
pub fn uniform_fixture(n: u64) -> BidegreeSequence {
    gen_uniform(n, 8 * n, 1, 40.min(n), n).expect("feasible fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let s = uniform_fixture(1_000);
        let st = s.stats();
        assert_eq!((st.n, st.total, st.min_degree), (1_000, 8_000, 1));
        assert!(st.max_degree <= 40);
    }
}
