//! Graphicality of directed bidegree sequences.
//!
//! A bidegree sequence pairs an in-degree vector `a` with an out-degree
//! vector `b` over `n` nodes. It is *graphic with loops* when some 0-1
//! `n x n` matrix has row sums `a` and column sums `b`, and *graphic* when
//! such a matrix exists with a zero diagonal.
//!
//! The crate provides:
//!
//! * [`exact`]: the Gale-Ryser / Fulkerson-Chen-Anstee inequalities, O(n)
//!   after sorting, plus a brute-force oracle for tiny instances;
//! * [`sufficient`]: constant-time certificates that only look at summary
//!   statistics (max, min, total), together with the extremal minimizer
//!   and the bound table comparing them;
//! * [`realize`]: greedy construction of an explicit adjacency matrix;
//! * [`generate`]: seeded random and adversarial sequence generators.

pub mod error;
pub mod exact;
pub mod generate;
pub mod isqrt;
pub mod profile;
pub mod realize;
pub mod sequence;
pub mod sufficient;

pub use error::{Error, Result};
pub use exact::{check, check_no_loops, check_with_loops, CheckOutcome, Verdict, Witness};
pub use profile::ConjugateProfile;
pub use realize::{realize, verify_realization, AdjacencyRealization, Realized};
pub use sequence::{pad_bipartite, BidegreeSequence, SequenceStats};
pub use sufficient::{certify, BoundTable, Certificate, Condition};
