//! Seeded generators for random and adversarial bidegree sequences.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`, sampled through `rand` 0.8's `gen_range` / `gen::<f64>`.
//! Changing either the algorithm or the sampling calls changes every
//! generated corpus and must be treated as a format break.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequence::BidegreeSequence;
use crate::sufficient::minimizer_b_star;

pub type GeneratorRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GeneratorRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    UniformBounded { n: u64, total: u64, min: u64, max: u64, seed: u64 },
    PowerLaw { n: u64, exponent: f64, seed: u64 },
    Counterexample1 { max_in: u64, max_out: u64, n: u64 },
    ExtremalMinimizer { n: u64, total: u64, max: u64 },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<BidegreeSequence> {
        match *self {
            GeneratorSpec::UniformBounded { n, total, min, max, seed } => {
                gen_uniform(n, total, min, max, seed)
            }
            GeneratorSpec::PowerLaw { n, exponent, seed } => gen_powerlaw(n, exponent, seed),
            GeneratorSpec::Counterexample1 { max_in, max_out, n } => {
                gen_counterexample1(max_in, max_out, n)
            }
            GeneratorSpec::ExtremalMinimizer { n, total, max } => gen_extremal(n, total, max),
        }
    }
}

/// Both vectors start at `min` everywhere; the `total - n min` remaining
/// units go one at a time to slots chosen uniformly among those still below
/// `max`. The in-degree vector is drawn first, then the out-degree vector,
/// from one stream.
pub fn gen_uniform(n: u64, total: u64, min: u64, max: u64, seed: u64) -> Result<BidegreeSequence> {
    if n == 0 || min > max || max > n {
        return Err(Error::Infeasible(format!("need n >= 1 and {min} <= {max} <= n = {n}")));
    }
    if total < n * min || total > n * max {
        return Err(Error::Infeasible(format!(
            "total {total} outside [{}..{}]",
            n * min,
            n * max
        )));
    }
    let mut rng = rng_from_seed(seed);
    let a = bounded_composition(&mut rng, n as usize, total, min, max);
    let b = bounded_composition(&mut rng, n as usize, total, min, max);
    BidegreeSequence::new(a, b)
}

fn bounded_composition(rng: &mut GeneratorRng, n: usize, total: u64, min: u64, max: u64) -> Vec<u64> {
    let mut v = vec![min; n];
    let mut open: Vec<usize> = if min < max { (0..n).collect() } else { Vec::new() };
    for _ in 0..total - n as u64 * min {
        let pick = rng.gen_range(0..open.len());
        let slot = open[pick];
        v[slot] += 1;
        if v[slot] == max {
            open.swap_remove(pick);
        }
    }
    v
}

/// Cumulative distribution of `P(d = x) ∝ x^(-exponent)` on `[1..n]`.
pub fn powerlaw_cdf(n: u64, exponent: f64) -> Vec<f64> {
    let mut cdf = Vec::with_capacity(n as usize);
    let mut acc = 0.0;
    for x in 1..=n {
        acc += (x as f64).powf(-exponent);
        cdf.push(acc);
    }
    for c in &mut cdf {
        *c /= acc;
    }
    cdf
}

/// I.i.d. power-law in- and out-degrees on `[1..n]` by inverse CDF; the
/// lighter vector is then topped up one unit at a time at uniformly chosen
/// slots below `n` until the sums agree.
pub fn gen_powerlaw(n: u64, exponent: f64, seed: u64) -> Result<BidegreeSequence> {
    if exponent.is_nan() || exponent <= 2.0 || exponent.is_infinite() {
        return Err(Error::BadExponent(exponent));
    }
    if n < 2 {
        return Err(Error::InvalidParameters(format!("power-law generator needs n >= 2, got {n}")));
    }
    let cdf = powerlaw_cdf(n, exponent);
    let mut rng = rng_from_seed(seed);
    let draw = |rng: &mut GeneratorRng| -> Vec<u64> {
        (0..n)
            .map(|_| {
                let u: f64 = rng.gen();
                (cdf.partition_point(|&c| c <= u) as u64 + 1).min(n)
            })
            .collect()
    };
    let mut a = draw(&mut rng);
    let mut b = draw(&mut rng);
    let (sa, sb): (u64, u64) = (a.iter().sum(), b.iter().sum());
    let (light, deficit) = if sa < sb { (&mut a, sb - sa) } else { (&mut b, sa - sb) };
    let mut open: Vec<usize> = (0..n as usize).filter(|&i| light[i] < n).collect();
    for _ in 0..deficit {
        let pick = rng.gen_range(0..open.len());
        let slot = open[pick];
        light[slot] += 1;
        if light[slot] == n {
            open.swap_remove(pick);
        }
    }
    BidegreeSequence::new(a, b)
}

/// Smallest `n` that holds the adversarial instance for `(max_in, max_out)`.
pub fn counterexample1_min_n(max_in: u64, max_out: u64) -> u64 {
    let in_entries = max_out - 1 + u64::from(max_in > 2);
    max_in.max(max_out).max(in_entries)
}

/// Non-graphic sequence with `M_a M_b = S + 2`:
/// `b = (M_b × (M_a - 1), M_b - 2, 0, ...)` and
/// `a = (M_a × (M_b - 1), M_a - 2, 0, ...)`, the trailing `M_a - 2` omitted
/// when zero. The inequality at `j = M_b - 1` fails by one.
pub fn gen_counterexample1(max_in: u64, max_out: u64, n: u64) -> Result<BidegreeSequence> {
    if max_in < 2 || max_out <= 2 {
        return Err(Error::InvalidParameters(format!(
            "need M_a >= 2 and M_b > 2, got M_a={max_in} M_b={max_out}"
        )));
    }
    let need = counterexample1_min_n(max_in, max_out);
    if n < need {
        return Err(Error::InvalidParameters(format!(
            "n = {n} too small for M_a={max_in} M_b={max_out}; need n >= {need}"
        )));
    }
    let mut a = vec![max_in; (max_out - 1) as usize];
    if max_in > 2 {
        a.push(max_in - 2);
    }
    a.resize(n as usize, 0);
    let mut b = vec![max_out; (max_in - 1) as usize];
    b.push(max_out - 2);
    b.resize(n as usize, 0);
    BidegreeSequence::new(a, b)
}

/// Tight instance for the max-product bound: both vectors are the
/// pointwise minimizer with `k` leading entries `M` and one remainder.
pub fn gen_extremal(n: u64, total: u64, max: u64) -> Result<BidegreeSequence> {
    if max > n || total > n * max {
        return Err(Error::Infeasible(format!("need M <= n and S <= n M, got n={n} S={total} M={max}")));
    }
    if max * max > total + 1 {
        return Err(Error::Infeasible(format!("M² = {} exceeds S + 1 = {}", max * max, total + 1)));
    }
    let v = minimizer_b_star(n, total, max, 0)?;
    BidegreeSequence::new(v.clone(), v)
}
