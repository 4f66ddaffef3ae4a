//! Exact integer square roots.
//!
//! Floating-point `sqrt` misclassifies perfect squares once the argument
//! approaches 2^53, and the certificate formulas flip at exactly those
//! boundaries, so every root in this crate goes through these helpers.

/// `⌊√x⌋`.
pub fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    // float seed, then correct in both directions
    let mut r = (x as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

/// `⌈√x⌉`.
pub fn ceil_isqrt(x: u64) -> u64 {
    let r = isqrt(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// `⌊√x⌋` for wide arguments (products of two 64-bit quantities).
pub fn isqrt_u128(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}
