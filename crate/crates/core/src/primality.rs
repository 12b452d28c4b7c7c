//! Deterministic primality and smallest-factor oracle for 64-bit integers.
//!
//! Twin-prime certificates must be unconditional, so probabilistic testing
//! is out: `is_prime` runs a Miller-Rabin round for each witness in a fixed
//! base set that is known to classify every 64-bit integer correctly.

use crate::error::{Error, Result};

/// Witnesses that make Miller-Rabin deterministic for all n < 2^64
/// (verified exhaustively against the Feitsma pseudoprime tables).
const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong-probable-prime check of odd `n > 2` to base `a`, with
/// `n - 1 = d * 2^s`.
fn strong_probable_prime(n: u64, a: u64, d: u64, s: u32) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// True iff `k` is prime. Deterministic and correct for all of u64.
pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if k == p {
            return true;
        }
        if k.is_multiple_of(p) {
            return false;
        }
    }
    let s = (k - 1).trailing_zeros();
    let d = (k - 1) >> s;
    WITNESSES
        .iter()
        .all(|&a| strong_probable_prime(k, a, d, s))
}

/// The flanks m - 1 and m + 1 of a center m, with their joint primality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinFlank {
    pub center: u64,
    pub lower: u64,
    pub upper: u64,
    pub both_prime: bool,
}

/// Checks whether m -/+ 1 form a twin-prime pair. Requires m >= 4.
pub fn twin_flank(m: u64) -> Result<TwinFlank> {
    if m < 4 {
        return Err(Error::BelowMinimum {
            what: "twin flank center",
            got: m,
            min: 4,
        });
    }
    let lower = m - 1;
    let upper = m + 1;
    Ok(TwinFlank {
        center: m,
        lower,
        upper,
        both_prime: is_prime(lower) && is_prime(upper),
    })
}

/// Least prime divisor of `k >= 2`, by wheel trial division. Intentionally
/// independent of `is_prime` so the two can cross-check each other.
pub fn smallest_prime_factor(k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::BelowMinimum {
            what: "factor argument",
            got: k,
            min: 2,
        });
    }
    for p in [2u64, 3, 5] {
        if k.is_multiple_of(p) {
            return Ok(p);
        }
    }
    // divisor candidates coprime to 2*3*5: 7, 11, 13, 17, 19, 23, 29, 31, 37, ...
    const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut d: u64 = 7;
    let mut i = 0;
    while d <= k / d {
        if k.is_multiple_of(d) {
            return Ok(d);
        }
        d += WHEEL[i];
        i = (i + 1) % WHEEL.len();
    }
    Ok(k)
}
