//! Gcd-driven recurrences that generate twin primes.
//!
//! Three integer sequences are evaluated exactly and analyzed for
//! structure:
//!
//! - the *canonical* sequence, value(1) = 2 and value(n) = value(n-1) +
//!   gcd(n, value(n-1)) at even n, gcd(n-2, value(n-1)) at odd n;
//! - the *seeded* family, same recurrence from an arbitrary start m, whose
//!   last nontrivial increment on 1..m yields a certified twin-prime pair
//!   ([`twin_forge`]);
//! - an *alternate* sequence with a reset branch, starting at
//!   a(180) = 360 ([`alt_seq`]).
//!
//! [`analysis`] extracts fundamental points (value = 2n), labels main and
//! minor increments, computes per-segment statistics, tracks record
//! differences, and checks every conjectured invariant against the data,
//! reporting exact witnesses for anything that fails. [`primality`]
//! certifies results with a deterministic 64-bit test.
//!
//! Everything uses checked `u64` arithmetic and exact rationals
//! ([`ratio::Ratio`]); floating point never enters a check.

pub mod alt_seq;
pub mod analysis;
mod error;
pub mod primality;
pub mod ratio;
pub mod seq;
pub mod twin_forge;

pub use error::{Error, Result};
