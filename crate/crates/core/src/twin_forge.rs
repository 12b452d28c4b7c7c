//! Twin-prime construction from arbitrary seeds.
//!
//! For any m >= 4, run the seeded recurrence over n = 1..m, take the last
//! nontrivial increment point n* (1 if every step was trivial), and read
//! off the pair (value(n*) - n* - 1, value(n*) - n* + 1). The claim under
//! test is that this pair is always twin primes with upper member >= m;
//! a failed certification is returned as data, never dropped, because a
//! single counterexample would be a finding in its own right.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::primality::is_prime;
use crate::seq::{stream, SequenceSpec};

/// Outcome of the construction for one seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwinCertificate {
    pub m: u64,
    /// Index of the last nontrivial increment on 1..m; 1 if none.
    pub n_star: u64,
    /// Sequence value at n_star.
    pub c_at_n_star: u64,
    /// (value - n* - 1, value - n* + 1).
    pub pair: (u64, u64),
    /// Both members passed the primality oracle.
    pub verified: bool,
    /// Upper member >= m.
    pub satisfies_bound: bool,
}

impl TwinCertificate {
    /// The bound must hold with equality exactly when n* = 1.
    pub fn bound_consistent(&self) -> bool {
        self.satisfies_bound && ((self.pair.1 == self.m) == (self.n_star == 1))
    }
}

/// Runs the seeded sequence for seed m >= 4 and certifies the resulting
/// pair. The whole range 2..m is scanned; the *last* nontrivial increment
/// is wanted, so there is no early exit.
pub fn twins_from(m: u64) -> Result<TwinCertificate> {
    if m < 4 {
        return Err(Error::BelowMinimum {
            what: "seed",
            got: m,
            min: 4,
        });
    }
    let spec = SequenceSpec::seeded(m)?;
    let mut n_star = 1u64;
    let mut c_at_n_star = m;
    for item in stream(spec, m)? {
        let it = item?;
        if it.event.is_some_and(|e| !e.is_trivial()) {
            n_star = it.point.n;
            c_at_n_star = it.point.value;
        }
    }
    let center = c_at_n_star - n_star;
    let pair = (center - 1, center + 1);
    Ok(TwinCertificate {
        m,
        n_star,
        c_at_n_star,
        pair,
        verified: is_prime(pair.0) && is_prime(pair.1),
        satisfies_bound: pair.1 >= m,
    })
}

/// True iff every step n = 2..m of the seeded sequence is a trivial
/// increment, for m > 3. Equivalent (and cross-checked in the tests and
/// the scan suite) to m being the greater member of a twin-prime pair.
pub fn criterion_check(m: u64) -> Result<bool> {
    if m <= 3 {
        return Err(Error::BelowMinimum {
            what: "seed",
            got: m,
            min: 4,
        });
    }
    let spec = SequenceSpec::seeded(m)?;
    for item in stream(spec, m)? {
        if item?.event.is_some_and(|e| !e.is_trivial()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Aggregate outcome of certifying every seed in a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub lo: u64,
    pub hi: u64,
    pub total: u64,
    pub verified_count: u64,
    /// Seeds whose pair failed primality, in seed order.
    pub failures: Vec<TwinCertificate>,
    /// Certificates violating the bound-equality rule (upper >= m with
    /// equality iff n* = 1); expected empty.
    pub bound_anomalies: Vec<TwinCertificate>,
    /// Seeds the engine could not evaluate (overflow); expected empty.
    pub errors: Vec<(u64, Error)>,
    /// How many seeds had no nontrivial increment at all (n* = 1).
    pub n_star_one: u64,
}

impl ScanReport {
    pub fn all_verified(&self) -> bool {
        self.failures.is_empty() && self.bound_anomalies.is_empty() && self.errors.is_empty()
    }
}

/// Certifies every seed in [lo, hi]. Seeds are independent, so they run on
/// the current rayon pool; aggregation is in seed order regardless of the
/// execution schedule.
pub fn scan_range(lo: u64, hi: u64) -> Result<ScanReport> {
    if lo < 4 {
        return Err(Error::BelowMinimum {
            what: "scan lower bound",
            got: lo,
            min: 4,
        });
    }
    if hi < lo {
        return Err(Error::BelowMinimum {
            what: "scan upper bound",
            got: hi,
            min: lo,
        });
    }

    let results: Vec<(u64, Result<TwinCertificate>)> = (lo..=hi)
        .into_par_iter()
        .map(|m| (m, twins_from(m)))
        .collect();

    let mut report = ScanReport {
        lo,
        hi,
        total: hi - lo + 1,
        verified_count: 0,
        failures: Vec::new(),
        bound_anomalies: Vec::new(),
        errors: Vec::new(),
        n_star_one: 0,
    };
    for (m, res) in results {
        match res {
            Ok(cert) => {
                if cert.verified {
                    report.verified_count += 1;
                } else {
                    report.failures.push(cert);
                }
                if !cert.bound_consistent() {
                    report.bound_anomalies.push(cert);
                }
                if cert.n_star == 1 {
                    report.n_star_one += 1;
                }
            }
            Err(e) => report.errors.push((m, e)),
        }
    }
    Ok(report)
}
