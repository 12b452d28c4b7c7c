//! The reset-style sequence: a(180) = 360, then a(n) = a(n-1) + 1 while
//! gcd(n + (-1)^n - 1, a(n-1)) = 1 and a(n) = 3(n-2) otherwise.
//!
//! Its fundamental points are defined by two clauses, m = 6t *and*
//! a(m) = 2m (for the canonical sequence divisibility by 6 is an observed
//! consequence, here it is part of the definition). Main increments sit at
//! m + 3 with a(m+3) = 3(m+3) - 6; every other reset is a minor increment.
//! The start is fixed: configurable seeds would invent semantics the
//! construction does not have.

use crate::error::Result;
use crate::primality::{twin_flank, TwinFlank};
use crate::seq::{stream, SequenceSpec, Stream};

/// One evaluated point; `delta`/`reset` describe the step that produced it
/// (`delta` is `None` only at the start point 180).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltPoint {
    pub n: u64,
    pub value: u64,
    pub delta: Option<i64>,
    pub reset: bool,
}

/// Iterator over the sequence from 180 through `n_max`.
pub struct AltStream {
    inner: Stream,
}

impl Iterator for AltStream {
    type Item = Result<AltPoint>;

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.inner.next()?;
        Some(item.map(|it| AltPoint {
            n: it.point.n,
            value: it.point.value,
            delta: it.event.map(|e| e.h),
            reset: it.event.is_some_and(|e| e.reset),
        }))
    }
}

/// Streams a(180) = 360 through a(n_max). Requires n_max >= 180.
pub fn alt_stream(n_max: u64) -> Result<AltStream> {
    Ok(AltStream {
        inner: stream(SequenceSpec::alternate(), n_max)?,
    })
}

/// An index m with m = 6t and a(m) = 2m, plus its checked claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltFundamentalPoint {
    pub m: u64,
    pub ordinal: u32,
    pub twin: TwinFlank,
    /// a(m+3) = 3(m+3) - 6; `None` while m + 3 is beyond the scanned range.
    pub main_shape: Option<bool>,
}

/// Consistency note for one pair of adjacent fundamental points: with the
/// last minor reset at offset l after the opening main point n_i, the
/// relation n' = 2 n_i + 2 l - 3 should reproduce the next main point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltSegmentNote {
    pub from_m: u64,
    pub to_m: u64,
    /// Offset of the last reset strictly between from + 3 and to, if any.
    pub last_reset_offset: Option<u64>,
    /// `None` when the window had no reset to anchor the relation.
    pub relation_holds: Option<bool>,
}

/// Verification output for a scanned prefix of the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltReport {
    pub n_max: u64,
    pub fundamentals: Vec<AltFundamentalPoint>,
    pub segments: Vec<AltSegmentNote>,
    /// Total reset steps seen.
    pub reset_count: u64,
}

impl AltReport {
    /// Twin flanks everywhere, main shape wherever observable, and the
    /// doubling relation wherever anchored.
    pub fn all_checks_pass(&self) -> bool {
        self.fundamentals
            .iter()
            .all(|f| f.twin.both_prime && f.main_shape != Some(false))
            && self.segments.iter().all(|s| s.relation_holds != Some(false))
    }
}

/// Scans the sequence to `n_max`, collecting fundamental points and
/// checking twin flanks, main-increment shape, and the point-doubling
/// relation between consecutive fundamental points.
pub fn alt_verify(n_max: u64) -> Result<AltReport> {
    let mut fundamentals: Vec<AltFundamentalPoint> = Vec::new();
    let mut segments: Vec<AltSegmentNote> = Vec::new();
    let mut reset_count = 0u64;
    // last reset index after the current fundamental's main point
    let mut last_reset: Option<u64> = None;
    // index m + 3 whose value decides the pending main-shape check
    let mut awaiting_main: Option<usize> = None;

    for item in alt_stream(n_max)? {
        let p = item?;
        if p.reset {
            reset_count += 1;
        }

        // The reset at the main point itself must not count as a minor.
        let inside_main_window = awaiting_main.is_some();
        if let Some(idx) = awaiting_main {
            let f = &mut fundamentals[idx];
            if p.n == f.m + 3 {
                f.main_shape = Some(p.value == 3 * p.n - 6);
                awaiting_main = None;
            }
        }

        let is_fundamental = p.n % 6 == 0 && p.value == 2 * p.n;
        if is_fundamental {
            if let Some(prev) = fundamentals.last() {
                let from_n = prev.m + 3;
                let offset = last_reset.map(|r| r - from_n);
                segments.push(AltSegmentNote {
                    from_m: prev.m,
                    to_m: p.n,
                    last_reset_offset: offset,
                    relation_holds: offset.map(|l| p.n + 3 == 2 * from_n + 2 * l - 3),
                });
            }
            let ordinal = fundamentals.len() as u32 + 1;
            fundamentals.push(AltFundamentalPoint {
                m: p.n,
                ordinal,
                twin: twin_flank(p.n)?,
                main_shape: None,
            });
            awaiting_main = Some(fundamentals.len() - 1);
            last_reset = None;
        } else if p.reset && !inside_main_window {
            // resets strictly after the open main point
            last_reset = Some(p.n);
        }
    }

    Ok(AltReport {
        n_max,
        fundamentals,
        segments,
        reset_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::gcd;

    #[test]
    fn first_points() {
        let pts: Vec<(u64, u64, bool)> = alt_stream(186)
            .unwrap()
            .map(|p| p.map(|p| (p.n, p.value, p.reset)).unwrap())
            .collect();
        assert_eq!(
            pts,
            [
                (180, 360, false),
                (181, 361, false),
                (182, 362, false),
                (183, 543, true), // gcd(181, 362) = 181, reset to 3 * 181
                (184, 544, false),
                (185, 545, false),
                (186, 546, false),
            ]
        );
    }

    #[test]
    fn stream_domain() {
        assert!(alt_stream(179).is_err());
        let only: Vec<_> = alt_stream(180).unwrap().collect();
        assert_eq!(only.len(), 1);
    }

    #[test]
    fn reset_branch_matches_independent_recomputation() {
        let mut prev = 360u64;
        for item in alt_stream(20_000).unwrap().skip(1) {
            let p = item.unwrap();
            let arg = if p.n % 2 == 0 { p.n } else { p.n - 2 };
            let coprime = gcd(arg, prev) == 1;
            assert_eq!(p.reset, !coprime, "n = {}", p.n);
            if p.reset {
                assert_eq!(p.value, 3 * (p.n - 2), "n = {}", p.n);
            } else {
                assert_eq!(p.value, prev + 1, "n = {}", p.n);
            }
            prev = p.value;
        }
    }

    #[test]
    fn fundamental_points_to_100k() {
        let report = alt_verify(100_000).unwrap();
        let ms: Vec<u64> = report.fundamentals.iter().map(|f| f.m).collect();
        assert_eq!(ms, [180, 432, 882, 1878, 3768, 7590, 15270, 31728, 63600]);
        for f in &report.fundamentals {
            assert!(f.twin.both_prime, "m = {}", f.m);
            assert_eq!(f.main_shape, Some(true), "m = {}", f.m);
        }
        assert!(report.all_checks_pass());
    }

    #[test]
    fn first_fundamental_is_180_with_twins_179_181() {
        let report = alt_verify(200).unwrap();
        assert_eq!(report.fundamentals.len(), 1);
        let f = &report.fundamentals[0];
        assert_eq!((f.m, f.twin.lower, f.twin.upper), (180, 179, 181));
        assert!(f.twin.both_prime);
    }

    #[test]
    fn main_shape_pending_until_observable() {
        let report = alt_verify(182).unwrap();
        assert_eq!(report.fundamentals[0].main_shape, None);
        let report = alt_verify(183).unwrap();
        assert_eq!(report.fundamentals[0].main_shape, Some(true));
    }

    #[test]
    fn doubling_relation_between_adjacent_points() {
        let report = alt_verify(2000).unwrap();
        let ms: Vec<u64> = report.fundamentals.iter().map(|f| f.m).collect();
        assert_eq!(ms, [180, 432, 882, 1878]);
        let got: Vec<(u64, u64, Option<u64>, Option<bool>)> = report
            .segments
            .iter()
            .map(|s| (s.from_m, s.to_m, s.last_reset_offset, s.relation_holds))
            .collect();
        assert_eq!(
            got,
            [
                (180, 432, Some(36), Some(true)),  // last reset at 219
                (432, 882, Some(9), Some(true)),   // last reset at 444
                (882, 1878, Some(57), Some(true)), // last reset at 942
            ]
        );
    }
}
