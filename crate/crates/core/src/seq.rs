//! Streaming evaluation of the three gcd-driven recurrences.
//!
//! The canonical sequence starts at `value(1) = 2` and grows by
//! `gcd(n, value)` at even n and `gcd(n-2, value)` at odd n. The seeded
//! family uses the same rule from an arbitrary start `value(1) = m`. The
//! alternate sequence starts at `value(180) = 360`, adds 1 while a gcd
//! condition yields 1, and otherwise resets to `3(n-2)`.
//!
//! Correctness is defined by literal application of the recurrences; there
//! are no closed-form shortcuts. All arithmetic is checked `u64`: values
//! stay below `3n`, so overflow is impossible at any reachable scale, but
//! the boundary is made explicit rather than assumed.

use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// Binary GCD. `gcd(0, x) = x` by convention.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Which of the three recurrences a stream evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Fixed start value(1) = 2.
    Canonical,
    /// Same recurrence, start value(1) = m.
    Seeded { m: u64 },
    /// Reset-style recurrence with fixed start value(180) = 360.
    Alternate,
}

/// A recurrence pick plus its start point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceSpec {
    variant: Variant,
}

impl SequenceSpec {
    pub fn canonical() -> Self {
        SequenceSpec {
            variant: Variant::Canonical,
        }
    }

    /// The seeded family requires m >= 1. Seeds below 4 are outside the
    /// domain of the twin construction but the engine still evaluates them.
    pub fn seeded(m: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::BelowMinimum {
                what: "seed",
                got: m,
                min: 1,
            });
        }
        Ok(SequenceSpec {
            variant: Variant::Seeded { m },
        })
    }

    pub fn alternate() -> Self {
        SequenceSpec {
            variant: Variant::Alternate,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The fixed first point of the sequence.
    pub fn start(&self) -> SequencePoint {
        match self.variant {
            Variant::Canonical => SequencePoint { n: 1, value: 2 },
            Variant::Seeded { m } => SequencePoint { n: 1, value: m },
            Variant::Alternate => SequencePoint { n: 180, value: 360 },
        }
    }
}

/// One evaluated point of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequencePoint {
    pub n: u64,
    pub value: u64,
}

/// Provisional classification of a single step; the final main/minor
/// labels need fundamental-point context and are assigned in `analysis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncrementKind {
    Trivial,
    NonTrivial,
}

/// The difference introduced by one step.
///
/// `h` is signed because the alternate sequence's reset branch can move the
/// value downward; for the canonical and seeded variants `h >= 1` always.
/// `reset` marks the alternate sequence's second branch; a reset step is
/// nontrivial even in the unlikely case its difference lands on 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncrementEvent {
    pub n: u64,
    pub h: i64,
    pub value_after: u64,
    pub kind: IncrementKind,
    pub reset: bool,
}

impl IncrementEvent {
    pub fn is_trivial(&self) -> bool {
        self.kind == IncrementKind::Trivial
    }

    /// The increment as u64; only meaningful for canonical/seeded streams.
    pub fn h_unsigned(&self) -> u64 {
        debug_assert!(self.h >= 0);
        self.h as u64
    }
}

/// The gcd argument shared by all three recurrences: n itself at even n,
/// n - 2 at odd n.
fn gcd_argument(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        n
    } else {
        n - 2
    }
}

/// Computes the value at `prev.n + 1` and whether the alternate reset
/// branch fired (always false for canonical/seeded).
fn next_value(spec: &SequenceSpec, prev: SequencePoint) -> Result<(u64, u64, bool)> {
    let n = prev.n.checked_add(1).ok_or(Error::Overflow { n: u64::MAX })?;
    match spec.variant {
        Variant::Canonical | Variant::Seeded { .. } => {
            let g = gcd(gcd_argument(n), prev.value);
            let value = prev
                .value
                .checked_add(g)
                .ok_or(Error::Overflow { n })?;
            Ok((n, value, false))
        }
        Variant::Alternate => {
            if n < 181 {
                return Err(Error::AltBeforeStart { n });
            }
            if gcd(gcd_argument(n), prev.value) == 1 {
                let value = prev
                    .value
                    .checked_add(1)
                    .ok_or(Error::Overflow { n })?;
                Ok((n, value, false))
            } else {
                let value = (n - 2).checked_mul(3).ok_or(Error::Overflow { n })?;
                Ok((n, value, true))
            }
        }
    }
}

/// Advances one step: returns the point at `prev.n + 1`.
pub fn step(spec: &SequenceSpec, prev: SequencePoint) -> Result<SequencePoint> {
    let (n, value, _) = next_value(spec, prev)?;
    Ok(SequencePoint { n, value })
}

/// Advances one step and reports the difference it introduced.
pub fn increment_at(spec: &SequenceSpec, prev: SequencePoint) -> Result<IncrementEvent> {
    let (n, value, reset) = next_value(spec, prev)?;
    let h = if value >= prev.value {
        i64::try_from(value - prev.value).map_err(|_| Error::Overflow { n })?
    } else {
        -i64::try_from(prev.value - value).map_err(|_| Error::Overflow { n })?
    };
    let kind = if reset || h != 1 {
        IncrementKind::NonTrivial
    } else {
        IncrementKind::Trivial
    };
    Ok(IncrementEvent {
        n,
        h,
        value_after: value,
        kind,
        reset,
    })
}

/// The exact ratio value/n. Never a float.
pub fn gamma(point: SequencePoint) -> Ratio {
    Ratio::new(point.value, point.n)
}

/// Parity offset: 0 for even m, 2 for odd m.
pub fn delta(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        0
    } else {
        2
    }
}

/// A point together with the step that produced it (`None` only for the
/// stream's start point).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamItem {
    pub point: SequencePoint,
    pub event: Option<IncrementEvent>,
}

/// Serial iterator over a sequence prefix. O(1) state; an overflow is
/// yielded once as an error and the stream then ends.
#[derive(Debug, Clone)]
pub struct Stream {
    spec: SequenceSpec,
    cur: SequencePoint,
    n_max: u64,
    started: bool,
    done: bool,
}

impl Stream {
    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }
}

/// Streams every point from the spec's start through `n_max`.
pub fn stream(spec: SequenceSpec, n_max: u64) -> Result<Stream> {
    let start = spec.start();
    if n_max < start.n {
        return Err(Error::BelowMinimum {
            what: "n_max",
            got: n_max,
            min: start.n,
        });
    }
    Ok(Stream {
        spec,
        cur: start,
        n_max,
        started: false,
        done: false,
    })
}

impl Iterator for Stream {
    type Item = Result<StreamItem>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.cur.n == self.n_max {
                self.done = true;
            }
            return Some(Ok(StreamItem {
                point: self.cur,
                event: None,
            }));
        }
        if self.cur.n >= self.n_max {
            self.done = true;
            return None;
        }
        match increment_at(&self.spec, self.cur) {
            Ok(event) => {
                self.cur = SequencePoint {
                    n: event.n,
                    value: event.value_after,
                };
                if self.cur.n == self.n_max {
                    self.done = true;
                }
                Some(Ok(StreamItem {
                    point: self.cur,
                    event: Some(event),
                }))
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}

/// Collects the full point list of a prefix; convenience for small n_max.
pub fn collect_points(spec: SequenceSpec, n_max: u64) -> Result<Vec<SequencePoint>> {
    stream(spec, n_max)?
        .map(|item| item.map(|it| it.point))
        .collect()
}
