//! Structure extraction over a canonical stream: fundamental points,
//! main/minor increment labeling, segment statistics, record differences,
//! and the verification report that checks every claimed invariant of the
//! sequence against the actual data.
//!
//! Terminology. A *fundamental point* is an index m >= 2 with value(m) = 2m
//! exactly. Segments pair consecutive fundamental points starting from the
//! second one (m = 6); each segment's *main point* is `from + 3`, carrying
//! an increment of `from + 1`, and every other nontrivial increment inside
//! it is *minor*. The nontrivial increments before the first segment
//! (n = 2, 5, 6 on the canonical start) fit no segment and are kept as
//! *orphans*.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::primality::{is_prime, smallest_prime_factor, twin_flank, TwinFlank};
use crate::ratio::Ratio;
use crate::seq::{delta, stream, SequencePoint, SequenceSpec};

/// Final label of a nontrivial increment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventClass {
    /// The increment at `fundamental + 3`.
    Main,
    /// Any other nontrivial increment inside a segment.
    Minor,
    /// A nontrivial increment that no segment can own.
    Orphan,
}

/// A nontrivial increment of the canonical sequence with its final label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedEvent {
    pub n: u64,
    pub h: u64,
    pub value_after: u64,
    pub class: EventClass,
}

/// An index m with value(m) = 2m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalPoint {
    pub m: u64,
    /// 1-based position in the detected sequence of fundamental points.
    pub ordinal: u32,
    pub value: u64,
    /// Twin status of m -/+ 1; `None` for the degenerate first point m = 2.
    pub twin: Option<TwinFlank>,
    pub divisible_by_6: bool,
}

/// Everything between two adjacent fundamental points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub from: FundamentalPoint,
    pub to: FundamentalPoint,
    /// from.m + 3, the index of the expected main increment.
    pub main_point: u64,
    /// Observed increment at the main point; `None` if that step was trivial.
    pub main_h: Option<u64>,
    pub minor_events: Vec<ClassifiedEvent>,
    /// Number of minor increments.
    pub h_count: u64,
    /// Sum of the minor increments.
    pub minor_sum: u64,
    /// Index of the last nontrivial increment before `to.m`; equals
    /// `main_point` when there are no minors.
    pub rho: u64,
    /// Sequence value at rho.
    pub rho_value: u64,
    /// rho / main_point, exact.
    pub lambda: Ratio,
    /// value(rho) - rho; the predictor for the next fundamental point.
    pub predicted_next: u64,
}

impl Segment {
    /// Segments are indexed by the ordinal of their closing point, so the
    /// first segment (6 -> 12) has ordinal 3.
    pub fn ordinal(&self) -> u32 {
        self.to.ordinal
    }
}

/// The open segment after the last detected fundamental point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingSegment {
    pub from: FundamentalPoint,
    pub main_h: Option<u64>,
    pub minor_count: u64,
    /// Last nontrivial increment seen so far, as (index, value there).
    pub last_nontrivial: Option<(u64, u64)>,
    /// Current prediction of the next fundamental point, when computable.
    pub predicted_next: Option<u64>,
}

/// Result of one classification pass over a canonical prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detection {
    pub n_max: u64,
    pub fundamentals: Vec<FundamentalPoint>,
    /// Every nontrivial increment in stream order, with final labels.
    pub events: Vec<ClassifiedEvent>,
    pub segments: Vec<Segment>,
    pub pending: Option<PendingSegment>,
}

impl Detection {
    /// Increment value at index n, if n carries a nontrivial increment.
    pub fn event_at(&self, n: u64) -> Option<&ClassifiedEvent> {
        self.events
            .binary_search_by_key(&n, |e| e.n)
            .ok()
            .map(|i| &self.events[i])
    }
}

struct OpenSegment {
    from: FundamentalPoint,
    main_h: Option<u64>,
    value_at_main: Option<u64>,
    minors: Vec<ClassifiedEvent>,
    last_nontrivial: Option<(u64, u64)>,
}

impl OpenSegment {
    fn new(from: FundamentalPoint) -> Self {
        OpenSegment {
            from,
            main_h: None,
            value_at_main: None,
            minors: Vec::new(),
            last_nontrivial: None,
        }
    }

    fn close(self, to: FundamentalPoint) -> Segment {
        let main_point = self.from.m + 3;
        let (rho, rho_value) = self.last_nontrivial.unwrap_or_else(|| {
            // No nontrivial increment at all between the two points; fall
            // back to the main point, whose value the pass recorded.
            let v = self
                .value_at_main
                .expect("main point lies strictly between adjacent fundamental points");
            (main_point, v)
        });
        let minor_sum = self.minors.iter().map(|e| e.h).sum();
        Segment {
            from: self.from,
            to,
            main_point,
            main_h: self.main_h,
            h_count: self.minors.len() as u64,
            minor_sum,
            rho,
            rho_value,
            lambda: Ratio::new(rho, main_point),
            predicted_next: rho_value - rho,
            minor_events: self.minors,
        }
    }
}

fn fundamental(m: u64, ordinal: u32, value: u64) -> FundamentalPoint {
    FundamentalPoint {
        m,
        ordinal,
        value,
        twin: if m >= 4 {
            Some(twin_flank(m).expect("m >= 4"))
        } else {
            None
        },
        divisible_by_6: m.is_multiple_of(6),
    }
}

/// Runs the canonical sequence to `n_max` and extracts fundamental points,
/// labeled increments, and closed segments.
///
/// A point can be both a fundamental point and a nontrivial increment
/// (n = 2 and n = 6 are); such an increment belongs to no segment interior
/// and is recorded as an orphan rather than rejected.
pub fn detect_events(n_max: u64) -> Result<Detection> {
    let mut fundamentals: Vec<FundamentalPoint> = Vec::new();
    let mut events: Vec<ClassifiedEvent> = Vec::new();
    let mut segments: Vec<Segment> = Vec::new();
    let mut open: Option<OpenSegment> = None;

    for item in stream(SequenceSpec::canonical(), n_max)? {
        let it = item?;
        let SequencePoint { n, value } = it.point;
        let is_fundamental = n >= 2 && value == 2 * n;

        if let Some(acc) = open.as_mut() {
            if n == acc.from.m + 3 {
                acc.value_at_main = Some(value);
            }
        }

        if let Some(event) = it.event.filter(|e| !e.is_trivial()) {
            let h = event.h_unsigned();
            let class = if is_fundamental {
                EventClass::Orphan
            } else if let Some(acc) = open.as_mut() {
                if n == acc.from.m + 3 {
                    acc.main_h = Some(h);
                    acc.last_nontrivial = Some((n, value));
                    EventClass::Main
                } else {
                    acc.last_nontrivial = Some((n, value));
                    EventClass::Minor
                }
            } else {
                EventClass::Orphan
            };
            let classified = ClassifiedEvent {
                n,
                h,
                value_after: value,
                class,
            };
            if class == EventClass::Minor {
                if let Some(acc) = open.as_mut() {
                    acc.minors.push(classified);
                }
            }
            events.push(classified);
        }

        if is_fundamental {
            let ordinal = fundamentals.len() as u32 + 1;
            let point = fundamental(n, ordinal, value);
            if let Some(acc) = open.take() {
                segments.push(acc.close(point));
            }
            if ordinal >= 2 {
                open = Some(OpenSegment::new(point));
            }
            fundamentals.push(point);
        }
    }

    let pending = open.map(|acc| PendingSegment {
        from: acc.from,
        main_h: acc.main_h,
        minor_count: acc.minors.len() as u64,
        last_nontrivial: acc.last_nontrivial,
        predicted_next: acc.last_nontrivial.map(|(n, v)| v - n),
    });

    Ok(Detection {
        n_max,
        fundamentals,
        events,
        segments,
        pending,
    })
}

/// A strict running maximum of the increment values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordEvent {
    pub n: u64,
    pub h: u64,
    /// For h > 3: primality of the pair (h - 2, h), i.e. whether h is the
    /// greater member of a twin-prime pair.
    pub twin: Option<TwinFlank>,
}

/// Successive strict maxima of h over the events, in stream order.
pub fn record_differences(events: &[ClassifiedEvent]) -> Vec<RecordEvent> {
    let mut best = 0;
    let mut records = Vec::new();
    for e in events {
        if e.h > best {
            best = e.h;
            records.push(RecordEvent {
                n: e.n,
                h: e.h,
                twin: if e.h > 3 {
                    twin_flank(e.h - 1).ok()
                } else {
                    None
                },
            });
        }
    }
    records
}

/// Per-segment verdicts on the claimed invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentChecks {
    /// Sum of minors minus their count is even.
    pub minor_sum_parity: bool,
    /// Sum of minors is congruent to their count mod 6.
    pub minor_congruence_mod6: bool,
    /// Every minor index x satisfies x < to - sqrt(to - 1) - 4, compared in
    /// integers as (to - 4 - x)^2 > to - 1 with x < to - 4.
    pub minor_cutoff: bool,
    /// value(rho)/rho >= 5/2; only claimed from segment ordinal 3 on.
    pub rho_gamma_bound: Option<bool>,
    /// lambda <= 5/4; only claimed from segment ordinal 6 on.
    pub lambda_bound: Option<bool>,
    /// to >= 2 * from.
    pub doubling: bool,
    /// Observed main increment equals from + 1.
    pub main_shape: bool,
    /// value(rho) - rho equals the closing fundamental point.
    pub predictor: bool,
}

/// A segment together with its computed checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentReport {
    pub segment: Segment,
    pub checks: SegmentChecks,
}

fn cutoff_ok(minor_n: u64, to_m: u64) -> bool {
    if minor_n >= to_m - 4 {
        return false;
    }
    let d = (to_m - 4 - minor_n) as u128;
    d * d > (to_m - 1) as u128
}

/// Evaluates the per-segment invariants for each closed segment.
pub fn segment_stats(segments: &[Segment]) -> Vec<SegmentReport> {
    segments
        .iter()
        .map(|s| {
            let diff = s.minor_sum - s.h_count; // each minor is >= 2
            let checks = SegmentChecks {
                minor_sum_parity: diff % 2 == 0,
                minor_congruence_mod6: diff % 6 == 0,
                minor_cutoff: s.minor_events.iter().all(|e| cutoff_ok(e.n, s.to.m)),
                rho_gamma_bound: (s.ordinal() >= 3)
                    .then(|| Ratio::new(s.rho_value, s.rho) >= Ratio::new(5, 2)),
                lambda_bound: (s.ordinal() >= 6).then(|| s.lambda <= Ratio::new(5, 4)),
                doubling: s.to.m >= 2 * s.from.m,
                main_shape: s.main_h == Some(s.from.m + 1),
                predictor: s.predicted_next == s.to.m,
            };
            SegmentReport {
                segment: s.clone(),
                checks,
            }
        })
        .collect()
}

/// Predicted next fundamental point from the last nontrivial increment:
/// value(rho) - rho.
pub fn predict_next_fundamental(rho_point: SequencePoint) -> u64 {
    rho_point.value - rho_point.n
}

/// The prime quadruple attached to a minor-free segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadruple {
    pub from_m: u64,
    pub to_m: u64,
    /// Whether to = 2 * from exactly.
    pub doubled: bool,
    /// p = from - 1; members are p, p + 2, 2p + 1, 2p + 3.
    pub p: u64,
    pub members: [(u64, bool); 4],
    pub all_prime: bool,
}

/// For each segment without minor increments, the numbers p, p+2, 2p+1,
/// 2p+3 (p = from - 1) with primality verdicts.
pub fn quadruples(segments: &[Segment]) -> Vec<Quadruple> {
    segments
        .iter()
        .filter(|s| s.h_count == 0)
        .map(|s| {
            let p = s.from.m - 1;
            let values = [p, p + 2, 2 * p + 1, 2 * p + 3];
            let members = values.map(|v| (v, is_prime(v)));
            Quadruple {
                from_m: s.from.m,
                to_m: s.to.m,
                doubled: s.to.m == 2 * s.from.m,
                p,
                members,
                all_prime: members.iter().all(|&(_, ok)| ok),
            }
        })
        .collect()
}

/// Indices n with value(n) = 3n, in order.
pub fn beta_points(n_max: u64) -> Result<Vec<u64>> {
    let mut betas = Vec::new();
    for item in stream(SequenceSpec::canonical(), n_max)? {
        let p = item?.point;
        if p.value == 3 * p.n {
            betas.push(p.n);
        }
    }
    Ok(betas)
}

/// Outcome of checking one claim over a scanned range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    /// Every instance in range satisfied the claim.
    Holds { cases: u64 },
    /// At least one instance failed; carries the first witness.
    Counterexample { n: u64, details: String },
    /// Nothing in range to check.
    Vacuous,
}

impl ClaimStatus {
    pub fn holds_or_vacuous(&self) -> bool {
        !matches!(self, ClaimStatus::Counterexample { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Holds { .. } => "holds",
            ClaimStatus::Counterexample { .. } => "counterexample",
            ClaimStatus::Vacuous => "vacuous",
        }
    }
}

/// Accumulates pass/fail instances for one claim, keeping the first
/// witness and a failure count.
struct Check {
    cases: u64,
    failures: u64,
    first: Option<(u64, String)>,
}

impl Check {
    fn new() -> Self {
        Check {
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    fn case(&mut self, ok: bool, n: u64, details: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some((n, details()));
            }
        }
    }

    fn status(self) -> ClaimStatus {
        match self.first {
            Some((n, mut details)) => {
                if self.failures > 1 {
                    details.push_str(&format!(" [{} of {} cases fail]", self.failures, self.cases));
                }
                ClaimStatus::Counterexample { n, details }
            }
            None if self.cases == 0 => ClaimStatus::Vacuous,
            None => ClaimStatus::Holds { cases: self.cases },
        }
    }
}

/// One entry of the rho/m ratio series (conjectured to tend to 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoRatio {
    pub ordinal: u32,
    pub rho: u64,
    pub m: u64,
    pub ratio: Ratio,
}

/// Statuses of every checked claim over a canonical prefix.
///
/// The ratio series gets no verdict: it supports a limit conjecture, which
/// a finite scan can only illustrate.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n_max: u64,
    /// Fundamental points exist and the least one is 2.
    pub fundamental_anchor: ClaimStatus,
    /// Adjacent fundamental points at least double: m' >= 2m.
    pub doubling: ClaimStatus,
    /// Every fundamental point after the first is divisible by 6 and
    /// flanked by twin primes.
    pub twin_flanks: ClaimStatus,
    /// The increment at m + 3 exists and equals m + 1.
    pub main_increment_shape: ClaimStatus,
    /// Per segment, sum of minors is congruent to their count mod 6.
    pub minor_congruence_mod6: ClaimStatus,
    /// Per segment, minors stop before to - sqrt(to - 1) - 4.
    pub minor_cutoff: ClaimStatus,
    /// Per segment, sum of minors minus their count is even.
    pub minor_sum_parity: ClaimStatus,
    /// Consecutive observed main increments p1 < p2 satisfy p2 >= 2 p1 - 1.
    pub greater_twin_gap: ClaimStatus,
    /// Pointwise ratio bounds: 2 - 2/(n-1) <= value/n, value/n <= 3 at even
    /// n and <= 3 - 6/n at odd n.
    pub gamma_bounds: ClaimStatus,
    /// Every record increment above 3 is the greater of a twin-prime pair.
    pub records_are_greater_twins: ClaimStatus,
    /// The records above 3 are exactly the main increments.
    pub records_match_main: ClaimStatus,
    /// Per segment from ordinal 6 on, lambda <= 5/4.
    pub lambda_bound: ClaimStatus,
    /// Per segment, value(rho) - rho equals the closing fundamental point.
    pub predictor: ClaimStatus,
    /// Per segment, the smallest prime factor of value(rho) - rho + 1
    /// equals to + 1 and matches the next observed main increment.
    pub smallest_factor_link: ClaimStatus,
    /// rho / m for each closed segment, for trend inspection.
    pub rho_ratios: Vec<RhoRatio>,
}

impl VerificationReport {
    /// Named view over all checked claims, in report order.
    pub fn checks(&self) -> Vec<(&'static str, &ClaimStatus)> {
        vec![
            ("fundamental-anchor", &self.fundamental_anchor),
            ("doubling", &self.doubling),
            ("twin-flanks", &self.twin_flanks),
            ("main-increment-shape", &self.main_increment_shape),
            ("minor-congruence-mod6", &self.minor_congruence_mod6),
            ("minor-cutoff", &self.minor_cutoff),
            ("minor-sum-parity", &self.minor_sum_parity),
            ("greater-twin-gap", &self.greater_twin_gap),
            ("gamma-bounds", &self.gamma_bounds),
            ("records-are-greater-twins", &self.records_are_greater_twins),
            ("records-match-main-increments", &self.records_match_main),
            ("lambda-bound", &self.lambda_bound),
            ("next-point-predictor", &self.predictor),
            ("smallest-factor-link", &self.smallest_factor_link),
        ]
    }

    /// True when no claim has a counterexample in range.
    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|(_, s)| s.holds_or_vacuous())
    }
}

fn check_gamma_bounds(n_max: u64) -> Result<ClaimStatus> {
    let mut check = Check::new();
    for item in stream(SequenceSpec::canonical(), n_max)? {
        let SequencePoint { n, value } = item?.point;
        if n < 2 {
            continue;
        }
        let lower_ok = (2 * n - 4) as u128 * n as u128 <= value as u128 * (n - 1) as u128;
        check.case(lower_ok, n, || {
            format!("value {value} at n = {n} breaks the lower bound 2 - 2/(n-1)")
        });
        let (cap, cap_text) = if n % 2 == 0 {
            (3 * n, "3n")
        } else {
            (3 * n - 6, "3n - 6")
        };
        check.case(value <= cap, n, || {
            format!("value {value} at n = {n} exceeds the {cap_text} cap {cap}")
        });
    }
    Ok(check.status())
}

/// Runs the full pipeline once and evaluates every claim over all complete
/// segments with `to <= n_max`. Requires n_max >= 12 so that at least one
/// segment closes.
pub fn verify_observations(n_max: u64) -> Result<VerificationReport> {
    if n_max < 12 {
        return Err(Error::BelowMinimum {
            what: "n_max",
            got: n_max,
            min: 12,
        });
    }

    let det = detect_events(n_max)?;
    let reports = segment_stats(&det.segments);
    let records = record_differences(&det.events);

    // fundamental points exist and start at 2
    let mut anchor = Check::new();
    if let Some(f) = det.fundamentals.first() {
        anchor.case(f.m == 2, f.m, || {
            format!("least fundamental point is {}, not 2", f.m)
        });
    }
    for f in det.fundamentals.iter().skip(1) {
        anchor.case(true, f.m, String::new);
    }

    let mut doubling = Check::new();
    for w in det.fundamentals.windows(2) {
        let (a, b) = (w[0].m, w[1].m);
        doubling.case(b >= 2 * a, b, || {
            format!("adjacent fundamental points {a} -> {b} do not double")
        });
    }

    let mut twins = Check::new();
    for f in det.fundamentals.iter().filter(|f| f.ordinal >= 2) {
        let ok = f.divisible_by_6 && f.twin.is_some_and(|t| t.both_prime);
        twins.case(ok, f.m, || {
            format!(
                "fundamental point {} (ordinal {}): divisible by 6 = {}, flanks prime = {:?}",
                f.m,
                f.ordinal,
                f.divisible_by_6,
                f.twin.map(|t| (is_prime(t.lower), is_prime(t.upper)))
            )
        });
    }

    let mut main_shape = Check::new();
    for f in det.fundamentals.iter().filter(|f| f.ordinal >= 2) {
        let main_n = f.m + 3;
        if main_n > n_max {
            continue;
        }
        match det.event_at(main_n) {
            Some(e) => main_shape.case(e.h == f.m + 1, main_n, || {
                format!(
                    "increment at {} is {}, expected {} (fundamental point {})",
                    main_n,
                    e.h,
                    f.m + 1,
                    f.m
                )
            }),
            None => main_shape.case(false, main_n, || {
                format!(
                    "no nontrivial increment at {} after fundamental point {}",
                    main_n, f.m
                )
            }),
        }
    }

    let mut congruence = Check::new();
    let mut cutoff = Check::new();
    let mut parity = Check::new();
    let mut lambda = Check::new();
    let mut predictor = Check::new();
    let mut spf_link = Check::new();
    for r in &reports {
        let s = &r.segment;
        let id = s.to.m;
        congruence.case(r.checks.minor_congruence_mod6, id, || {
            format!(
                "segment {} -> {}: minor sum {} vs count {} differ mod 6",
                s.from.m, s.to.m, s.minor_sum, s.h_count
            )
        });
        cutoff.case(r.checks.minor_cutoff, id, || {
            let worst = s.minor_events.iter().map(|e| e.n).max().unwrap_or(0);
            format!(
                "segment {} -> {}: minor at {} beyond the square-root cutoff",
                s.from.m, s.to.m, worst
            )
        });
        parity.case(r.checks.minor_sum_parity, id, || {
            format!(
                "segment {} -> {}: minor sum {} minus count {} is odd",
                s.from.m, s.to.m, s.minor_sum, s.h_count
            )
        });
        if let Some(ok) = r.checks.lambda_bound {
            lambda.case(ok, id, || {
                format!(
                    "segment ordinal {}: lambda = {} exceeds 5/4",
                    s.ordinal(),
                    s.lambda
                )
            });
        }
        predictor.case(r.checks.predictor, id, || {
            format!(
                "segment {} -> {}: predictor value({}) - {} = {} misses {}",
                s.from.m, s.to.m, s.rho, s.rho, s.predicted_next, s.to.m
            )
        });

        // The increment that opens the next segment is the smallest prime
        // factor of value(rho) - rho + delta - 1, where delta = 2 because
        // the next main point to.m + 3 is odd.
        let q_arg = s.rho_value - s.rho + delta(s.to.m + 3) - 1;
        let q = smallest_prime_factor(q_arg).expect("argument >= 2");
        let mut ok = q == s.to.m + 1;
        let observed = det.event_at(s.to.m + 3).map(|e| e.h);
        if let Some(h) = observed {
            ok = ok && h == q;
        }
        spf_link.case(ok, id, || {
            format!(
                "segment {} -> {}: smallest prime factor of {} is {}, expected {} (observed next main increment {:?})",
                s.from.m, s.to.m, q_arg, q, s.to.m + 1, observed
            )
        });
    }

    // consecutive observed main increments
    let mains: Vec<&ClassifiedEvent> = det
        .events
        .iter()
        .filter(|e| e.class == EventClass::Main)
        .collect();
    let mut gap = Check::new();
    for w in mains.windows(2) {
        let (p1, p2) = (w[0].h, w[1].h);
        gap.case(p2 >= 2 * p1 - 1, w[1].n, || {
            format!("main increments {p1} then {p2} violate p2 >= 2 p1 - 1")
        });
    }

    let mut record_twins = Check::new();
    for r in records.iter().filter(|r| r.h > 3) {
        let ok = r.twin.is_some_and(|t| t.both_prime);
        record_twins.case(ok, r.n, || {
            format!(
                "record increment {} at n = {} is not the greater of a twin pair",
                r.h, r.n
            )
        });
    }

    // set comparison: records above 3 vs main increments
    let record_set: BTreeSet<u64> = records.iter().filter(|r| r.h > 3).map(|r| r.n).collect();
    let main_set: BTreeSet<u64> = mains.iter().map(|e| e.n).collect();
    let mut records_match = Check::new();
    if record_set.is_empty() && main_set.is_empty() {
        // leave vacuous
    } else {
        for &n in record_set.symmetric_difference(&main_set) {
            let side = if record_set.contains(&n) {
                "a record above 3 but not a main increment"
            } else {
                "a main increment but not a record above 3"
            };
            records_match.case(false, n, || format!("increment at n = {n} is {side}"));
        }
        if records_match.first.is_none() {
            records_match.cases = record_set.len() as u64;
        }
    }

    let rho_ratios = det
        .segments
        .iter()
        .map(|s| RhoRatio {
            ordinal: s.ordinal(),
            rho: s.rho,
            m: s.to.m,
            ratio: Ratio::new(s.rho, s.to.m),
        })
        .collect();

    Ok(VerificationReport {
        n_max,
        fundamental_anchor: anchor.status(),
        doubling: doubling.status(),
        twin_flanks: twins.status(),
        main_increment_shape: main_shape.status(),
        minor_congruence_mod6: congruence.status(),
        minor_cutoff: cutoff.status(),
        minor_sum_parity: parity.status(),
        greater_twin_gap: gap.status(),
        gamma_bounds: check_gamma_bounds(n_max)?,
        records_are_greater_twins: record_twins.status(),
        records_match_main: records_match.status(),
        lambda_bound: lambda.status(),
        predictor: predictor.status(),
        smallest_factor_link: spf_link.status(),
        rho_ratios,
    })
}
