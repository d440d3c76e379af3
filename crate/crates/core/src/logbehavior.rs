//! Exact range checkers for log-behavior properties of a sequence.
//!
//! Quadratic properties (log-concavity, log-convexity, ratio monotonicity)
//! are decided by exact big-integer arithmetic. The n-th root properties are
//! decided in denominator-cleared integer-power form through
//! [`cmp_power_products`], so every index records which rung of the
//! precision ladder (or the exact fallback) settled it.

use std::cmp::Ordering;
use std::fmt;

use malachite::num::arithmetic::traits::Sign;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactnum::{cmp_power_products, BigInt, DecisionPath, PowerComparison, PrecisionLadder};
use crate::holonomic::Sequence;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    HoldsStrictly,
    Holds,
    Fails,
}

impl Verdict {
    /// Verdict for an inequality `lhs >= rhs` (or `>` if `strict`) given the
    /// ordering of `lhs` against `rhs`.
    pub fn from_ordering(ord: Ordering, strict: bool) -> Self {
        match ord {
            Ordering::Greater => Verdict::HoldsStrictly,
            Ordering::Equal if !strict => Verdict::Holds,
            _ => Verdict::Fails,
        }
    }

    pub fn is_ok(self) -> bool {
        self != Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HoldsStrictly => "holds_strictly",
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexVerdict {
    pub n: u64,
    pub verdict: Verdict,
    pub path: DecisionPath,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    pub interval: usize,
    pub exact: usize,
}

impl PathStats {
    pub fn interval_fraction(&self) -> f64 {
        let total = self.interval + self.exact;
        if total == 0 {
            1.0
        } else {
            self.interval as f64 / total as f64
        }
    }
}

/// Per-index verdicts for one property over `[n_lo, n_hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub sequence: String,
    pub n_lo: u64,
    pub n_hi: u64,
    pub entries: Vec<IndexVerdict>,
    pub first_failure: Option<u64>,
    /// Set when the entries do not cover the whole range.
    pub partial: Option<String>,
}

impl PropertyReport {
    pub fn new(property: impl Into<String>, sequence: impl Into<String>, n_lo: u64, n_hi: u64) -> Self {
        PropertyReport {
            property: property.into(),
            sequence: sequence.into(),
            n_lo,
            n_hi,
            entries: Vec::new(),
            first_failure: None,
            partial: None,
        }
    }

    pub fn push(&mut self, n: u64, verdict: Verdict, path: DecisionPath) {
        if verdict == Verdict::Fails && self.first_failure.is_none() {
            self.first_failure = Some(n);
        }
        self.entries.push(IndexVerdict { n, verdict, path });
    }

    pub fn mark_partial(&mut self, reason: impl Into<String>) {
        self.partial = Some(reason.into());
    }

    /// Every index checked and none failed.
    pub fn holds(&self) -> bool {
        self.partial.is_none()
            && self.entries.len() as u64 == self.n_hi - self.n_lo + 1
            && self.first_failure.is_none()
    }

    /// Every index holds with strict inequality.
    pub fn holds_strictly(&self) -> bool {
        self.holds() && self.entries.iter().all(|e| e.verdict == Verdict::HoldsStrictly)
    }

    /// Every index fails.
    pub fn fails_everywhere(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.verdict == Verdict::Fails)
    }

    pub fn failures(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries
            .iter()
            .filter(|e| e.verdict == Verdict::Fails)
            .map(|e| e.n)
    }

    pub fn verdict_at(&self, n: u64) -> Option<Verdict> {
        self.entries.iter().find(|e| e.n == n).map(|e| e.verdict)
    }

    pub fn path_stats(&self) -> PathStats {
        let mut stats = PathStats::default();
        for e in &self.entries {
            match e.path {
                DecisionPath::Interval(_) => stats.interval += 1,
                DecisionPath::Exact => stats.exact += 1,
            }
        }
        stats
    }

    /// Concatenates reports over adjacent ranges of the same property.
    pub fn merge(mut self, other: PropertyReport) -> Result<PropertyReport> {
        if self.property != other.property
            || self.sequence != other.sequence
            || other.n_lo != self.n_hi + 1
        {
            return Err(Error::CrossCheckFailed(format!(
                "cannot merge {}[{}, {}] with {}[{}, {}]",
                self.property, self.n_lo, self.n_hi, other.property, other.n_lo, other.n_hi
            )));
        }
        self.n_hi = other.n_hi;
        self.first_failure = self.first_failure.or(other.first_failure);
        self.partial = self.partial.or(other.partial);
        self.entries.extend(other.entries);
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub ladder: PrecisionLadder,
}

impl CheckOptions {
    pub fn exact_only() -> Self {
        CheckOptions {
            ladder: PrecisionLadder::exact_only(),
        }
    }
}

fn check_range(lo: u64, hi: u64, min_lo: u64) -> Result<()> {
    if lo < min_lo || lo > hi {
        return Err(Error::InvalidRange {
            lo,
            hi,
            reason: format!("need {min_lo} <= n_lo <= n_hi"),
        });
    }
    Ok(())
}

fn quadratic_check(
    seq: &mut Sequence,
    property: &str,
    n_lo: u64,
    n_hi: u64,
    strict: bool,
    concave: bool,
) -> Result<PropertyReport> {
    check_range(n_lo, n_hi, 1)?;
    let name = seq.name().to_string();
    let t = seq.terms(0, n_hi + 1)?;
    let mut report = PropertyReport::new(property, name, n_lo, n_hi);
    for n in n_lo..=n_hi {
        let i = n as usize;
        let square = &t[i] * &t[i];
        let outer = &t[i - 1] * &t[i + 1];
        let ord = if concave {
            square.cmp(&outer)
        } else {
            outer.cmp(&square)
        };
        report.push(n, Verdict::from_ordering(ord, strict), DecisionPath::Exact);
    }
    Ok(report)
}

/// `a_n^2 >= a_{n-1} a_{n+1}` (strict if requested) for each `n` in range.
pub fn check_log_concave(seq: &mut Sequence, n_lo: u64, n_hi: u64, strict: bool) -> Result<PropertyReport> {
    quadratic_check(seq, "log_concave", n_lo, n_hi, strict, true)
}

/// `a_n^2 <= a_{n-1} a_{n+1}` (strict if requested) for each `n` in range.
pub fn check_log_convex(seq: &mut Sequence, n_lo: u64, n_hi: u64, strict: bool) -> Result<PropertyReport> {
    quadratic_check(seq, "log_convex", n_lo, n_hi, strict, false)
}

/// Compares consecutive ratios `a_{n+1}/a_n` against `a_n/a_{n-1}` at each
/// `n`; equality yields `Holds`, a strict move in `direction` yields
/// `HoldsStrictly`. Each index is cross-checked against the product form.
pub fn check_ratio_monotone(
    seq: &mut Sequence,
    n_lo: u64,
    n_hi: u64,
    direction: Direction,
) -> Result<PropertyReport> {
    check_range(n_lo, n_hi, 1)?;
    let property = match direction {
        Direction::Increasing => "ratio_increasing",
        Direction::Decreasing => "ratio_decreasing",
    };
    let mut report = PropertyReport::new(property, seq.name().to_string(), n_lo, n_hi);
    for n in n_lo..=n_hi {
        let before = seq.ratio(n)?;
        let after = seq.ratio(n + 1)?;
        let ord = match direction {
            Direction::Increasing => after.cmp(&before),
            Direction::Decreasing => before.cmp(&after),
        };
        // a_{n+1}/a_n - a_n/a_{n-1} = (a_{n+1} a_{n-1} - a_n^2) / (a_n a_{n-1})
        let t = seq.terms(n - 1, n + 1)?;
        let mut product_ord = (&t[2] * &t[0]).cmp(&(&t[1] * &t[1]));
        if (&t[1] * &t[0]).sign() == Ordering::Less {
            product_ord = product_ord.reverse();
        }
        if direction == Direction::Decreasing {
            product_ord = product_ord.reverse();
        }
        if product_ord != ord {
            return Err(Error::CrossCheckFailed(format!(
                "ratio and product forms disagree at n = {n}"
            )));
        }
        report.push(n, Verdict::from_ordering(ord, false), DecisionPath::Exact);
    }
    Ok(report)
}

fn require_positive(seq_name: &str, terms: &[BigInt], offset: u64) -> Result<()> {
    for (i, t) in terms.iter().enumerate() {
        if t.sign() != Ordering::Greater {
            return Err(Error::NonPositiveTerm {
                sequence: seq_name.to_string(),
                index: offset + i as u64,
            });
        }
    }
    Ok(())
}

/// Decides `cur^(2(n^2-1))` against `prev^(n(n+1)) * next^(n(n-1))`, the
/// cleared form of `(cur^(1/n))^2 > prev^(1/(n-1)) next^(1/(n+1))`.
pub fn root_log_concave_at(
    prev: &BigInt,
    cur: &BigInt,
    next: &BigInt,
    n: u64,
    ladder: &PrecisionLadder,
) -> Result<PowerComparison> {
    assert!(n >= 2);
    let lhs = [(cur.clone(), 2 * (n * n - 1))];
    let rhs = [(prev.clone(), n * (n + 1)), (next.clone(), n * (n - 1))];
    cmp_power_products(&lhs, &rhs, ladder)
}

/// Decides `next^n` against `cur^(n+1)`, the cleared form of
/// `next^(1/(n+1)) > cur^(1/n)`.
pub fn root_monotone_at(cur: &BigInt, next: &BigInt, n: u64, ladder: &PrecisionLadder) -> Result<PowerComparison> {
    cmp_power_products(&[(next.clone(), n)], &[(cur.clone(), n + 1)], ladder)
}

fn power_check<F>(
    seq: &mut Sequence,
    property: &str,
    n_lo: u64,
    n_hi: u64,
    min_lo: u64,
    decide: F,
) -> Result<PropertyReport>
where
    F: Fn(&[BigInt], u64) -> Result<PowerComparison> + Sync,
{
    check_range(n_lo, n_hi, min_lo)?;
    let name = seq.name().to_string();
    let terms = seq.terms(0, n_hi + 1)?;
    let first = n_lo.saturating_sub(1);
    require_positive(&name, &terms[first as usize..], first)?;
    let decided: Vec<Result<PowerComparison>> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| decide(terms, n))
        .collect();
    let mut report = PropertyReport::new(property, name, n_lo, n_hi);
    for (n, c) in (n_lo..=n_hi).zip(decided) {
        let c = c?;
        report.push(n, Verdict::from_ordering(c.ordering, true), c.path);
    }
    Ok(report)
}

/// Strict log-concavity of `a_n^(1/n)` at each `n` in `[n_lo, n_hi]`,
/// `n_lo >= 2`.
pub fn check_root_log_concave(
    seq: &mut Sequence,
    n_lo: u64,
    n_hi: u64,
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    power_check(seq, "root_log_concave", n_lo, n_hi, 2, |t, n| {
        let i = n as usize;
        root_log_concave_at(&t[i - 1], &t[i], &t[i + 1], n, &opts.ladder)
    })
}

/// Strict increase `a_{n+1}^(1/(n+1)) > a_n^(1/n)` at each `n` in range,
/// `n_lo >= 1`.
pub fn check_root_monotone(
    seq: &mut Sequence,
    n_lo: u64,
    n_hi: u64,
    opts: &CheckOptions,
) -> Result<PropertyReport> {
    power_check(seq, "root_increasing", n_lo, n_hi, 1, |t, n| {
        let i = n as usize;
        root_monotone_at(&t[i], &t[i + 1], n, &opts.ladder)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::Order2Recurrence;
    use crate::poly::PolyZ;
    use malachite::num::arithmetic::traits::FloorRoot;
    use malachite::Natural;
    use proptest::prelude::*;

    /// `a_{n+1} = ratio * a_n`, `a_0 = 1`.
    fn geometric(name: &str, ratio: i64) -> Sequence {
        Sequence::new(
            Order2Recurrence::new(
                name,
                PolyZ::from_i64(&[1]),
                PolyZ::from_i64(&[ratio]),
                PolyZ::zero(),
                BigInt::from(1),
                BigInt::from(ratio),
                1,
            )
            .unwrap(),
        )
    }

    fn scaled_clf(c: i64) -> Sequence {
        let mut rec = crate::holonomic::clf();
        rec.name = format!("clf_x{c}");
        rec.a0 *= BigInt::from(c);
        rec.a1 *= BigInt::from(c);
        Sequence::new(rec)
    }

    /// Direct bigint oracle for a_n^2 vs a_{n-1} a_{n+1}.
    fn oracle_square_cmp(seq: &mut Sequence, n: u64) -> Ordering {
        let (a, b, c) = (seq.term(n - 1).unwrap(), seq.term(n).unwrap(), seq.term(n + 1).unwrap());
        (&b * &b).cmp(&(&a * &c))
    }

    #[test]
    fn clf_is_not_log_concave() {
        let mut s = Sequence::clf();
        let r = check_log_concave(&mut s, 1, 50, false).unwrap();
        assert!(r.fails_everywhere());
        assert_eq!(r.first_failure, Some(1));
        for n in 1..=50 {
            assert_eq!(oracle_square_cmp(&mut s, n), Ordering::Less);
        }
    }

    #[test]
    fn constant_sequence_equality_cases() {
        let mut s = geometric("ones", 1);
        assert!(check_log_concave(&mut s, 1, 20, false).unwrap().holds());
        assert!(!check_log_concave(&mut s, 1, 20, true).unwrap().holds());
        for dir in [Direction::Increasing, Direction::Decreasing] {
            let r = check_ratio_monotone(&mut s, 1, 20, dir).unwrap();
            assert!(r.holds() && !r.holds_strictly());
        }
        let m = check_root_monotone(&mut s, 1, 20, &CheckOptions::default()).unwrap();
        assert!(m.fails_everywhere());
    }

    #[test]
    fn flf_is_strictly_log_concave() {
        let mut s = Sequence::flf();
        let r = check_log_concave(&mut s, 2, 50, true).unwrap();
        assert!(r.holds_strictly());
        for n in 2..=50 {
            assert_eq!(oracle_square_cmp(&mut s, n), Ordering::Greater);
        }
        assert!(check_log_convex(&mut s, 2, 50, false).unwrap().fails_everywhere());
    }

    #[test]
    fn clf_is_strictly_log_convex() {
        let mut s = Sequence::clf();
        assert!(check_log_convex(&mut s, 1, 200, true).unwrap().holds_strictly());
        let inc = check_ratio_monotone(&mut s, 1, 200, Direction::Increasing).unwrap();
        assert!(inc.holds_strictly());
    }

    #[test]
    fn flf_ratios_decrease() {
        let mut s = Sequence::flf();
        let r = check_ratio_monotone(&mut s, 2, 50, Direction::Decreasing).unwrap();
        assert!(r.holds_strictly());
    }

    #[test]
    fn geometric_is_log_linear() {
        let mut s = geometric("pow2", 2);
        assert!(check_log_convex(&mut s, 1, 30, false).unwrap().holds());
        assert!(check_log_convex(&mut s, 1, 30, true).unwrap().fails_everywhere());
    }

    #[test]
    fn base_cases_of_root_concavity() {
        let opts = CheckOptions::default();
        assert!(check_root_log_concave(&mut Sequence::clf(), 2, 6, &opts).unwrap().holds_strictly());
        assert!(check_root_log_concave(&mut Sequence::flf(), 2, 9, &opts).unwrap().holds_strictly());
    }

    #[test]
    fn constant_root_is_never_strict() {
        let mut s = geometric("pow16", 16);
        let r = check_root_log_concave(&mut s, 2, 12, &CheckOptions::default()).unwrap();
        assert!(r.fails_everywhere());
        assert!(r.entries.iter().all(|e| e.path == DecisionPath::Exact));
    }

    #[test]
    fn root_monotone_sweeps() {
        let opts = CheckOptions::default();
        for mut s in [Sequence::clf(), Sequence::flf()] {
            let r = check_root_monotone(&mut s, 1, 100, &opts).unwrap();
            assert!(r.holds_strictly(), "{}", s.name());
            // Bigint oracle on a prefix.
            for n in 1..=30u64 {
                let a = s.term(n).unwrap();
                let b = s.term(n + 1).unwrap();
                use malachite::num::arithmetic::traits::Pow;
                assert!((&b).pow(n) > (&a).pow(n + 1));
            }
        }
    }

    #[test]
    fn forced_exact_matches_ladder() {
        for mut s in [Sequence::clf(), Sequence::flf()] {
            let fast = check_root_log_concave(&mut s, 2, 40, &CheckOptions::default()).unwrap();
            let slow = check_root_log_concave(&mut s, 2, 40, &CheckOptions::exact_only()).unwrap();
            let fv: Vec<_> = fast.entries.iter().map(|e| e.verdict).collect();
            let sv: Vec<_> = slow.entries.iter().map(|e| e.verdict).collect();
            assert_eq!(fv, sv);
            assert_eq!(fast.path_stats().exact, 0);
            assert_eq!(slow.path_stats().interval, 0);
        }
    }

    #[test]
    fn ratio_monotonicity_matches_log_convexity() {
        for mut s in [Sequence::clf(), Sequence::flf(), geometric("ones", 1)] {
            let inc = check_ratio_monotone(&mut s, 1, 60, Direction::Increasing).unwrap();
            let cvx = check_log_convex(&mut s, 1, 60, false).unwrap();
            let a: Vec<_> = inc.entries.iter().map(|e| e.verdict).collect();
            let b: Vec<_> = cvx.entries.iter().map(|e| e.verdict).collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn scaling_leaves_quadratic_verdicts_unchanged() {
        let mut base = Sequence::clf();
        let mut scaled = scaled_clf(7);
        let a = check_log_concave(&mut base, 1, 40, true).unwrap();
        let b = check_log_concave(&mut scaled, 1, 40, true).unwrap();
        assert_eq!(a.entries, b.entries);
        let a = check_ratio_monotone(&mut base, 1, 40, Direction::Increasing).unwrap();
        let b = check_ratio_monotone(&mut scaled, 1, 40, Direction::Increasing).unwrap();
        assert_eq!(a.entries, b.entries);
    }

    #[test]
    fn range_and_positivity_errors() {
        let opts = CheckOptions::default();
        assert!(check_root_log_concave(&mut Sequence::clf(), 1, 5, &opts).is_err());
        assert!(check_log_concave(&mut Sequence::clf(), 0, 5, false).is_err());
        assert!(check_log_concave(&mut Sequence::clf(), 6, 5, false).is_err());
        let mut alternating = geometric("alt", -1);
        assert!(matches!(
            check_root_monotone(&mut alternating, 1, 4, &opts),
            Err(Error::NonPositiveTerm { .. })
        ));
    }

    #[test]
    fn merge_adjacent_reports() {
        let opts = CheckOptions::default();
        let mut s = Sequence::clf();
        let a = check_root_monotone(&mut s, 1, 10, &opts).unwrap();
        let b = check_root_monotone(&mut s, 11, 20, &opts).unwrap();
        let whole = check_root_monotone(&mut s, 1, 20, &opts).unwrap();
        assert_eq!(a.clone().merge(b.clone()).unwrap(), whole);
        assert!(b.merge(a).is_err());
    }

    /// Interval oracle for k-th roots: [floor(x^(1/k) 2^m), +1] / 2^m.
    fn root_bounds(x: u64, k: u64, m: u64) -> (Natural, Natural) {
        let scaled = Natural::from(x) << (m * k);
        let lo = (&scaled).floor_root(k);
        let hi = &lo + Natural::from(1u32);
        (lo, hi)
    }

    /// Compares b^(2/n) with a^(1/(n-1)) c^(1/(n+1)) by nested root
    /// approximations; `Equal` if still unresolved at 600 bits.
    fn root_oracle(a: u64, b: u64, c: u64, n: u64) -> Ordering {
        let mut m = 16;
        while m <= 600 {
            let (bl, bh) = root_bounds(b, n, m);
            let (al, ah) = root_bounds(a, n - 1, m);
            let (cl, ch) = root_bounds(c, n + 1, m);
            let (l_lo, l_hi) = (&bl * &bl, &bh * &bh);
            let (r_lo, r_hi) = (&al * &cl, &ah * &ch);
            if l_lo > r_hi {
                return Ordering::Greater;
            }
            if l_hi < r_lo {
                return Ordering::Less;
            }
            m *= 2;
        }
        Ordering::Equal
    }

    proptest! {
        #[test]
        fn cleared_form_matches_root_oracle(a in 1u64..400, b in 1u64..400, c in 1u64..400, n in 2u64..=8) {
            let cmp = root_log_concave_at(
                &BigInt::from(a), &BigInt::from(b), &BigInt::from(c), n, &PrecisionLadder::default(),
            ).unwrap();
            prop_assert_eq!(cmp.ordering, root_oracle(a, b, c, n));
        }
    }

    #[test]
    fn root_oracle_sees_exact_ties() {
        // a = 2^(n-1), b = 2^n, c = 2^(n+1) have equal n-th roots.
        let cmp = root_log_concave_at(&BigInt::from(4), &BigInt::from(8), &BigInt::from(16), 3, &PrecisionLadder::default()).unwrap();
        assert_eq!(cmp.ordering, Ordering::Equal);
        assert_eq!(root_oracle(4, 8, 16, 3), Ordering::Equal);
    }
}
