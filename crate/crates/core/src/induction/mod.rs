//! Induction certificates for ratio bounds `v(n) > b(n+s)` or `v(n) < b(n+s)`
//! on a tail `n >= N`, where `v(n) = a_n / a_{n-1}` follows the ratio map
//! `v(n+1) = A(n) - B(n)/v(n)`.
//!
//! For a lower bound, `v(n) > b(n+s) > 0` and `B(n) > 0` give
//! `v(n+1) > A(n) - B(n)/b(n+s)`, so the step closes when
//! `E(n) = A(n) - B(n)/b(n+s) - b(n+s+1) > 0` on the tail. Upper bounds use
//! `-E` and additionally need `v(n) > 0`, which is supplied by a certified
//! lower bound (the support) plus a finite prefix of exact ratios.

mod positivity;

pub use positivity::{
    poly_shift, positive_on_integer_tail, PositivityCertificate, PositivityMethod,
    PositivityVerdict, SweepPoint, MAX_SWEEP,
};

use std::fmt;

use malachite::num::arithmetic::traits::DivisibleBy;
use serde::{Deserialize, Serialize};

use crate::exactnum::{denom, numer, BigInt, BigRat, DecisionPath};
use crate::holonomic::{builtin, ratio_map, Order2Recurrence, RatioMap, Sequence};
use crate::logbehavior::{PropertyReport, Verdict};
use crate::poly::{PolyZ, RatFunc};
use crate::{Error, Result};

pub const CERTIFICATE_SCHEMA: u32 = 1;

/// How far past the bound's own base the support search looks.
const SUPPORT_SCAN: u64 = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

/// Claim `v(n) <side> bound(n + shift)` for all `n >= base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    pub bound: RatFunc,
    pub side: Side,
    pub shift: i64,
    pub base: u64,
}

impl BoundSpec {
    pub fn new(bound: RatFunc, side: Side, shift: i64, base: u64) -> Self {
        BoundSpec {
            bound,
            side,
            shift,
            base,
        }
    }

    /// `bound(n + shift)` as a function of `n`.
    pub fn shifted_bound(&self) -> RatFunc {
        self.bound.shift(self.shift)
    }

    /// `bound(n + shift)` at a given `n`.
    pub fn bound_at(&self, n: u64) -> Option<BigRat> {
        self.bound.eval_i64(n as i64 + self.shift)
    }

    /// Whether the claim holds for the exact ratio `v` at `n`.
    pub fn holds_at(&self, n: u64, v: &BigRat) -> Option<bool> {
        let b = self.bound_at(n)?;
        Some(match self.side {
            Side::Lower => *v > b,
            Side::Upper => *v < b,
        })
    }
}

/// `f(n) = 16(n-1)/n`.
pub fn clf_bound() -> RatFunc {
    RatFunc::new(PolyZ::from_i64(&[-16, 16]), PolyZ::from_i64(&[0, 1])).unwrap()
}

/// `h(n) = 16(n^3-n^2+1)/(n^3-n^2)`.
pub fn flf_bound() -> RatFunc {
    RatFunc::new(PolyZ::from_i64(&[16, 0, -16, 16]), PolyZ::from_i64(&[0, 0, -1, 1])).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCase {
    pub n: u64,
    #[serde(with = "crate::serde_dec::int")]
    pub ratio_num: BigInt,
    #[serde(with = "crate::serde_dec::int")]
    pub ratio_den: BigInt,
    #[serde(with = "crate::serde_dec::int")]
    pub bound_num: BigInt,
    #[serde(with = "crate::serde_dec::int")]
    pub bound_den: BigInt,
    pub holds: bool,
}

impl BaseCase {
    pub fn ratio(&self) -> BigRat {
        BigRat::from_integers(self.ratio_num.clone(), self.ratio_den.clone())
    }

    pub fn bound_value(&self) -> BigRat {
        BigRat::from_integers(self.bound_num.clone(), self.bound_den.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideConditionKind {
    /// `B(n) > 0`, certified on `num(B) * den(B)`.
    RatioCoefficientPositive,
    /// `bound(n + shift) > 0`, certified on `num * den`.
    BoundPositive,
    /// The reduced step denominator is positive.
    StepDenominatorPositive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideCondition {
    pub kind: SideConditionKind,
    pub certificate: PositivityCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixRatio {
    pub n: u64,
    #[serde(with = "crate::serde_dec::rat")]
    pub ratio: BigRat,
}

/// Evidence that `v(n) > 0` on the tail of an upper-bound certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Support {
    /// Exact positive ratios for the indices before the lower bound's base.
    pub prefix: Vec<PrefixRatio>,
    pub lower: Box<InductionCertificate>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Certified,
    BaseFails,
    SideConditionFails,
    StepFails,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Certified => "certified",
            Conclusion::BaseFails => "base_fails",
            Conclusion::SideConditionFails => "side_condition_fails",
            Conclusion::StepFails => "step_fails",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub expr: String,
    pub num: PolyZ,
    pub den: PolyZ,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionCertificate {
    pub schema: u32,
    pub recurrence: Order2Recurrence,
    pub bound: BoundJson,
    pub side: Side,
    pub shift: i64,
    pub base: BaseCase,
    pub side_conditions: Vec<SideCondition>,
    pub step_numerator: PolyZ,
    pub step_denominator: PolyZ,
    pub positivity: PositivityCertificate,
    pub support: Option<Support>,
    pub conclusion: Conclusion,
}

impl InductionCertificate {
    pub fn is_certified(&self) -> bool {
        self.conclusion == Conclusion::Certified
    }

    pub fn spec(&self) -> Result<BoundSpec> {
        let bound = RatFunc::new(self.bound.num.clone(), self.bound.den.clone())
            .ok_or_else(|| Error::CertificateRejected("bound has a zero denominator".into()))?;
        Ok(BoundSpec::new(bound, self.side, self.shift, self.base.n))
    }

    /// Integer where the step numerator fails to be positive, if any.
    pub fn step_witness(&self) -> Option<&BigInt> {
        match &self.positivity.verdict {
            PositivityVerdict::Fails { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn side_condition(&self, kind: SideConditionKind) -> Option<&SideCondition> {
        self.side_conditions.iter().find(|c| c.kind == kind)
    }

    /// Independent validation from the certificate's own fields.
    pub fn recheck(&self) -> Result<()> {
        recheck(self)
    }
}

fn bound_json(r: &RatFunc) -> BoundJson {
    BoundJson {
        expr: r.to_string(),
        num: r.num().clone(),
        den: r.den().clone(),
    }
}

/// `A(n) - B(n)/b(n+s) - b(n+s+1)`, negated for upper bounds.
pub fn step_expression(map: &RatioMap, bound: &RatFunc, side: Side, shift: i64) -> Option<RatFunc> {
    let here = bound.shift(shift);
    let next = bound.shift(shift + 1);
    let e = &(&map.a - &map.b.div(&here)?) - &next;
    Some(match side {
        Side::Lower => e,
        Side::Upper => -&e,
    })
}

fn check_spec(map: &RatioMap, spec: &BoundSpec) -> Result<()> {
    if spec.base < map.valid_from {
        return Err(Error::SpecInvalid(format!(
            "base {} precedes the ratio map's first valid index {}",
            spec.base, map.valid_from
        )));
    }
    if spec.bound.is_zero() {
        return Err(Error::SpecInvalid("bound is identically zero".into()));
    }
    let here = spec.shifted_bound();
    let poles = here.den().integer_roots_from(spec.base as i64);
    if let Some(p) = poles.first() {
        return Err(Error::SpecInvalid(format!(
            "bound(n + {}) has a pole at n = {p}",
            spec.shift
        )));
    }
    Ok(())
}

fn conclude(base_holds: bool, sides_hold: bool, step_holds: bool) -> Conclusion {
    if !base_holds {
        Conclusion::BaseFails
    } else if !step_holds {
        Conclusion::StepFails
    } else if !sides_hold {
        Conclusion::SideConditionFails
    } else {
        Conclusion::Certified
    }
}

fn build(seq: &mut Sequence, spec: &BoundSpec, support: Option<Support>) -> Result<InductionCertificate> {
    let map = seq.ratio_map();
    check_spec(&map, spec)?;
    let tail = spec.base as i64;

    let v = seq.ratio(spec.base)?;
    let b = spec
        .bound_at(spec.base)
        .ok_or_else(|| Error::SpecInvalid(format!("bound has a pole at n = {}", spec.base)))?;
    let base = BaseCase {
        n: spec.base,
        ratio_num: numer(&v),
        ratio_den: denom(&v),
        bound_num: numer(&b),
        bound_den: denom(&b),
        holds: spec.holds_at(spec.base, &v).unwrap(),
    };

    let here = spec.shifted_bound();
    let e = step_expression(&map, &spec.bound, spec.side, spec.shift)
        .ok_or_else(|| Error::SpecInvalid("bound is identically zero".into()))?;
    let side_conditions = vec![
        SideCondition {
            kind: SideConditionKind::RatioCoefficientPositive,
            certificate: positive_on_integer_tail(&(map.b.num() * map.b.den()), tail),
        },
        SideCondition {
            kind: SideConditionKind::BoundPositive,
            certificate: positive_on_integer_tail(&(here.num() * here.den()), tail),
        },
        SideCondition {
            kind: SideConditionKind::StepDenominatorPositive,
            certificate: positive_on_integer_tail(e.den(), tail),
        },
    ];
    let positivity = positive_on_integer_tail(e.num(), tail);
    let sides_hold = side_conditions.iter().all(|c| c.certificate.is_certified())
        && (spec.side == Side::Lower || support.is_some());
    let conclusion = conclude(base.holds, sides_hold, positivity.is_certified());
    Ok(InductionCertificate {
        schema: CERTIFICATE_SCHEMA,
        recurrence: seq.recurrence().clone(),
        bound: bound_json(&spec.bound),
        side: spec.side,
        shift: spec.shift,
        base,
        side_conditions,
        step_numerator: e.num().clone(),
        step_denominator: e.den().clone(),
        positivity,
        support,
        conclusion,
    })
}

/// Looks for a certified lower bound that keeps `v(n)` positive on the tail
/// of an upper-bound spec.
fn find_support(seq: &mut Sequence, spec: &BoundSpec) -> Result<Option<Support>> {
    let map = seq.ratio_map();
    for delta in [-1, 1, 0, -2, 2] {
        for m in spec.base..=spec.base + SUPPORT_SCAN {
            let candidate = BoundSpec::new(spec.bound.clone(), Side::Lower, spec.shift + delta, m);
            if check_spec(&map, &candidate).is_err() {
                continue;
            }
            let cert = build(seq, &candidate, None)?;
            if !cert.is_certified() {
                continue;
            }
            let mut prefix = Vec::new();
            for n in spec.base..m {
                let ratio = seq.ratio(n)?;
                if ratio <= 0u32 {
                    return Ok(None);
                }
                prefix.push(PrefixRatio { n, ratio });
            }
            return Ok(Some(Support {
                prefix,
                lower: Box::new(cert),
            }));
        }
    }
    Ok(None)
}

/// Builds the induction certificate for `spec` over the ratios of `seq`.
pub fn induction_step(seq: &mut Sequence, spec: &BoundSpec) -> Result<InductionCertificate> {
    check_spec(&seq.ratio_map(), spec)?;
    let support = match spec.side {
        Side::Lower => None,
        Side::Upper => find_support(seq, spec)?,
    };
    build(seq, spec, support)
}

/// Outcome of scanning base indices for the smallest one that certifies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseScan {
    pub lo: u64,
    pub hi: u64,
    pub attempts: Vec<(u64, Conclusion)>,
    /// The certificate at the smallest working base, if one was found.
    pub certificate: Option<InductionCertificate>,
}

impl BaseScan {
    pub fn certified_base(&self) -> Option<u64> {
        self.certificate.as_ref().map(|c| c.base.n)
    }
}

pub fn scan_base(
    seq: &mut Sequence,
    bound: &RatFunc,
    side: Side,
    shift: i64,
    lo: u64,
    hi: u64,
) -> Result<BaseScan> {
    if lo > hi {
        return Err(Error::InvalidRange {
            lo,
            hi,
            reason: "empty base scan".into(),
        });
    }
    let mut scan = BaseScan {
        lo,
        hi,
        attempts: Vec::new(),
        certificate: None,
    };
    for base in lo..=hi {
        let spec = BoundSpec::new(bound.clone(), side, shift, base);
        let cert = match induction_step(seq, &spec) {
            Ok(c) => c,
            Err(Error::SpecInvalid(_)) => continue,
            Err(e) => return Err(e),
        };
        scan.attempts.push((base, cert.conclusion));
        if cert.is_certified() {
            scan.certificate = Some(cert);
            break;
        }
    }
    Ok(scan)
}

/// Exact pointwise check of `spec` on `[lo, hi]`.
pub fn pointwise_bound_check(seq: &mut Sequence, spec: &BoundSpec, lo: u64, hi: u64) -> Result<PropertyReport> {
    let property = format!("{}_bound", spec.side);
    let mut report = PropertyReport::new(property, seq.name().to_string(), lo, hi);
    for n in lo..=hi {
        let v = seq.ratio(n)?;
        let holds = spec
            .holds_at(n, &v)
            .ok_or_else(|| Error::SpecInvalid(format!("bound has a pole at n = {n}")))?;
        let verdict = if holds { Verdict::HoldsStrictly } else { Verdict::Fails };
        report.push(n, verdict, DecisionPath::Exact);
    }
    Ok(report)
}

/// Width of the pointwise differential check past each base.
pub const POINTWISE_SPAN: u64 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerification {
    pub certificate: InductionCertificate,
    pub pointwise: PropertyReport,
}

/// Certifies every spec and checks it pointwise on `[N, N + 200]`. A
/// certified bound that fails pointwise is a [`Error::SoundnessViolation`].
pub fn verify_ratio_bounds(seq: &mut Sequence, specs: &[BoundSpec]) -> Result<Vec<BoundVerification>> {
    if specs.is_empty() {
        return Err(Error::SpecInvalid("no bound specifications given".into()));
    }
    let mut out = Vec::with_capacity(specs.len());
    for spec in specs {
        let certificate = induction_step(seq, spec)?;
        let pointwise = pointwise_bound_check(seq, spec, spec.base, spec.base + POINTWISE_SPAN)?;
        if certificate.is_certified() && !pointwise.holds() {
            return Err(Error::SoundnessViolation(format!(
                "{} bound {} on `{}` certified from n = {} but fails at n = {}",
                spec.side,
                spec.bound,
                seq.name(),
                spec.base,
                pointwise.first_failure.unwrap()
            )));
        }
        out.push(BoundVerification {
            certificate,
            pointwise,
        });
    }
    Ok(out)
}

fn reject(msg: impl Into<String>) -> Error {
    Error::CertificateRejected(msg.into())
}

fn expect_tail(cert: &PositivityCertificate, tail: u64, what: &str) -> Result<()> {
    if cert.tail_start != BigInt::from(tail) {
        return Err(reject(format!("{what} certificate starts at the wrong index")));
    }
    cert.recheck()
}

/// Exact ratio `a_n / a_{n-1}` by direct iteration, independent of the
/// term store.
fn direct_ratio(rec: &Order2Recurrence, n: u64) -> Result<BigRat> {
    let (mut prev, mut cur) = (rec.a0.clone(), rec.a1.clone());
    for k in 1..n {
        let kk = BigInt::from(k);
        let rhs = rec.c1.eval(&kk) * &cur - rec.c0.eval(&kk) * &prev;
        let c2 = rec.c2.eval(&kk);
        if c2 == 0u32 || !(&rhs).divisible_by(&c2) {
            return Err(reject(format!("recurrence cannot produce a_{}", k + 1)));
        }
        prev = std::mem::replace(&mut cur, rhs / c2);
    }
    if n == 0 || prev == 0u32 {
        return Err(reject(format!("ratio at n = {n} is undefined")));
    }
    Ok(BigRat::from_integers(cur, prev))
}

fn recheck(cert: &InductionCertificate) -> Result<()> {
    if cert.schema != CERTIFICATE_SCHEMA {
        return Err(reject(format!("unknown schema {}", cert.schema)));
    }
    cert.recurrence
        .validate()
        .map_err(|e| reject(format!("recurrence: {e}")))?;
    if builtin(&cert.recurrence.name).is_some_and(|b| b != cert.recurrence) {
        return Err(reject(format!(
            "recurrence differs from the built-in `{}`",
            cert.recurrence.name
        )));
    }
    let spec = cert.spec()?;
    if spec.bound.num() != &cert.bound.num || spec.bound.den() != &cert.bound.den {
        return Err(reject("bound is not in reduced form"));
    }
    let map = ratio_map(&cert.recurrence);
    if spec.base < map.valid_from {
        return Err(reject("base precedes the ratio map's valid range"));
    }
    let tail = spec.base;

    if cert.base.ratio_den == 0u32 || cert.base.bound_den == 0u32 {
        return Err(reject("base case has a zero denominator"));
    }
    let v = direct_ratio(&cert.recurrence, tail)?;
    let b = spec
        .bound_at(tail)
        .ok_or_else(|| reject("bound has a pole at the base index"))?;
    if cert.base.n != tail || cert.base.ratio() != v || cert.base.bound_value() != b {
        return Err(reject("base case values are wrong"));
    }
    let base_holds = match spec.side {
        Side::Lower => v > b,
        Side::Upper => v < b,
    };
    if cert.base.holds != base_holds {
        return Err(reject("base case verdict is wrong"));
    }

    let e = step_expression(&map, &spec.bound, spec.side, spec.shift)
        .ok_or_else(|| reject("step expression is undefined"))?;
    if e.num() != &cert.step_numerator || e.den() != &cert.step_denominator {
        return Err(reject("step numerator or denominator does not match the recurrence"));
    }
    expect_tail(&cert.positivity, tail, "step")?;
    if cert.positivity.polynomial != cert.step_numerator {
        return Err(reject("step positivity certificate is for another polynomial"));
    }

    let here = spec.shifted_bound();
    let required = [
        (SideConditionKind::RatioCoefficientPositive, map.b.num() * map.b.den()),
        (SideConditionKind::BoundPositive, here.num() * here.den()),
        (SideConditionKind::StepDenominatorPositive, e.den().clone()),
    ];
    let mut sides_hold = true;
    for (kind, poly) in &required {
        let cond = cert
            .side_condition(*kind)
            .ok_or_else(|| reject(format!("missing side condition {kind:?}")))?;
        if &cond.certificate.polynomial != poly {
            return Err(reject(format!("side condition {kind:?} is for the wrong polynomial")));
        }
        expect_tail(&cond.certificate, tail, "side condition")?;
        sides_hold &= cond.certificate.is_certified();
    }
    if cert.side_conditions.len() != required.len() {
        return Err(reject("unexpected extra side conditions"));
    }

    match (&cert.support, spec.side) {
        (Some(_), Side::Lower) => return Err(reject("lower bounds carry no support")),
        (None, Side::Upper) => sides_hold = false,
        (Some(s), Side::Upper) => {
            let lower = &s.lower;
            if lower.side != Side::Lower || lower.recurrence != cert.recurrence {
                return Err(reject("support is not a lower bound for the same recurrence"));
            }
            if !lower.is_certified() {
                return Err(reject("support is not certified"));
            }
            recheck(lower)?;
            let m = lower.base.n;
            if m < tail {
                return Err(reject("support starts after its prefix"));
            }
            let expected: Vec<u64> = (tail..m).collect();
            let got: Vec<u64> = s.prefix.iter().map(|p| p.n).collect();
            if expected != got {
                return Err(reject("support prefix does not cover the gap"));
            }
            for p in &s.prefix {
                if direct_ratio(&cert.recurrence, p.n)? != p.ratio || p.ratio <= 0u32 {
                    return Err(reject(format!("support prefix ratio at n = {} is wrong", p.n)));
                }
            }
        }
        (None, Side::Lower) => {}
    }

    let expected = conclude(base_holds, sides_hold, cert.positivity.is_certified());
    if expected != cert.conclusion {
        return Err(reject(format!(
            "conclusion {} does not follow from the parts ({expected})",
            cert.conclusion
        )));
    }
    Ok(())
}
