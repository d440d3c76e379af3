//! Pointwise and symbolic checks of the bounds chained into `h(n)^n > V_n`.

use malachite::num::arithmetic::traits::Pow;
use serde::{Deserialize, Serialize};

use crate::exactnum::{cmp_power_products, BigInt, BigRat, DecisionPath, PiEnclosure, PrecisionLadder};
use crate::holonomic::Sequence;
use crate::induction::{flf_bound, positive_on_integer_tail, PositivityCertificate};
use crate::logbehavior::{PropertyReport, Verdict};
use crate::poly::{PolyZ, RatFunc};
use crate::{Error, Result};

fn need_range(lo: u64, hi: u64, min: u64) -> Result<()> {
    if lo < min || lo > hi {
        return Err(Error::InvalidRange {
            lo,
            hi,
            reason: format!("need {min} <= n_lo <= n_hi"),
        });
    }
    Ok(())
}

fn verdict(holds: bool) -> Verdict {
    if holds {
        Verdict::HoldsStrictly
    } else {
        Verdict::Fails
    }
}

fn sixteen_pow(n: u64) -> BigInt {
    BigInt::from(16u32).pow(n)
}

/// `C(2n, n)` by the multiplicative formula with exact divisions.
pub fn binom_central(n: u64) -> BigInt {
    let mut c = BigInt::from(1);
    for k in 1..=n {
        c *= BigInt::from(n + k);
        c /= BigInt::from(k);
    }
    c
}

/// `V_n < (2n+1) C(2n,n)^2` at each `n`.
pub fn check_vu1(flf: &mut Sequence, n_lo: u64, n_hi: u64) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 1)?;
    let mut report = PropertyReport::new("v_binomial_bound", flf.name().to_string(), n_lo, n_hi);
    for n in n_lo..=n_hi {
        let c = binom_central(n);
        let rhs = BigInt::from(2 * n + 1) * &c * &c;
        report.push(n, verdict(flf.term(n)? < rhs), DecisionPath::Exact);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SasvariSign {
    pub report: PropertyReport,
    /// `24n^2 - 1 > 0` on `n >= 1`.
    pub certificate: PositivityCertificate,
}

/// `-1/(8n) + 1/(192 n^3) < 0` at each `n`, with the symbolic certificate
/// for the equivalent `24n^2 - 1 > 0`.
pub fn sasvari_exponent_sign(n_lo: u64, n_hi: u64) -> Result<SasvariSign> {
    need_range(n_lo, n_hi, 1)?;
    let poly = PolyZ::from_i64(&[-1, 0, 24]);
    let mut report = PropertyReport::new("sasvari_exponent_negative", "n", n_lo, n_hi);
    for n in n_lo..=n_hi {
        let nn = BigInt::from(n);
        let e = -BigRat::from_integers(BigInt::from(1), BigInt::from(8) * &nn)
            + BigRat::from_integers(BigInt::from(1), BigInt::from(192) * (&nn).pow(3));
        let negative = e < 0u32;
        if negative != (poly.eval(&nn) > 0u32) {
            return Err(Error::CrossCheckFailed(format!(
                "exponent sign disagrees with 24n^2 - 1 at n = {n}"
            )));
        }
        report.push(n, verdict(negative), DecisionPath::Exact);
    }
    Ok(SasvariSign {
        report,
        certificate: positive_on_integer_tail(&poly, 1),
    })
}

/// `pi * n * C(2n,n)^2 < 16^n` at each `n`. The upper end of the enclosure
/// is used, so a pass implies the inequality for pi itself.
pub fn check_nfu(n_lo: u64, n_hi: u64, pi: &PiEnclosure) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 1)?;
    let mut report = PropertyReport::new("central_binomial_bound", "C(2n,n)", n_lo, n_hi);
    for n in n_lo..=n_hi {
        let c = binom_central(n);
        let lhs = &pi.pi_hi * BigRat::from(BigInt::from(n) * &c * &c);
        report.push(n, verdict(lhs < BigRat::from(sixteen_pow(n))), DecisionPath::Exact);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vu2Report {
    /// `V_n * pi * n < (2n+1) 16^n`, with the upper end of the enclosure.
    pub scaled: PropertyReport,
    /// `2n + 1 < pi * n`, with the lower end of the enclosure.
    pub factor_below_one: PropertyReport,
    /// `V_n < 16^n`.
    pub direct: PropertyReport,
}

impl Vu2Report {
    pub fn holds(&self) -> bool {
        self.scaled.holds() && self.factor_below_one.holds() && self.direct.holds()
    }
}

pub fn check_vu2(flf: &mut Sequence, n_lo: u64, n_hi: u64, pi: &PiEnclosure) -> Result<Vu2Report> {
    need_range(n_lo, n_hi, 1)?;
    let name = flf.name().to_string();
    let mut scaled = PropertyReport::new("v_pi_bound", name.clone(), n_lo, n_hi);
    let mut factor = PropertyReport::new("pi_factor_below_one", "n", n_lo, n_hi);
    let mut direct = PropertyReport::new("v_below_16_pow", name, n_lo, n_hi);
    for n in n_lo..=n_hi {
        let v = flf.term(n)?;
        let p16 = sixteen_pow(n);
        let nn = BigRat::from(n);
        let lhs = &pi.pi_hi * &nn * BigRat::from(v.clone());
        let rhs = BigRat::from(BigInt::from(2 * n + 1) * &p16);
        scaled.push(n, verdict(lhs < rhs), DecisionPath::Exact);
        let two_n_1 = BigRat::from(2 * n + 1);
        factor.push(n, verdict(two_n_1 < &pi.pi_lo * &nn), DecisionPath::Exact);
        direct.push(n, verdict(v < p16), DecisionPath::Exact);
    }
    Ok(Vu2Report {
        scaled,
        factor_below_one: factor,
        direct,
    })
}

/// Checks index by index that the binomial bound and the central-binomial
/// bound together force the scaled bound and `V_n < 16^n`, by re-deriving
/// the chain in exact arithmetic. Returns the indices where the derivation
/// disagrees with the reported verdicts (empty on success).
pub fn chain_implication(
    flf: &mut Sequence,
    vu1: &PropertyReport,
    nfu: &PropertyReport,
    vu2: &Vu2Report,
    pi: &PiEnclosure,
) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for e in &vu1.entries {
        let n = e.n;
        let (Some(a), Some(b)) = (vu1.verdict_at(n), nfu.verdict_at(n)) else {
            continue;
        };
        if !(a.is_ok() && b.is_ok()) {
            continue;
        }
        let v = BigRat::from(flf.term(n)?);
        let c = binom_central(n);
        let c2 = BigRat::from(&c * &c);
        let w = BigRat::from(2 * n + 1);
        let nn = BigRat::from(n);
        let p16 = BigRat::from(sixteen_pow(n));
        // V_n pi n < (2n+1) C^2 pi n < (2n+1) 16^n
        let step1 = &v * &pi.pi_hi * &nn < &w * &c2 * &pi.pi_hi * &nn;
        let step2 = &w * &c2 * &pi.pi_hi * &nn < &w * &p16;
        let third = w < &pi.pi_lo * &nn;
        let derived = step1 && step2;
        let scaled_ok = vu2.scaled.verdict_at(n).is_some_and(|x| x.is_ok());
        let direct_ok = vu2.direct.verdict_at(n).is_some_and(|x| x.is_ok());
        if !derived || !scaled_ok || (third && !direct_ok) {
            bad.push(n);
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGt16 {
    pub report: PropertyReport,
    /// `h(n) - 16` as a reduced rational function.
    pub difference: RatFunc,
    pub numerator_certificate: PositivityCertificate,
    pub denominator_certificate: PositivityCertificate,
}

impl HGt16 {
    pub fn holds(&self) -> bool {
        self.report.holds()
            && self.numerator_certificate.is_certified()
            && self.denominator_certificate.is_certified()
    }
}

/// `h(n) > 16`, symbolically on `n >= 2` and pointwise on the range.
pub fn h_gt_16(n_lo: u64, n_hi: u64) -> Result<HGt16> {
    need_range(n_lo, n_hi, 2)?;
    let h = flf_bound();
    let difference = &h - &RatFunc::from_poly(PolyZ::from_i64(&[16]));
    let mut report = PropertyReport::new("h_above_16", "h", n_lo, n_hi);
    let sixteen = BigRat::from(16u32);
    for n in n_lo..=n_hi {
        let v = h.eval_i64(n as i64).expect("h has no pole for n >= 2");
        report.push(n, verdict(v > sixteen), DecisionPath::Exact);
    }
    Ok(HGt16 {
        report,
        numerator_certificate: positive_on_integer_tail(difference.num(), 2),
        denominator_certificate: positive_on_integer_tail(difference.den(), 2),
        difference,
    })
}

/// `16^n (n^3-n^2+1)^n > V_n (n^3-n^2)^n` at each `n`, decided through the
/// interval fast path with exact fallback.
pub fn check_vuh(flf: &mut Sequence, n_lo: u64, n_hi: u64, ladder: &PrecisionLadder) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 2)?;
    let mut report = PropertyReport::new("h_pow_above_v", flf.name().to_string(), n_lo, n_hi);
    for n in n_lo..=n_hi {
        let v = flf.term(n)?;
        if v <= 0u32 {
            return Err(Error::NonPositiveTerm {
                sequence: flf.name().to_string(),
                index: n,
            });
        }
        let cube = BigInt::from(n).pow(3) - BigInt::from(n).pow(2);
        let lhs = [(BigInt::from(16), n), (&cube + BigInt::from(1), n)];
        let rhs = [(v, 1), (cube, n)];
        let c = cmp_power_products(&lhs, &rhs, ladder)?;
        report.push(n, Verdict::from_ordering(c.ordering, true), c.path);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{pi_enclosure, rat};
    use crate::induction::PositivityMethod;

    #[test]
    fn central_binomials() {
        assert_eq!(binom_central(0), BigInt::from(1));
        assert_eq!(binom_central(5), BigInt::from(252));
        for n in [1u64, 7, 40, 123] {
            // C(2n, n) = C(2n-1, n-1) * 2n / n, with C(2n-1, n-1) = C(2n, n) / 2.
            let pascal = {
                let mut c = BigInt::from(1);
                for k in 1..n {
                    c = c * BigInt::from(2 * n - 1 - (k - 1)) / BigInt::from(k);
                }
                c
            };
            assert_eq!(binom_central(n), pascal * BigInt::from(2 * n) / BigInt::from(n));
        }
    }

    #[test]
    fn vu1_small_cases() {
        let mut s = Sequence::flf();
        let r = check_vu1(&mut s, 1, 300).unwrap();
        assert!(r.holds_strictly());
        assert_eq!(s.term(1).unwrap(), BigInt::from(8));
        assert!(BigInt::from(144) < BigInt::from(5 * 36));
    }

    #[test]
    fn sasvari() {
        let s = sasvari_exponent_sign(1, 1000).unwrap();
        assert!(s.report.holds_strictly());
        assert!(s.certificate.is_certified());
        assert_eq!(
            s.certificate.method,
            PositivityMethod::ShiftedCoefficients {
                shifted: PolyZ::from_i64(&[23, 48, 24])
            }
        );
        assert_eq!(rat(-1, 8) + rat(1, 192), rat(-23, 192));
    }

    #[test]
    fn nfu_uses_the_upper_end() {
        let pi = pi_enclosure(64);
        assert!(check_nfu(1, 300, &pi).unwrap().holds_strictly());
        // With [3, 4] the upper end gives 4 * 1 * 4 = 16, not below 16; the
        // lower end would have passed, which would be unsound.
        let loose = PiEnclosure {
            pi_lo: rat(3, 1),
            pi_hi: rat(4, 1),
            precision_bits: 1,
        };
        let r = check_nfu(1, 1, &loose).unwrap();
        assert_eq!(r.first_failure, Some(1));
        assert!(rat(3, 1) * rat(4, 1) < rat(16, 1));
    }

    #[test]
    fn vu2_chain() {
        let pi = pi_enclosure(64);
        let mut s = Sequence::flf();
        let vu2 = check_vu2(&mut s, 1, 300, &pi).unwrap();
        assert!(vu2.holds());
        let vu1 = check_vu1(&mut s, 1, 300).unwrap();
        let nfu = check_nfu(1, 300, &pi).unwrap();
        assert!(chain_implication(&mut s, &vu1, &nfu, &vu2, &pi).unwrap().is_empty());
    }

    #[test]
    fn h_above_sixteen() {
        let h = h_gt_16(2, 300).unwrap();
        assert!(h.holds());
        assert_eq!(h.difference.num(), &PolyZ::from_i64(&[16]));
        assert_eq!(h.difference.den(), &PolyZ::from_i64(&[0, 0, -1, 1]));
        assert_eq!(flf_bound().eval_i64(2).unwrap(), rat(20, 1));
    }

    #[test]
    fn vuh_small_and_dual_path() {
        let mut s = Sequence::flf();
        assert!(check_vuh(&mut s, 10, 120, &PrecisionLadder::default()).unwrap().holds_strictly());
        let h2 = flf_bound().eval_i64(2).unwrap();
        assert!(&h2 * &h2 > BigRat::from(144u32));
        let fast = check_vuh(&mut s, 2, 40, &PrecisionLadder::default()).unwrap();
        let exact = check_vuh(&mut s, 2, 40, &PrecisionLadder::exact_only()).unwrap();
        let a: Vec<_> = fast.entries.iter().map(|e| e.verdict).collect();
        let b: Vec<_> = exact.entries.iter().map(|e| e.verdict).collect();
        assert_eq!(a, b);
    }
}
