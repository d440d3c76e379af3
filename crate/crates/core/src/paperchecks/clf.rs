//! The `l_n < r_n` machinery for the CLF sequence.

use malachite::num::arithmetic::traits::Pow;

use crate::exactnum::{pow, rat, BigInt, BigRat, DecisionPath};
use crate::holonomic::Sequence;
use crate::logbehavior::{PropertyReport, Verdict};
use crate::{Error, Result};

fn need(name: &str, n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::InvalidIndex {
            sequence: name.to_string(),
            index: n,
            reason: format!("requires n >= {min}"),
        });
    }
    Ok(())
}

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

fn l_n(clf: &mut Sequence, n: u64) -> Result<BigRat> {
    let p = clf.term(n)?;
    Ok(BigRat::from_integers(p, BigInt::from(16u32).pow(n)))
}

fn r_n(n: u64) -> BigRat {
    let n = n as i64;
    let half = (n * (n - 1) / 2) as u64;
    pow(&rat((n - 2) * (n + 1), (n - 1) * n), half) * pow(&rat(n - 2, n - 1), n as u64)
}

/// `l_n = P_n / 16^n` and the right-hand side `r_n`, exactly.
pub fn ln_rn(clf: &mut Sequence, n: u64) -> Result<(BigRat, BigRat)> {
    need("r", n, 3)?;
    Ok((l_n(clf, n)?, r_n(n)))
}

/// Compares `r_n` with its product form
/// `(1 - 1/C(n,2))^C(n,2) * (1 - 1/(n-1))^(n-1) * (1 - 1/(n-1))`.
pub fn rn_product_identity(n: u64) -> Result<bool> {
    need("r", n, 3)?;
    let c = n * (n - 1) / 2;
    let one = BigRat::from(1u32);
    let a = &one - BigRat::from_integers(BigInt::from(1), BigInt::from(c));
    let b = &one - BigRat::from_integers(BigInt::from(1), BigInt::from(n - 1));
    let product = pow(&a, c) * pow(&b, n - 1) * b;
    Ok(product == r_n(n))
}

/// `(1 - 1/(n+1))^(n+1) > (1 - 1/n)^n` at each `n` in range.
pub fn euler_seq_increasing(n_lo: u64, n_hi: u64) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 1)?;
    let term = |n: u64| pow(&rat(n as i64 - 1, n as i64), n);
    let mut report = PropertyReport::new("euler_increasing", "(1-1/n)^n", n_lo, n_hi);
    let mut prev = term(n_lo);
    for n in n_lo..=n_hi {
        let next = term(n + 1);
        report.push(n, Verdict::from_ordering(next.cmp(&prev), true), DecisionPath::Exact);
        prev = next;
    }
    Ok(report)
}

/// `l_{n+1} < l_n` at each `n`, cross-checked against `P_{n+1}/P_n < 16`.
pub fn claim_ln_decreasing(clf: &mut Sequence, n_lo: u64, n_hi: u64) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 5)?;
    let mut report = PropertyReport::new("l_decreasing", clf.name().to_string(), n_lo, n_hi);
    let sixteen = BigRat::from(16u32);
    let mut prev = l_n(clf, n_lo)?;
    for n in n_lo..=n_hi {
        let next = l_n(clf, n + 1)?;
        let decreasing = next < prev;
        if decreasing != (clf.ratio(n + 1)? < sixteen) {
            return Err(Error::CrossCheckFailed(format!(
                "l_{{n+1}} < l_n disagrees with the ratio bound at n = {n}"
            )));
        }
        report.push(n, Verdict::from_ordering(prev.cmp(&next), true), DecisionPath::Exact);
        prev = next;
    }
    Ok(report)
}

/// `r_{n+1} > r_n` at each `n`.
pub fn claim_rn_increasing(n_lo: u64, n_hi: u64) -> Result<PropertyReport> {
    need_range(n_lo, n_hi, 5)?;
    let mut report = PropertyReport::new("r_increasing", "r", n_lo, n_hi);
    let mut prev = r_n(n_lo);
    for n in n_lo..=n_hi {
        let next = r_n(n + 1);
        report.push(n, Verdict::from_ordering(next.cmp(&prev), true), DecisionPath::Exact);
        prev = next;
    }
    Ok(report)
}

/// Smallest `n` in `[n_lo, n_hi]` with `l_n < r_n`.
pub fn crossover(clf: &mut Sequence, n_lo: u64, n_hi: u64) -> Result<Option<u64>> {
    need_range(n_lo, n_hi, 3)?;
    for n in n_lo..=n_hi {
        let (l, r) = ln_rn(clf, n)?;
        if l < r {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l3_and_r3() {
        let (l, r) = ln_rn(&mut Sequence::clf(), 3).unwrap();
        assert_eq!(l, rat(7, 32));
        assert_eq!(r, rat(1, 27));
        assert!(l > r);
        assert!(ln_rn(&mut Sequence::clf(), 2).is_err());
    }

    #[test]
    fn l7_below_r7() {
        let (l, r) = ln_rn(&mut Sequence::clf(), 7).unwrap();
        assert!(l < r);
    }

    #[test]
    fn l_ratio_identity() {
        let mut s = Sequence::clf();
        for n in [4u64, 9, 30, 77] {
            let (a, _) = ln_rn(&mut s, n).unwrap();
            let (b, _) = ln_rn(&mut s, n - 1).unwrap();
            assert_eq!(a / b, s.ratio(n).unwrap() / BigRat::from(16u32));
        }
    }

    #[test]
    fn product_identity() {
        for n in [3, 5, 20] {
            assert!(rn_product_identity(n).unwrap());
        }
        assert!(rn_product_identity(2).is_err());
    }

    #[test]
    fn euler_sequence() {
        let r = euler_seq_increasing(2, 100).unwrap();
        assert!(r.holds_strictly());
        assert!(pow(&rat(2, 3), 3) > pow(&rat(1, 2), 2));
        assert_eq!(pow(&rat(2, 3), 3), rat(8, 27));
        assert!(euler_seq_increasing(1, 1).unwrap().holds_strictly());
    }

    #[test]
    fn claims_and_crossover() {
        let mut s = Sequence::clf();
        assert!(claim_ln_decreasing(&mut s, 5, 100).unwrap().holds_strictly());
        assert!(claim_rn_increasing(5, 100).unwrap().holds_strictly());
        assert_eq!(crossover(&mut s, 5, 100).unwrap(), Some(7));
        assert!(claim_ln_decreasing(&mut s, 4, 10).is_err());
    }
}
