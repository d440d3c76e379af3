//! Ordering of products of integer powers.
//!
//! `Π b_i^e_i` versus `Π c_j^f_j` is first decided by summing
//! `e_i * ln(b_i)` over canonical log enclosures on a ladder of precisions;
//! only when every rung leaves the two sums overlapping is the comparison
//! settled by multiplying the products out.

use std::cmp::Ordering;
use std::fmt;

use malachite::num::arithmetic::traits::{Gcd, Pow, Sign};
use malachite::num::basic::traits::One;
use serde::{Deserialize, Serialize};

use super::log::log_enclosure;
use super::{BigInt, BigRat, Natural};
use crate::{Error, Result};

/// Strictly increasing list of precisions (in bits) tried before falling back
/// to exact multiplication. An empty ladder forces the exact path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionLadder(Vec<u32>);

impl PrecisionLadder {
    pub const DEFAULT: [u32; 3] = [64, 256, 1024];

    pub fn new(rungs: Vec<u32>) -> Result<Self> {
        if rungs.iter().any(|&p| p < 8) {
            return Err(Error::InvalidLadder(
                "every precision must be at least 8 bits".into(),
            ));
        }
        if rungs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLadder(format!(
                "precisions must be strictly increasing: {rungs:?}"
            )));
        }
        Ok(PrecisionLadder(rungs))
    }

    pub fn exact_only() -> Self {
        PrecisionLadder(Vec::new())
    }

    pub fn rungs(&self) -> &[u32] {
        &self.0
    }
}

impl Default for PrecisionLadder {
    fn default() -> Self {
        PrecisionLadder(Self::DEFAULT.to_vec())
    }
}

impl fmt::Display for PrecisionLadder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// How a comparison was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionPath {
    Interval(u32),
    Exact,
}

impl fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionPath::Interval(bits) => write!(f, "interval({bits})"),
            DecisionPath::Exact => f.write_str("exact"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerComparison {
    pub ordering: Ordering,
    pub path: DecisionPath,
}

fn check_bases(side: &[(BigInt, u64)]) -> Result<()> {
    for (base, _) in side {
        if base.sign() != Ordering::Greater {
            return Err(Error::NonPositiveBase(base.to_string()));
        }
    }
    Ok(())
}

/// Sum of `e * ln(b)` as an integer interval on the grid `2^-bits`.
fn log_sum(side: &[(BigInt, u64)], bits: u32) -> (BigInt, BigInt) {
    let mut lo = BigInt::from(0);
    let mut hi = BigInt::from(0);
    for (base, exp) in side {
        if *exp == 0 || *base == 1 {
            continue;
        }
        let e = log_enclosure(&BigRat::from(base.clone()), bits)
            .expect("bases were checked positive");
        let (l, h) = e.grid_mantissas();
        let k = BigInt::from(*exp);
        lo += l * &k;
        hi += h * &k;
    }
    (lo, hi)
}

fn interval_verdict(lhs: &[(BigInt, u64)], rhs: &[(BigInt, u64)], bits: u32) -> Option<Ordering> {
    let (l_lo, l_hi) = log_sum(lhs, bits);
    let (r_lo, r_hi) = log_sum(rhs, bits);
    if l_lo > r_hi {
        Some(Ordering::Greater)
    } else if l_hi < r_lo {
        Some(Ordering::Less)
    } else {
        None
    }
}

fn product(side: &[(BigInt, u64)], root: u64) -> Natural {
    side.iter()
        .filter(|(_, e)| *e > 0)
        .fold(Natural::ONE, |acc, (b, e)| {
            let b = Natural::try_from(b.clone()).expect("bases were checked positive");
            acc * b.pow(e / root)
        })
}

/// Exact ordering by full multiplication. A common factor `g` of all
/// exponents is divided out first: `X^g` vs `Y^g` orders like `X` vs `Y`.
pub(crate) fn exact_verdict(lhs: &[(BigInt, u64)], rhs: &[(BigInt, u64)]) -> Ordering {
    let g = lhs
        .iter()
        .chain(rhs)
        .map(|(_, e)| *e)
        .filter(|&e| e > 0)
        .fold(0u64, |acc, e| acc.gcd(e))
        .max(1);
    product(lhs, g).cmp(&product(rhs, g))
}

/// Exact ordering of `Π lhs_i.0^lhs_i.1` against `Π rhs_j.0^rhs_j.1`.
///
/// The returned ordering does not depend on which path decided it: the
/// interval path only answers when the enclosures are disjoint, and equality
/// is only ever reported by the exact path.
pub fn cmp_power_products(
    lhs: &[(BigInt, u64)],
    rhs: &[(BigInt, u64)],
    ladder: &PrecisionLadder,
) -> Result<PowerComparison> {
    check_bases(lhs)?;
    check_bases(rhs)?;
    for &bits in ladder.rungs() {
        if let Some(ordering) = interval_verdict(lhs, rhs, bits) {
            return Ok(PowerComparison {
                ordering,
                path: DecisionPath::Interval(bits),
            });
        }
    }
    Ok(PowerComparison {
        ordering: exact_verdict(lhs, rhs),
        path: DecisionPath::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn side(items: &[(i64, u64)]) -> Vec<(BigInt, u64)> {
        items.iter().map(|&(b, e)| (BigInt::from(b), e)).collect()
    }

    fn cmp(l: &[(i64, u64)], r: &[(i64, u64)]) -> PowerComparison {
        cmp_power_products(&side(l), &side(r), &PrecisionLadder::default()).unwrap()
    }

    #[test]
    fn equal_powers_need_exact_path() {
        let c = cmp(&[(2, 3)], &[(8, 1)]);
        assert_eq!(c.ordering, Ordering::Equal);
        assert_eq!(c.path, DecisionPath::Exact);
        let d = cmp(&[(10, 100)], &[(10, 100)]);
        assert_eq!(d.ordering, Ordering::Equal);
        assert_eq!(d.path, DecisionPath::Exact);
    }

    #[test]
    fn clf_root_concavity_at_two() {
        // 80^6 = 262144000000 against 8^6 * 896^2 = 210453397504.
        assert_eq!(80i64.pow(6), 262_144_000_000);
        assert_eq!(8i64.pow(6) * 896 * 896, 210_453_397_504);
        let c = cmp(&[(80, 6)], &[(8, 6), (896, 2)]);
        assert_eq!(c.ordering, Ordering::Greater);
        assert!(matches!(c.path, DecisionPath::Interval(_)));
    }

    #[test]
    fn empty_products_are_one() {
        assert_eq!(cmp(&[], &[]).ordering, Ordering::Equal);
        assert_eq!(cmp(&[(7, 0)], &[(1, 50)]).ordering, Ordering::Equal);
        assert_eq!(cmp(&[(2, 1)], &[]).ordering, Ordering::Greater);
    }

    #[test]
    fn rejects_nonpositive_bases() {
        let ladder = PrecisionLadder::default();
        assert!(cmp_power_products(&side(&[(0, 1)]), &side(&[(1, 1)]), &ladder).is_err());
        assert!(cmp_power_products(&side(&[(1, 1)]), &side(&[(-2, 2)]), &ladder).is_err());
    }

    #[test]
    fn ladder_validation() {
        assert!(PrecisionLadder::new(vec![64, 64]).is_err());
        assert!(PrecisionLadder::new(vec![256, 64]).is_err());
        assert!(PrecisionLadder::new(vec![4]).is_err());
        assert_eq!(PrecisionLadder::default().to_string(), "64,256,1024");
    }

    #[test]
    fn near_ties_fall_through_the_ladder() {
        // 2^2000 + 1 vs 2^2000: log difference about 2^-2000, below every rung.
        let big = (BigInt::from(1) << 2000u64) + BigInt::from(1);
        let l = vec![(big, 1)];
        let r = vec![(BigInt::from(2), 2000)];
        let c = cmp_power_products(&l, &r, &PrecisionLadder::default()).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
        assert_eq!(c.path, DecisionPath::Exact);
    }

    proptest! {
        #[test]
        fn interval_agrees_with_exact(
            l in proptest::collection::vec((1i64..500, 0u64..40), 0..4),
            r in proptest::collection::vec((1i64..500, 0u64..40), 0..4),
        ) {
            let (l, r) = (side(&l), side(&r));
            let fast = cmp_power_products(&l, &r, &PrecisionLadder::default()).unwrap();
            let slow = cmp_power_products(&l, &r, &PrecisionLadder::exact_only()).unwrap();
            prop_assert_eq!(fast.ordering, slow.ordering);
            prop_assert_eq!(slow.path, DecisionPath::Exact);
        }

        #[test]
        fn antisymmetric(
            l in proptest::collection::vec((1i64..100, 0u64..20), 0..3),
            r in proptest::collection::vec((1i64..100, 0u64..20), 0..3),
        ) {
            let (l, r) = (side(&l), side(&r));
            let ladder = PrecisionLadder::default();
            let a = cmp_power_products(&l, &r, &ladder).unwrap().ordering;
            let b = cmp_power_products(&r, &l, &ladder).unwrap().ordering;
            prop_assert_eq!(a, b.reverse());
        }
    }
}
