//! Exact numbers and rigorous enclosures.
//!
//! `BigInt` and `BigRat` are the arbitrary-precision integer and rational
//! types used throughout the crate. Rationals are always kept in lowest terms
//! with a positive denominator.

mod fixed;
mod log;
mod pi;
mod power;

pub use log::{log_enclosure, Dyadic, LogInterval};
pub use pi::{pi_enclosure, PiEnclosure, DEFAULT_PI_PRECISION};
pub use power::{cmp_power_products, DecisionPath, PowerComparison, PrecisionLadder};

pub use malachite::Integer as BigInt;
pub use malachite::Natural;
pub use malachite::Rational as BigRat;

use malachite::num::arithmetic::traits::Pow;
use malachite::num::basic::traits::One;

/// Exact `x^k`. `0^0` is taken to be 1 so that empty products stay uniform.
pub fn pow(x: &BigRat, k: u64) -> BigRat {
    if k == 0 {
        return BigRat::ONE;
    }
    x.pow(k)
}

/// Reduced rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRat {
    assert!(den != 0, "zero denominator");
    BigRat::from_signeds(num, den)
}

/// Rational with the given integer numerator and denominator, reduced.
pub fn rat_of(num: BigInt, den: BigInt) -> BigRat {
    BigRat::from_integers(num, den)
}

/// Numerator of a reduced rational, carrying the sign.
pub fn numer(x: &BigRat) -> BigInt {
    let n = BigInt::from(x.to_numerator());
    if *x < 0u32 {
        -n
    } else {
        n
    }
}

/// Denominator of a reduced rational (always positive).
pub fn denom(x: &BigRat) -> BigInt {
    BigInt::from(x.to_denominator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_power() {
        assert_eq!(pow(&rat(3, 2), 2), rat(9, 4));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(pow(&rat(7, 3), 0), BigRat::ONE);
        assert_eq!(pow(&rat(0, 1), 0), BigRat::ONE);
        assert_eq!(pow(&rat(0, 1), 3), rat(0, 1));
    }

    #[test]
    fn squared_ratio_matches_schoolbook() {
        // 2152^2 = 4631104, 169^2 = 28561.
        let expected = BigRat::from_integers(
            BigInt::from(2152 * 2152),
            BigInt::from(169 * 169),
        );
        assert_eq!(expected, rat(4_631_104, 28_561));
        assert_eq!(pow(&rat(2152, 169), 2), expected);
    }

    #[test]
    fn numerator_keeps_sign() {
        assert_eq!(numer(&rat(-6, 4)), BigInt::from(-3));
        assert_eq!(denom(&rat(-6, 4)), BigInt::from(2));
    }

    proptest! {
        #[test]
        fn power_exponents_add(num in -50i64..50, den in 1i64..50, a in 0u64..12, b in 0u64..12) {
            let x = rat(num, den);
            prop_assert_eq!(pow(&x, a + b), pow(&x, a) * pow(&x, b));
        }
    }
}
