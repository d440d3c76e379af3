use std::cmp::Ordering;
use std::fmt;

use malachite::num::arithmetic::traits::{DivRound, ShrRound, Sign};
use malachite::rounding_modes::RoundingMode;

use super::fixed::{atanh_fixed, bit_length, ln2_fixed, Fixed};
use super::{BigInt, BigRat, Natural};
use crate::{Error, Result};

/// The dyadic rational `mantissa * 2^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mantissa: BigInt,
    pub exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        Dyadic { mantissa, exponent }
    }

    pub fn to_rational(&self) -> BigRat {
        let m = BigRat::from(self.mantissa.clone());
        if self.exponent >= 0 {
            m << self.exponent as u64
        } else {
            m >> self.exponent.unsigned_abs()
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

/// Rigorous enclosure `lo <= ln(x) <= hi`.
///
/// Enclosures are canonical: at `precision_bits = p` the interval is the cell
/// of the grid `2^-p` containing `ln(x)`, so raising the precision always
/// yields a sub-interval. For `x = 1` the enclosure is the point `[0, 0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub precision_bits: u32,
}

impl LogInterval {
    pub fn width(&self) -> BigRat {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// True if `other` lies inside `self`.
    pub fn contains_interval(&self, other: &LogInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Lower and upper mantissas on the grid `2^-precision_bits`.
    pub(crate) fn grid_mantissas(&self) -> (&BigInt, &BigInt) {
        debug_assert_eq!(self.lo.exponent, -(self.precision_bits as i64));
        (&self.lo.mantissa, &self.hi.mantissa)
    }
}

/// Encloses `ln(num/den) * 2^bits` with absolute error a small multiple of
/// an ulp. `num, den > 0`.
fn ln_fixed(num: &Natural, den: &Natural, bits: u64) -> Fixed {
    // x = y * 2^k with y in (1/2, 2).
    let k = bit_length(num) as i64 - bit_length(den) as i64;
    let (top, bottom) = if k >= 0 {
        (
            BigInt::from(num.clone()) << bits,
            BigInt::from(den.clone()) << k as u64,
        )
    } else {
        (
            BigInt::from(num.clone()) << (bits + k.unsigned_abs()),
            BigInt::from(den.clone()),
        )
    };
    // y' = Y / 2^bits with 0 <= y - y' < 2^-bits, and y' > 0.49, so
    // 0 <= ln y - ln y' < 3 ulps.
    let y_fixed = top.div_round(&bottom, RoundingMode::Floor).0;
    let one = BigInt::from(1) << bits;
    let t_num = &y_fixed - &one;
    let t_den = Natural::try_from(&y_fixed + &one).expect("positive");
    let mut ln_y = atanh_fixed(&t_num, &t_den, bits).scale(2);
    ln_y.hi += BigInt::from(3);

    if k == 0 {
        return ln_y;
    }
    let extra = 64 - k.unsigned_abs().leading_zeros() as u64 + 1;
    let ln2 = ln2_fixed(bits + extra).scale(k).coarsen(bits);
    ln_y.add(&ln2)
}

/// Rigorous enclosure of `ln(x)` on the grid `2^-precision_bits`.
///
/// The returned width is exactly `2^-precision_bits` (zero for `x = 1`).
pub fn log_enclosure(x: &BigRat, precision_bits: u32) -> Result<LogInterval> {
    if x.sign() != Ordering::Greater {
        return Err(Error::NonPositiveLogArgument(x.to_string()));
    }
    if precision_bits == 0 {
        return Err(Error::InvalidLadder("precision must be positive".into()));
    }
    let p = precision_bits as i64;
    let (num, den) = x.to_numerator_and_denominator();
    if num == den {
        let zero = Dyadic::new(BigInt::from(0), -p);
        return Ok(LogInterval {
            lo: zero.clone(),
            hi: zero,
            precision_bits,
        });
    }
    // ln(x) is transcendental for rational x != 1, so it never sits on a grid
    // point and the loop below terminates once the working enclosure is
    // narrower than the distance to the nearest one.
    let mut guard: u64 = 32;
    loop {
        let bits = precision_bits as u64 + guard;
        let tight = ln_fixed(&num, &den, bits);
        let cell_lo = (&tight.lo).shr_round(guard, RoundingMode::Floor).0;
        let cell_hi = (&tight.hi).shr_round(guard, RoundingMode::Floor).0;
        if cell_lo == cell_hi {
            let lo = Dyadic::new(cell_lo.clone(), -p);
            let hi = Dyadic::new(cell_lo + BigInt::from(1), -p);
            return Ok(LogInterval {
                lo,
                hi,
                precision_bits,
            });
        }
        guard *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use malachite::num::basic::traits::One;
    use proptest::prelude::*;

    /// Taylor partial sums of exp at a rational point `q`, with the
    /// Lagrange remainder bound, giving `lo <= exp(q) <= hi`. Only valid for
    /// `|q| <= 4`, enough for the test inputs.
    fn exp_bounds(q: &BigRat) -> (BigRat, BigRat) {
        let mut term = BigRat::ONE;
        let mut sum = BigRat::ONE;
        let mut k = 1u64;
        while k < 80 {
            term = term * q / BigRat::from(k);
            sum += &term;
            k += 1;
        }
        // |remainder| <= e^4 * |q|^80 / 80! < 60 * 4^80 / 80!, far below 2^-200.
        let tiny = BigRat::ONE >> 200u64;
        (&sum - &tiny, sum + tiny)
    }

    #[test]
    fn log_of_one_is_exact_zero() {
        let e = log_enclosure(&rat(1, 1), 64).unwrap();
        assert!(e.is_exact());
        assert_eq!(e.lo.mantissa, BigInt::from(0));
    }

    #[test]
    fn log_of_sixteen_is_four_ln2() {
        let e = log_enclosure(&rat(16, 1), 64).unwrap();
        // Independent check: exp(lo) <= 16 <= exp(hi).
        let (_, exp_lo_hi) = exp_bounds(&e.lo.to_rational());
        let (exp_hi_lo, _) = exp_bounds(&e.hi.to_rational());
        assert!(exp_lo_hi <= rat(16, 1));
        assert!(exp_hi_lo >= rat(16, 1));
        // 4 ln 2 = 2.772588722239781...
        let approx = rat(2_772_588_722_239_781, 1_000_000_000_000_000);
        assert!(e.lo.to_rational() < approx + rat(1, 1_000_000_000_000_000));
        assert!(e.hi.to_rational() > rat(2_772_588_722_239_780, 1_000_000_000_000_000));
        assert!(e.width() <= BigRat::ONE >> 62u64);
    }

    #[test]
    fn log_of_quotient_is_difference_of_logs() {
        let q = log_enclosure(&rat(2152, 169), 80).unwrap();
        let a = log_enclosure(&rat(2152, 1), 80).unwrap();
        let b = log_enclosure(&rat(169, 1), 80).unwrap();
        let diff_lo = a.lo.to_rational() - b.hi.to_rational();
        let diff_hi = a.hi.to_rational() - b.lo.to_rational();
        assert!(q.lo.to_rational() <= diff_hi);
        assert!(diff_lo <= q.hi.to_rational());
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(log_enclosure(&rat(0, 1), 32).is_err());
        assert!(log_enclosure(&rat(-3, 2), 32).is_err());
    }

    #[test]
    fn huge_and_tiny_arguments() {
        let big = BigRat::from(BigInt::from(16) << 4000u64);
        let e = log_enclosure(&big, 64).unwrap();
        // ln(2^4004) = 4004 ln 2 = 2775.3037...
        assert!(e.lo.to_rational() < rat(27754, 10) && e.hi.to_rational() > rat(27753, 10));
        let small = BigRat::ONE / big;
        let f = log_enclosure(&small, 64).unwrap();
        assert_eq!(f.lo.mantissa, -e.hi.mantissa.clone());
    }

    proptest! {
        #[test]
        fn refinement_nests(num in 1u64..1_000_000, den in 1u64..1_000_000, p in 8u32..90) {
            let x = BigRat::from_integers(BigInt::from(num), BigInt::from(den));
            let coarse = log_enclosure(&x, p).unwrap();
            let fine = log_enclosure(&x, 2 * p).unwrap();
            prop_assert!(coarse.contains_interval(&fine));
            prop_assert!(coarse.width() <= BigRat::ONE >> (p as u64 - 2));
        }

        #[test]
        fn enclosure_brackets_f64_log(num in 1u64..1_000_000, den in 1u64..1_000_000) {
            let x = BigRat::from_integers(BigInt::from(num), BigInt::from(den));
            let e = log_enclosure(&x, 40).unwrap();
            let v = (num as f64 / den as f64).ln();
            let lo: f64 = e.lo.mantissa.to_string().parse::<f64>().unwrap() / 40f64.exp2();
            let hi: f64 = e.hi.mantissa.to_string().parse::<f64>().unwrap() / 40f64.exp2();
            prop_assert!(lo <= v + 1e-12 && v - 1e-12 <= hi);
        }
    }
}
