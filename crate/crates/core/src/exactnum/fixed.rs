//! Fixed-point series with explicit error accounting.
//!
//! All quantities are integers in units of `2^-bits` ("ulps"). Every routine
//! returns an integer interval `[lo, hi]` guaranteed to contain the exact
//! value scaled by `2^bits`.

use malachite::num::arithmetic::traits::{DivRound, ShrRound};
use malachite::num::logic::traits::SignificantBits;
use malachite::rounding_modes::RoundingMode;

use super::{BigInt, Natural};

/// Integer interval in ulps of `2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Fixed {
    pub lo: BigInt,
    pub hi: BigInt,
    pub bits: u64,
}

impl Fixed {
    /// Multiplies by a signed integer, keeping the enclosure ordered.
    pub fn scale(&self, k: i64) -> Fixed {
        let k = BigInt::from(k);
        let (a, b) = (&self.lo * &k, &self.hi * &k);
        let (lo, hi) = if k >= 0 { (a, b) } else { (b, a) };
        Fixed {
            lo,
            hi,
            bits: self.bits,
        }
    }

    /// Rescales to fewer fractional bits, rounding outward.
    pub fn coarsen(&self, bits: u64) -> Fixed {
        assert!(bits <= self.bits);
        let s = self.bits - bits;
        Fixed {
            lo: (&self.lo).shr_round(s, RoundingMode::Floor).0,
            hi: (&self.hi).shr_round(s, RoundingMode::Ceiling).0,
            bits,
        }
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        assert_eq!(self.bits, other.bits);
        Fixed {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            bits: self.bits,
        }
    }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_round(b, RoundingMode::Floor).0
}

/// Enclosure of `atanh(num/den) * 2^bits` for `|num/den| <= 0.34`.
///
/// Uses the odd power series with truncated fixed-point powers. With
/// `t^2 < 1/8` each truncated power is within 3 ulps of the truth and each
/// quotient by `2j+1` within 4 ulps; `M` terms are kept so that the first
/// omitted power is below one ulp, bounding the tail by 2 ulps.
pub(crate) fn atanh_fixed(num: &BigInt, den: &Natural, bits: u64) -> Fixed {
    let den_i = BigInt::from(den.clone());
    let abs_num = BigInt::from(num.unsigned_abs_ref().clone());
    assert!(
        &abs_num * BigInt::from(100) <= &den_i * BigInt::from(34),
        "atanh argument outside the reduced range"
    );
    let one = BigInt::from(1) << bits;
    let terms = bits / 3 + 2;

    let mut power = floor_div(&(&abs_num << bits), &den_i);
    let square = floor_div(&((&abs_num * &abs_num) << bits), &(&den_i * &den_i));
    let mut sum = BigInt::from(0);
    for j in 0..terms {
        sum += floor_div(&power, &BigInt::from(2 * j + 1));
        power = (&power * &square).shr_round(bits, RoundingMode::Floor).0;
        if power == 0 {
            break;
        }
    }
    debug_assert!(power <= one);
    let slack = BigInt::from(4 * terms + 2);
    if *num >= 0 {
        Fixed {
            hi: &sum + slack,
            lo: sum,
            bits,
        }
    } else {
        Fixed {
            lo: -(&sum + slack),
            hi: -sum,
            bits,
        }
    }
}

/// Enclosure of `atan(1/m) * 2^bits` for an integer `m >= 2`.
///
/// The alternating series is evaluated with exactly floored terms
/// `floor(2^bits / ((2j+1) m^(2j+1)))`; the remainder after `M` terms has the
/// sign of the next term and magnitude below it.
pub(crate) fn atan_inv_fixed(m: u64, bits: u64) -> Fixed {
    assert!(m >= 2);
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut q = floor_div(&(BigInt::from(1) << bits), &BigInt::from(m));
    let mut sum = BigInt::from(0);
    let mut count: u64 = 0;
    let mut j: u64 = 0;
    while q != 0 {
        let term = floor_div(&q, &BigInt::from(2 * j + 1));
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        count += 1;
        // floor(floor(x / a) / b) == floor(x / (a b)) for positive integers.
        q = floor_div(&q, &m2);
        j += 1;
    }
    // Each floored term is off by less than one ulp; the tail is below one ulp
    // because the next unfloored term is below one.
    let slack = BigInt::from(count + 1);
    Fixed {
        lo: &sum - &slack,
        hi: &sum + &slack,
        bits,
    }
}

/// Enclosure of `ln 2 * 2^bits` via `ln 2 = 2 atanh(1/3)`.
pub(crate) fn ln2_fixed(bits: u64) -> Fixed {
    atanh_fixed(&BigInt::from(1), &Natural::from(3u32), bits).scale(2)
}

pub(crate) fn bit_length(x: &Natural) -> u64 {
    x.significant_bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(f: &Fixed, value: f64) -> bool {
        let scale = (f.bits as f64).exp2();
        let lo = f.lo.to_string().parse::<f64>().unwrap() / scale;
        let hi = f.hi.to_string().parse::<f64>().unwrap() / scale;
        lo <= value + 1e-15 && value - 1e-15 <= hi
    }

    #[test]
    fn ln2_brackets_reference() {
        let f = ln2_fixed(60);
        assert!(contains(&f, std::f64::consts::LN_2));
        assert!(&f.hi - &f.lo < 200);
    }

    #[test]
    fn atanh_negative_argument_is_mirrored() {
        let pos = atanh_fixed(&BigInt::from(1), &Natural::from(4u32), 50);
        let neg = atanh_fixed(&BigInt::from(-1), &Natural::from(4u32), 50);
        assert_eq!(neg.lo, -pos.hi.clone());
        assert_eq!(neg.hi, -pos.lo.clone());
        assert!(contains(&pos, 0.25f64.atanh()));
    }

    #[test]
    fn atan_series_brackets_reference() {
        let f = atan_inv_fixed(5, 60);
        assert!(contains(&f, 0.2f64.atan()));
        let g = atan_inv_fixed(239, 60);
        assert!(contains(&g, (1.0f64 / 239.0).atan()));
    }

    #[test]
    fn coarsen_rounds_outward() {
        let f = Fixed {
            lo: BigInt::from(-5),
            hi: BigInt::from(5),
            bits: 2,
        };
        let c = f.coarsen(0);
        assert_eq!(c.lo, BigInt::from(-2));
        assert_eq!(c.hi, BigInt::from(2));
    }
}
