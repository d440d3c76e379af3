use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use malachite::num::arithmetic::traits::ShrRound;
use malachite::rounding_modes::RoundingMode;

use super::fixed::atan_inv_fixed;
use super::{BigInt, BigRat};

pub const DEFAULT_PI_PRECISION: u32 = 64;

/// Certified bracket `pi_lo < pi < pi_hi`, the cell of the grid
/// `2^-precision_bits` containing pi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiEnclosure {
    pub pi_lo: BigRat,
    pub pi_hi: BigRat,
    pub precision_bits: u32,
}

impl PiEnclosure {
    pub fn width(&self) -> BigRat {
        &self.pi_hi - &self.pi_lo
    }

    pub fn contains(&self, other: &PiEnclosure) -> bool {
        self.pi_lo <= other.pi_lo && other.pi_hi <= self.pi_hi
    }
}

fn cache() -> &'static Mutex<HashMap<u32, PiEnclosure>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, PiEnclosure>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)` with alternating
/// series remainders, rounded outward onto the `2^-precision_bits` grid.
fn compute(precision_bits: u32) -> PiEnclosure {
    let p = precision_bits as u64;
    let mut guard = 32u64;
    loop {
        let bits = p + guard;
        let a = atan_inv_fixed(5, bits).scale(16);
        let b = atan_inv_fixed(239, bits).scale(4);
        let lo = &a.lo - &b.hi;
        let hi = &a.hi - &b.lo;
        let cell_lo = lo.shr_round(guard, RoundingMode::Floor).0;
        let cell_hi = hi.shr_round(guard, RoundingMode::Floor).0;
        // pi is irrational, so it is never a grid point.
        if cell_lo == cell_hi {
            let pi_lo = BigRat::from(cell_lo.clone()) >> p;
            let pi_hi = BigRat::from(cell_lo + BigInt::from(1)) >> p;
            return PiEnclosure {
                pi_lo,
                pi_hi,
                precision_bits,
            };
        }
        guard *= 2;
    }
}

/// Certified enclosure of pi with width `2^-precision_bits`, cached per
/// precision. Concurrent first use may compute the value more than once; the
/// result is deterministic, so the race is benign.
pub fn pi_enclosure(precision_bits: u32) -> PiEnclosure {
    let precision_bits = precision_bits.max(8);
    if let Some(hit) = cache().lock().unwrap().get(&precision_bits) {
        return hit.clone();
    }
    let fresh = compute(precision_bits);
    cache()
        .lock()
        .unwrap()
        .entry(precision_bits)
        .or_insert(fresh)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use malachite::num::basic::traits::One;

    /// Independent oracle: arctan series in exact rationals with the
    /// alternating remainder, using Machin's formula.
    fn machin_exact(terms: u64) -> (BigRat, BigRat) {
        fn atan_inv(m: i64, terms: u64) -> (BigRat, BigRat) {
            let mut sum = BigRat::from(0u32);
            let mut sign = 1i64;
            for j in 0..terms {
                let k = 2 * j + 1;
                let t = BigRat::ONE
                    / (BigRat::from(k) * crate::exactnum::pow(&rat(m, 1), k));
                if sign > 0 {
                    sum += t;
                } else {
                    sum -= t;
                }
                sign = -sign;
            }
            let k = 2 * terms + 1;
            let next = BigRat::ONE / (BigRat::from(k) * crate::exactnum::pow(&rat(m, 1), k));
            (&sum - &next, sum + next)
        }
        let (a_lo, a_hi) = atan_inv(5, terms);
        let (b_lo, b_hi) = atan_inv(239, terms);
        (
            BigRat::from(16u32) * a_lo - BigRat::from(4u32) * b_hi,
            BigRat::from(16u32) * a_hi - BigRat::from(4u32) * b_lo,
        )
    }

    #[test]
    fn classical_bounds_bracket() {
        let e = pi_enclosure(16);
        assert!(rat(223, 71) < e.pi_lo);
        assert!(e.pi_hi < rat(22, 7));
    }

    #[test]
    fn thirty_two_bits_meets_decimal_bracket() {
        let e = pi_enclosure(32);
        assert!(e.pi_lo > rat(314_159_265, 100_000_000));
        assert!(e.pi_hi < rat(314_159_266, 100_000_000));
        let (lo, hi) = machin_exact(30);
        assert!(e.pi_lo < hi && lo < e.pi_hi);
        assert!(e.width() <= BigRat::ONE >> 29u64);
    }

    #[test]
    fn refinement_is_nested() {
        let coarse = pi_enclosure(32);
        let fine = pi_enclosure(64);
        assert!(coarse.contains(&fine));
        let (lo, hi) = machin_exact(40);
        assert!(fine.pi_lo < lo && hi < fine.pi_hi);
    }

    #[test]
    fn cache_returns_identical_values() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| pi_enclosure(200)))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(results[0], compute(200));
    }
}
