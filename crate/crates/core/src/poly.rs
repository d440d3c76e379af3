//! Dense univariate integer polynomials and reduced rational functions in `n`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use malachite::num::arithmetic::traits::{DivisibleBy, Gcd, Sign, UnsignedAbs};
use malachite::num::basic::traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{BigInt, BigRat, Natural};

/// Integer polynomial with coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyZ::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        PolyZ::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        PolyZ::from_i64(&[0, 1])
    }

    /// `n - root`.
    pub fn linear_root(root: i64) -> Self {
        PolyZ::from_i64(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or(BigInt::ZERO)
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::ZERO, |acc, c| acc * n + c)
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    pub fn scale(&self, k: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, k: u32) -> PolyZ {
        (0..k).fold(PolyZ::constant(BigInt::ONE), |acc, _| &acc * self)
    }

    /// Greatest common divisor of the coefficients (zero for the zero
    /// polynomial).
    pub fn content(&self) -> Natural {
        self.coeffs
            .iter()
            .fold(Natural::ZERO, |acc, c| acc.gcd(c.unsigned_abs()))
    }

    /// Divides every coefficient by `d`, which must divide them all.
    pub fn div_scalar_exact(&self, d: &BigInt) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!(c.divisible_by(d));
                    c / d
                })
                .collect(),
        )
    }

    /// Content removed and leading coefficient made positive.
    pub fn primitive_part(&self) -> PolyZ {
        if self.is_zero() {
            return PolyZ::zero();
        }
        let mut c = BigInt::from(self.content());
        if self.leading().unwrap().sign() == Ordering::Less {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// `q(x) = p(x + shift)`, expanded by Horner's scheme in `x + shift`.
    pub fn shift(&self, shift: &BigInt) -> PolyZ {
        let step = PolyZ::new(vec![shift.clone(), BigInt::ONE]);
        self.coeffs.iter().rev().fold(PolyZ::zero(), |acc, c| {
            &(&acc * &step) + &PolyZ::constant(c.clone())
        })
    }

    /// Integer `R >= 1` such that every complex root `z` satisfies
    /// `|z| <= R` (Cauchy's bound, rounded up). `None` for the zero
    /// polynomial.
    pub fn cauchy_bound(&self) -> Option<BigInt> {
        let lead = self.leading()?.unsigned_abs_ref().clone();
        let d = self.coeffs.len() - 1;
        let max_ratio = self.coeffs[..d]
            .iter()
            .map(|c| (c.unsigned_abs_ref() + &lead - Natural::ONE) / &lead)
            .max()
            .unwrap_or(Natural::ZERO);
        Some(BigInt::from(max_ratio) + BigInt::ONE)
    }

    /// Integer roots in `[lo, +inf)`, in increasing order.
    pub fn integer_roots_from(&self, lo: i64) -> Vec<i64> {
        let Some(bound) = self.cauchy_bound() else {
            return Vec::new();
        };
        let Ok(hi) = i64::try_from(&bound) else {
            // Coefficients this large never arise for the recurrences here.
            panic!("root bound {bound} exceeds the integer sweep range");
        };
        (lo.max(-hi)..=hi)
            .filter(|&n| self.eval_i64(n) == 0)
            .collect()
    }

    /// `q(x) = p(-x)`.
    pub fn reflect(&self) -> PolyZ {
        PolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    fn monomial_times(&self, c: &BigInt, k: usize) -> PolyZ {
        let mut coeffs = vec![BigInt::ZERO; k];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        PolyZ::new(coeffs)
    }

    /// Pseudo-remainder of `self` by `d` (a nonzero constant multiple of the
    /// remainder over the rationals).
    pub fn pseudo_rem(&self, d: &PolyZ) -> PolyZ {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_d = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lc_r = r.leading().unwrap().clone();
            r = &r.scale(&lc_d) - &d.monomial_times(&lc_r, dr - dd);
        }
        r
    }

    /// Exact quotient over the integers, or `None` if `d` does not divide
    /// `self` in `Z[x]`.
    pub fn div_exact(&self, d: &PolyZ) -> Option<PolyZ> {
        let dd = d.degree()?;
        let lc_d = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::ZERO; self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let lc_r = r.leading().unwrap();
            if !lc_r.divisible_by(lc_d) {
                return None;
            }
            let t = lc_r / lc_d;
            r = &r - &d.monomial_times(&t, dr - dd);
            q[dr - dd] = t;
        }
        Some(PolyZ::new(q))
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &PolyZ) -> PolyZ {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::ZERO;
        PolyZ::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        self + &(-rhs)
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let negative = c.sign() == Ordering::Less;
            let abs = c.unsigned_abs_ref();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = *abs == 1u32;
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("n")?,
                (1, false) => write!(f, "{abs}n")?,
                (_, true) => write!(f, "n^{i}")?,
                (_, false) => write!(f, "{abs}n^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for PolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::serde_dec::int_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for PolyZ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coeffs = crate::serde_dec::int_vec::deserialize(d)?;
        if coeffs.last().is_some_and(|c| *c == 0) {
            return Err(serde::de::Error::custom(
                "polynomial has a trailing zero coefficient",
            ));
        }
        Ok(PolyZ { coeffs })
    }
}

/// Rational function `num(n)/den(n)` in canonical form: no common polynomial
/// factor, no common integer content, and `den` has a positive leading
/// coefficient. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: PolyZ,
    den: PolyZ,
}

impl RatFunc {
    /// Reduces `num/den`; `None` if `den` is the zero polynomial.
    pub fn new(num: PolyZ, den: PolyZ) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc {
                num,
                den: PolyZ::constant(BigInt::ONE),
            });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = BigInt::from(num.content().gcd(den.content()));
        if den.leading().unwrap().sign() == Ordering::Less {
            c = -c;
        }
        Some(RatFunc {
            num: num.div_scalar_exact(&c),
            den: den.div_scalar_exact(&c),
        })
    }

    pub fn from_poly(p: PolyZ) -> Self {
        RatFunc::new(p, PolyZ::constant(BigInt::ONE)).unwrap()
    }

    pub fn constant(q: &BigRat) -> Self {
        let num = crate::exactnum::numer(q);
        let den = crate::exactnum::denom(q);
        RatFunc::new(PolyZ::constant(num), PolyZ::constant(den)).unwrap()
    }

    pub fn num(&self) -> &PolyZ {
        &self.num
    }

    pub fn den(&self) -> &PolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `n`, or `None` at a pole.
    pub fn eval(&self, n: &BigInt) -> Option<BigRat> {
        let d = self.den.eval(n);
        if d == 0 {
            return None;
        }
        Some(BigRat::from_integers(self.num.eval(n), d))
    }

    pub fn eval_i64(&self, n: i64) -> Option<BigRat> {
        self.eval(&BigInt::from(n))
    }

    /// `r(n + shift)`.
    pub fn shift(&self, shift: i64) -> RatFunc {
        let s = BigInt::from(shift);
        RatFunc::new(self.num.shift(&s), self.den.shift(&s)).unwrap()
    }

    pub fn recip(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Option<RatFunc> {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyZ::constant(BigInt::ONE) {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: PolyZ,
            den: PolyZ,
        }
        let raw = Raw::deserialize(d)?;
        let canon = RatFunc::new(raw.num.clone(), raw.den.clone())
            .ok_or_else(|| serde::de::Error::custom("zero denominator"))?;
        if canon.num != raw.num || canon.den != raw.den {
            return Err(serde::de::Error::custom(
                "rational function is not in canonical reduced form",
            ));
        }
        Ok(canon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> PolyZ {
        PolyZ::from_i64(c)
    }

    #[test]
    fn canonical_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn horner_values() {
        assert_eq!(p(&[1, 3, 3]).eval_i64(1), BigInt::from(7));
        assert_eq!(PolyZ::zero().eval_i64(12345), BigInt::from(0));
        assert_eq!(p(&[-4, -4, 1]).eval_i64(5), BigInt::from(1));
    }

    #[test]
    fn shift_expands_binomially() {
        assert_eq!(p(&[-4, -4, 1]).shift(&BigInt::from(5)), p(&[1, 6, 1]));
        assert_eq!(PolyZ::var().shift(&BigInt::from(0)), PolyZ::var());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[8, 24, 24]).to_string(), "24n^2 + 24n + 8");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-n^2 - 1");
        assert_eq!(p(&[0, 1]).to_string(), "n");
    }

    #[test]
    fn gcd_of_shared_factor() {
        // c1 and c2 of the FLF recurrence share the factor n.
        let c1 = p(&[0, 8, 40, 24]);
        let c2 = p(&[0, 1, 2, 1]);
        assert_eq!(c1.gcd(&c2), PolyZ::var());
    }

    #[test]
    fn ratfunc_reduces_to_canonical_form() {
        // 128(n-1)(n+1)^2 / (n (n+1)^2) = 128(n-1)/n
        let num = &p(&[-128, 128]) * &p(&[1, 2, 1]);
        let den = &p(&[0, 1]) * &p(&[1, 2, 1]);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.num(), &p(&[-128, 128]));
        assert_eq!(r.den(), &p(&[0, 1]));
        let neg = RatFunc::new(p(&[2]), p(&[-4])).unwrap();
        assert_eq!(neg.num(), &p(&[-1]));
        assert_eq!(neg.den(), &p(&[2]));
    }

    #[test]
    fn ratfunc_arithmetic_matches_pointwise() {
        let f = RatFunc::new(p(&[-16, 16]), p(&[0, 1])).unwrap();
        let g = f.shift(-1);
        assert_eq!(g.eval_i64(5).unwrap(), crate::exactnum::rat(12, 1));
        assert!(g.eval_i64(1).is_none());
        let h = &(&f - &g) * &f;
        for n in 2..20 {
            let want = (f.eval_i64(n).unwrap() - g.eval_i64(n).unwrap()) * f.eval_i64(n).unwrap();
            assert_eq!(h.eval_i64(n).unwrap(), want);
        }
    }

    #[test]
    fn serde_round_trip_rejects_noncanonical() {
        let r = RatFunc::new(p(&[-16, 16]), p(&[0, 1])).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: RatFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"num":["2"],"den":["4"]}"#;
        assert!(serde_json::from_str::<RatFunc>(bad).is_err());
    }

    proptest! {
        #[test]
        fn shift_round_trips(c in proptest::collection::vec(-20i64..20, 0..6), s in -10i64..10) {
            let q = p(&c);
            let there = q.shift(&BigInt::from(s));
            prop_assert_eq!(there.shift(&BigInt::from(-s)), q.clone());
            for x in -5i64..5 {
                prop_assert_eq!(there.eval_i64(x), q.eval_i64(x + s));
            }
        }

        #[test]
        fn exact_division_recovers_factor(a in proptest::collection::vec(-9i64..9, 1..4), b in proptest::collection::vec(-9i64..9, 1..4)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
