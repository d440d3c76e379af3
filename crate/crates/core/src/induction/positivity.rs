//! Tail positivity of integer polynomials: `p(n) > 0` for every integer
//! `n >= N`.

use std::cmp::Ordering;

use malachite::num::arithmetic::traits::Sign;
use serde::{Deserialize, Serialize};

use crate::exactnum::BigInt;
use crate::poly::PolyZ;
use crate::{Error, Result};

/// Longest integer sweep the root-bound strategy will attempt.
pub const MAX_SWEEP: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPoint {
    #[serde(with = "crate::serde_dec::int")]
    pub n: BigInt,
    #[serde(with = "crate::serde_dec::int")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "data", rename_all = "snake_case")]
pub enum PositivityMethod {
    /// Coefficients of `p(x + N)`; all nonnegative with positive constant
    /// term proves `p > 0` on the real half-line `x >= N`.
    ShiftedCoefficients { shifted: PolyZ },
    /// Every root lies in `|z| <= bound` and the leading coefficient is
    /// positive, so only the integers in `[N, bound]` need evaluating.
    RootBoundSweep {
        #[serde(with = "crate::serde_dec::int")]
        bound: BigInt,
        values: Vec<SweepPoint>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityVerdict {
    Certified,
    Fails {
        #[serde(with = "crate::serde_dec::int")]
        witness: BigInt,
        #[serde(with = "crate::serde_dec::int")]
        value: BigInt,
    },
    /// The root bound is too far from the tail start to sweep.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityCertificate {
    pub polynomial: PolyZ,
    #[serde(with = "crate::serde_dec::int")]
    pub tail_start: BigInt,
    #[serde(flatten)]
    pub method: PositivityMethod,
    pub verdict: PositivityVerdict,
}

impl PositivityCertificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == PositivityVerdict::Certified
    }

    /// Re-derives the verdict from the certificate's own fields.
    pub fn recheck(&self) -> Result<()> {
        recheck(self)
    }
}

/// `q(x) = p(x + N)`.
pub fn poly_shift(p: &PolyZ, n: i64) -> PolyZ {
    p.shift(&BigInt::from(n))
}

fn positive(x: &BigInt) -> bool {
    x.sign() == Ordering::Greater
}

/// Certifies `p(n) > 0` for all integers `n >= tail_start`, or finds the
/// smallest failing integer.
pub fn positive_on_integer_tail(p: &PolyZ, tail_start: i64) -> PositivityCertificate {
    let start = BigInt::from(tail_start);
    let shifted = p.shift(&start);
    let cert = |method, verdict| PositivityCertificate {
        polynomial: p.clone(),
        tail_start: start.clone(),
        method,
        verdict,
    };
    if p.is_zero() {
        return cert(
            PositivityMethod::ShiftedCoefficients { shifted },
            PositivityVerdict::Fails {
                witness: start.clone(),
                value: BigInt::from(0),
            },
        );
    }
    if positive(&shifted.constant_term())
        && shifted.coeffs().iter().all(|c| c.sign() != Ordering::Less)
    {
        return cert(
            PositivityMethod::ShiftedCoefficients { shifted },
            PositivityVerdict::Certified,
        );
    }

    let bound = p.cauchy_bound().expect("nonzero polynomial");
    let leading_positive = positive(p.leading().unwrap());
    // With a positive leading coefficient p > 0 beyond the bound; otherwise
    // p(bound) < 0 is itself a witness, so the sweep always terminates.
    let last = if bound > start { bound.clone() } else { start.clone() };
    let span = &last - &start;
    if span > BigInt::from(MAX_SWEEP) {
        let cap = &start + BigInt::from(MAX_SWEEP);
        let mut n = start.clone();
        while n <= cap {
            let value = p.eval(&n);
            if !positive(&value) {
                return cert(
                    PositivityMethod::RootBoundSweep { bound, values: Vec::new() },
                    PositivityVerdict::Fails { witness: n, value },
                );
            }
            n += BigInt::from(1);
        }
        return cert(
            PositivityMethod::RootBoundSweep { bound, values: Vec::new() },
            PositivityVerdict::Inconclusive,
        );
    }
    let mut values = Vec::new();
    let mut n = start.clone();
    while n <= last {
        let value = p.eval(&n);
        if !positive(&value) {
            values.push(SweepPoint {
                n: n.clone(),
                value: value.clone(),
            });
            return cert(
                PositivityMethod::RootBoundSweep { bound, values },
                PositivityVerdict::Fails { witness: n, value },
            );
        }
        values.push(SweepPoint { n: n.clone(), value });
        n += BigInt::from(1);
    }
    debug_assert!(leading_positive);
    cert(
        PositivityMethod::RootBoundSweep { bound, values },
        PositivityVerdict::Certified,
    )
}

fn reject(msg: impl Into<String>) -> Error {
    Error::CertificateRejected(msg.into())
}

/// Checks that `bound` dominates every root modulus of `p`: if
/// `|a_i| <= (bound - 1) |a_d|` for all `i < d` then Cauchy's bound
/// `1 + max |a_i / a_d|` is at most `bound`.
fn dominates_roots(p: &PolyZ, bound: &BigInt) -> bool {
    let Some(lead) = p.leading() else {
        return false;
    };
    let lead = lead.unsigned_abs_ref();
    let Ok(slack) = malachite::Natural::try_from(bound - BigInt::from(1)) else {
        return false;
    };
    let cap = slack * lead;
    let d = p.coeffs().len() - 1;
    p.coeffs()[..d].iter().all(|c| *c.unsigned_abs_ref() <= cap)
}

/// Expansion of `p(x + N)` by repeated synthetic division.
fn synthetic_shift(p: &PolyZ, start: &BigInt) -> PolyZ {
    let mut rest: Vec<BigInt> = p.coeffs().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut carry = BigInt::from(0);
        for c in rest.iter_mut().rev() {
            carry = &carry * start + &*c;
            *c = carry.clone();
        }
        out.push(rest.remove(0));
    }
    PolyZ::new(out)
}

/// The method payload must be exactly what the prover derives from `p`,
/// whatever the verdict.
fn recheck_method(cert: &PositivityCertificate) -> Result<()> {
    let p = &cert.polynomial;
    let start = &cert.tail_start;
    match &cert.method {
        PositivityMethod::ShiftedCoefficients { shifted } => {
            if synthetic_shift(p, start) != *shifted {
                return Err(reject("shifted coefficients do not match p(x + N)"));
            }
        }
        PositivityMethod::RootBoundSweep { bound, values } => {
            if p.cauchy_bound().as_ref() != Some(bound) || !dominates_roots(p, bound) {
                return Err(reject("stated root bound is not the Cauchy bound of p"));
            }
            let mut expected = start.clone();
            for (i, pt) in values.iter().enumerate() {
                if pt.n != expected {
                    return Err(reject(format!("sweep skips or repeats n = {expected}")));
                }
                if p.eval(&pt.n) != pt.value {
                    return Err(reject(format!("sweep value at n = {} is wrong", pt.n)));
                }
                if !positive(&pt.value) && i + 1 != values.len() {
                    return Err(reject("sweep continues past a non-positive value"));
                }
                expected += BigInt::from(1);
            }
        }
    }
    Ok(())
}

fn recheck(cert: &PositivityCertificate) -> Result<()> {
    recheck_method(cert)?;
    let p = &cert.polynomial;
    let start = &cert.tail_start;
    match (&cert.verdict, &cert.method) {
        (PositivityVerdict::Fails { witness, value }, method) => {
            if witness < start {
                return Err(reject("witness lies before the tail start"));
            }
            if p.eval(witness) != *value {
                return Err(reject(format!("p({witness}) is not {value}")));
            }
            if positive(value) {
                return Err(reject("failure witness has a positive value"));
            }
            if let PositivityMethod::RootBoundSweep { values, .. } = method {
                if values.last().is_some_and(|pt| pt.n != *witness) {
                    return Err(reject("witness is not where the sweep stopped"));
                }
            }
            Ok(())
        }
        (PositivityVerdict::Inconclusive, PositivityMethod::RootBoundSweep { bound, .. }) => {
            if bound - start <= BigInt::from(MAX_SWEEP) {
                return Err(reject("root bound is within sweep range"));
            }
            Ok(())
        }
        (PositivityVerdict::Inconclusive, PositivityMethod::ShiftedCoefficients { .. }) => {
            Err(reject("shifted coefficients cannot be inconclusive"))
        }
        (PositivityVerdict::Certified, PositivityMethod::ShiftedCoefficients { shifted }) => {
            if shifted.coeffs().iter().any(|c| c.sign() == Ordering::Less) {
                return Err(reject("a shifted coefficient is negative"));
            }
            if !positive(&shifted.constant_term()) {
                return Err(reject("p(N) is not positive"));
            }
            Ok(())
        }
        (PositivityVerdict::Certified, PositivityMethod::RootBoundSweep { bound, values }) => {
            if !p.leading().is_some_and(positive) {
                return Err(reject("leading coefficient is not positive"));
            }
            if values.iter().any(|pt| !positive(&pt.value)) {
                return Err(reject("sweep contains a non-positive value"));
            }
            let covered = start + BigInt::from(values.len() as u64);
            if covered <= *bound {
                return Err(reject("sweep stops short of the root bound"));
            }
            Ok(())
        }
    }
}
