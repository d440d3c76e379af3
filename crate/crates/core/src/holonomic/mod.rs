//! Order-2 P-recursive sequences.
//!
//! A recurrence is stored in the signed convention
//! `c2(n) a_{n+1} = c1(n) a_n - c0(n) a_{n-1}`, applied for
//! `n >= first_valid_n`, with initial values `a_0`, `a_1`.

mod store;

pub use store::{load_store, save_store, SequenceStore};

use malachite::num::arithmetic::traits::DivRem;
use serde::{Deserialize, Serialize};

use crate::exactnum::{BigInt, BigRat};
use crate::poly::{PolyZ, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Order2Recurrence {
    pub name: String,
    pub c2: PolyZ,
    pub c1: PolyZ,
    pub c0: PolyZ,
    #[serde(with = "crate::serde_dec::int")]
    pub a0: BigInt,
    #[serde(with = "crate::serde_dec::int")]
    pub a1: BigInt,
    pub first_valid_n: u64,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

impl Order2Recurrence {
    pub fn new(
        name: impl Into<String>,
        c2: PolyZ,
        c1: PolyZ,
        c0: PolyZ,
        a0: BigInt,
        a1: BigInt,
        first_valid_n: u64,
    ) -> Result<Self> {
        let rec = Order2Recurrence {
            name: name.into(),
            c2,
            c1,
            c0,
            a0,
            a1,
            first_valid_n,
        };
        rec.validate()?;
        Ok(rec)
    }

    /// Checks the structural invariants: identifier name, `first_valid_n >= 1`
    /// and `c2(n) != 0` for every integer `n >= first_valid_n`.
    pub fn validate(&self) -> Result<()> {
        if !valid_name(&self.name) {
            return Err(Error::InvalidRecurrence(format!(
                "name `{}` must be a nonempty identifier",
                self.name
            )));
        }
        if self.first_valid_n == 0 {
            return Err(Error::InvalidRecurrence(
                "first_valid_n must be at least 1".into(),
            ));
        }
        if self.c2.is_zero() {
            return Err(Error::InvalidRecurrence(
                "leading coefficient polynomial c2 is zero".into(),
            ));
        }
        let start = i64::try_from(self.first_valid_n)
            .map_err(|_| Error::InvalidRecurrence("first_valid_n too large".into()))?;
        if let Some(root) = self.c2.integer_roots_from(start).first() {
            return Err(Error::InvalidRecurrence(format!(
                "c2 vanishes at n = {root} >= first_valid_n"
            )));
        }
        Ok(())
    }
}

/// Catalan-Larcombe-French:
/// `(n+1)^2 P_{n+1} = 8(3n^2+3n+1) P_n - 128 n^2 P_{n-1}`, `P_0 = 1`, `P_1 = 8`.
pub fn clf() -> Order2Recurrence {
    Order2Recurrence::new(
        "clf",
        PolyZ::from_i64(&[1, 2, 1]),
        PolyZ::from_i64(&[8, 24, 24]),
        PolyZ::from_i64(&[0, 0, 128]),
        BigInt::from(1),
        BigInt::from(8),
        1,
    )
    .expect("built-in recurrence is valid")
}

/// Fennessey-Larcombe-French:
/// `n(n+1)^2 V_{n+1} = 8n(3n^2+5n+1) V_n - 128(n-1)(n+1)^2 V_{n-1}`,
/// `V_0 = 1`, `V_1 = 8`. The leading coefficient vanishes at `n = 0`, so the
/// relation is applied from `n = 1`.
pub fn flf() -> Order2Recurrence {
    Order2Recurrence::new(
        "flf",
        PolyZ::from_i64(&[0, 1, 2, 1]),
        PolyZ::from_i64(&[0, 8, 40, 24]),
        // 128(n-1)(n+1)^2 = 128(n^3 + n^2 - n - 1)
        PolyZ::from_i64(&[-128, -128, 128, 128]),
        BigInt::from(1),
        BigInt::from(8),
        1,
    )
    .expect("built-in recurrence is valid")
}

/// Looks up a built-in recurrence by name.
pub fn builtin(name: &str) -> Option<Order2Recurrence> {
    match name {
        "clf" => Some(clf()),
        "flf" => Some(flf()),
        _ => None,
    }
}

pub fn eval_poly(p: &PolyZ, n: i64) -> BigInt {
    p.eval_i64(n)
}

/// Computes `a_n`, extending `store` densely up to index `n`.
pub fn term(rec: &Order2Recurrence, n: u64, store: &mut SequenceStore) -> Result<BigInt> {
    extend(rec, n, store)?;
    Ok(store.get(n).expect("store extended").clone())
}

/// Extends `store` so that it holds `a_0..=a_n`.
pub fn extend(rec: &Order2Recurrence, n: u64, store: &mut SequenceStore) -> Result<()> {
    if store.name() != rec.name {
        return Err(Error::StoreMismatch {
            store: store.name().to_string(),
            recurrence: rec.name.clone(),
        });
    }
    while store.highest_index() < n {
        let next = store.highest_index() + 1;
        let k = next - 1;
        if k < rec.first_valid_n {
            return Err(Error::InvalidIndex {
                sequence: rec.name.clone(),
                index: next,
                reason: format!(
                    "recurrence is only applied from n = {}",
                    rec.first_valid_n
                ),
            });
        }
        let kk = BigInt::from(k);
        let lead = rec.c2.eval(&kk);
        if lead == 0 {
            return Err(Error::InvalidIndex {
                sequence: rec.name.clone(),
                index: next,
                reason: format!("c2 vanishes at n = {k}"),
            });
        }
        let cur = store.get(k).unwrap();
        let prev = store.get(k - 1).unwrap();
        let rhs = rec.c1.eval(&kk) * cur - rec.c0.eval(&kk) * prev;
        let (q, r) = rhs.div_rem(&lead);
        if r != 0 {
            return Err(Error::NonIntegralTerm {
                sequence: rec.name.clone(),
                index: next,
            });
        }
        store.push(q);
    }
    Ok(())
}

/// Exact ratio `a_n / a_{n-1}` in lowest terms.
pub fn ratio(rec: &Order2Recurrence, n: u64, store: &mut SequenceStore) -> Result<BigRat> {
    if n == 0 {
        return Err(Error::InvalidIndex {
            sequence: rec.name.clone(),
            index: 0,
            reason: "ratio needs n >= 1".into(),
        });
    }
    extend(rec, n, store)?;
    let den = store.get(n - 1).unwrap();
    if *den == 0 {
        return Err(Error::ZeroDenominator {
            sequence: rec.name.clone(),
            index: n,
        });
    }
    Ok(BigRat::from_integers(store.get(n).unwrap().clone(), den.clone()))
}

/// The induced map `v(n+1) = A(n) - B(n) / v(n)` on consecutive ratios
/// `v(n) = a_n / a_{n-1}`, with `A = c1/c2` and `B = c0/c2` reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioMap {
    pub a: RatFunc,
    pub b: RatFunc,
    /// From this index on, `B(n)` and both denominators are nonzero.
    pub valid_from: u64,
}

impl RatioMap {
    /// `A(n) - B(n)/v`, or `None` at a pole or if `v = 0` with `B(n) != 0`.
    pub fn apply(&self, n: u64, v: &BigRat) -> Option<BigRat> {
        let nn = BigInt::from(n);
        let a = self.a.eval(&nn)?;
        let b = self.b.eval(&nn)?;
        if b == 0u32 {
            return Some(a);
        }
        if *v == 0u32 {
            return None;
        }
        Some(a - b / v)
    }
}

pub fn ratio_map(rec: &Order2Recurrence) -> RatioMap {
    let a = RatFunc::new(rec.c1.clone(), rec.c2.clone()).expect("c2 is nonzero");
    let b = RatFunc::new(rec.c0.clone(), rec.c2.clone()).expect("c2 is nonzero");
    let start = rec.first_valid_n as i64;
    let last_bad = [a.den(), b.den(), b.num()]
        .into_iter()
        .filter(|p| !p.is_zero())
        .filter_map(|p| p.integer_roots_from(start).last().copied())
        .max();
    let valid_from = match last_bad {
        Some(r) => (r + 1) as u64,
        None => rec.first_valid_n,
    };
    RatioMap { a, b, valid_from }
}

/// A recurrence together with its term store.
#[derive(Clone, Debug)]
pub struct Sequence {
    rec: Order2Recurrence,
    store: SequenceStore,
}

impl Sequence {
    pub fn new(rec: Order2Recurrence) -> Self {
        let store = SequenceStore::new(&rec);
        Sequence { rec, store }
    }

    /// Adopts a previously saved store after checking that it was produced by
    /// `rec`: same name, same initial values, and every stored triple satisfies
    /// the recurrence.
    pub fn with_store(rec: Order2Recurrence, store: SequenceStore) -> Result<Self> {
        store.verify_against(&rec)?;
        Ok(Sequence { rec, store })
    }

    pub fn clf() -> Self {
        Sequence::new(clf())
    }

    pub fn flf() -> Self {
        Sequence::new(flf())
    }

    pub fn recurrence(&self) -> &Order2Recurrence {
        &self.rec
    }

    pub fn name(&self) -> &str {
        &self.rec.name
    }

    pub fn store(&self) -> &SequenceStore {
        &self.store
    }

    pub fn into_store(self) -> SequenceStore {
        self.store
    }

    pub fn extend_to(&mut self, n: u64) -> Result<()> {
        extend(&self.rec, n, &mut self.store)
    }

    pub fn term(&mut self, n: u64) -> Result<BigInt> {
        term(&self.rec, n, &mut self.store)
    }

    /// Borrowed view of `a_lo..=a_hi` after extending the store.
    pub fn terms(&mut self, lo: u64, hi: u64) -> Result<&[BigInt]> {
        self.extend_to(hi)?;
        Ok(&self.store.terms()[lo as usize..=hi as usize])
    }

    pub fn ratio(&mut self, n: u64) -> Result<BigRat> {
        ratio(&self.rec, n, &mut self.store)
    }

    pub fn ratio_map(&self) -> RatioMap {
        ratio_map(&self.rec)
    }
}
