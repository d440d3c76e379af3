//! Exact arithmetic and certification machinery for the log-behavior of the
//! Catalan-Larcombe-French sequence `P_n` and the Fennessey-Larcombe-French
//! sequence `V_n`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: big integers and rationals, power-product comparison with
//!   an interval-logarithm fast path, and a certified enclosure of pi.
//! * [`poly`]: integer polynomials and reduced rational functions.
//! * [`holonomic`]: order-2 polynomial-coefficient recurrences, term stores,
//!   ratio maps and the on-disk term cache.
//! * [`logbehavior`]: range checkers for log-concavity, log-convexity, ratio
//!   monotonicity and the n-th root properties.
//! * [`induction`]: tail-positivity certificates and induction certificates
//!   for ratio bounds, with an independent re-checker.
//! * [`paperchecks`]: end-to-end pipelines composing the above into one report
//!   per theorem or displayed inequality.

pub mod error;
pub mod exactnum;
pub mod holonomic;
pub mod induction;
pub mod logbehavior;
pub mod paperchecks;
pub mod poly;
mod serde_dec;

pub use error::{Error, Result};
pub use exactnum::{BigInt, BigRat};
