//! End-to-end pipelines for the two root log-concavity theorems, the ratio
//! bound lemmas, the monotonicity proposition and the displayed inequalities
//! they rely on.
//!
//! Every pipeline returns a [`TheoremReport`] whose sub-results each carry
//! one display id. Certified tails are always accompanied by a pointwise
//! sweep so that a prover bug shows up as a disagreement.

mod bounds;
mod clf;
mod pipelines;

pub use bounds::{
    binom_central, check_nfu, check_vu1, check_vu2, check_vuh, chain_implication, h_gt_16,
    sasvari_exponent_sign, HGt16, SasvariSign, Vu2Report,
};
pub use clf::{
    claim_ln_decreasing, claim_rn_increasing, crossover, euler_seq_increasing, ln_rn,
    rn_product_identity,
};
pub use pipelines::{
    ineq_3_5, ineq_3_6, ineq_3_8, ineq_3_9, lemma_2_1, lemma_3_1, proposition_4_1, theorem_1_1,
    theorem_1_2, ALL_DISPLAY_IDS,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{pi_enclosure, PiEnclosure, DEFAULT_PI_PRECISION};
use crate::holonomic::Sequence;
use crate::logbehavior::{CheckOptions, PathStats, PropertyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "Thm1.1")]
    Thm1_1,
    #[serde(rename = "Thm1.2")]
    Thm1_2,
    #[serde(rename = "Lem2.1")]
    Lem2_1,
    #[serde(rename = "Lem3.1")]
    Lem3_1,
    #[serde(rename = "Prop4.1")]
    Prop4_1,
    #[serde(rename = "Ineq3.5")]
    Ineq3_5,
    #[serde(rename = "Ineq3.6")]
    Ineq3_6,
    #[serde(rename = "Ineq3.8")]
    Ineq3_8,
    #[serde(rename = "Ineq3.9")]
    Ineq3_9,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).unwrap();
        f.write_str(v.as_str().unwrap())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Every index of a finite sweep holds.
    Holds,
    /// A symbolic certificate covers an infinite tail.
    Certified,
    Fails,
    NotCertified,
}

impl Outcome {
    pub fn passed(self) -> bool {
        matches!(self, Outcome::Holds | Outcome::Certified)
    }

    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).unwrap();
        f.write_str(v.as_str().unwrap())
    }
}

/// One checked statement inside a pipeline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubResult {
    /// Stable machine name, unique within a pipeline.
    pub check: String,
    /// Display id of the statement being checked.
    pub display: String,
    pub claim: String,
    pub range: Option<[u64; 2]>,
    pub outcome: Outcome,
    pub method: String,
    pub witnesses: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path_stats: Option<PathStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SubResult {
    pub fn new(check: &str, display: &str, claim: &str, outcome: Outcome, method: &str) -> Self {
        SubResult {
            check: check.to_string(),
            display: display.to_string(),
            claim: claim.to_string(),
            range: None,
            outcome,
            method: method.to_string(),
            witnesses: Vec::new(),
            path_stats: None,
            note: None,
        }
    }

    /// Sub-result mirroring a pointwise report: holds iff every index holds.
    pub fn from_report(check: &str, display: &str, claim: &str, report: &PropertyReport) -> Self {
        let stats = report.path_stats();
        let method = if stats.interval > 0 {
            "interval-then-exact power comparison"
        } else {
            "exact comparison"
        };
        let mut s = SubResult::new(check, display, claim, Outcome::from_bool(report.holds()), method);
        s.range = Some([report.n_lo, report.n_hi]);
        s.witnesses = report.failures().take(10).map(|n| format!("n={n}")).collect();
        s.path_stats = Some(stats);
        if let Some(p) = &report.partial {
            s.note = Some(format!("partial: {p}"));
        }
        s
    }

    pub fn with_range(mut self, lo: u64, hi: u64) -> Self {
        self.range = Some([lo, hi]);
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub sub_results: Vec<SubResult>,
    pub passed: bool,
    pub wall_time_ms: u64,
}

impl TheoremReport {
    pub fn new(id: TheoremId, sub_results: Vec<SubResult>, wall_time_ms: u64) -> Self {
        let passed = !sub_results.is_empty() && sub_results.iter().all(|s| s.outcome.passed());
        TheoremReport {
            id,
            sub_results,
            passed,
            wall_time_ms,
        }
    }

    pub fn sub_result(&self, check: &str) -> Option<&SubResult> {
        self.sub_results.iter().find(|s| s.check == check)
    }

    pub fn display_ids(&self) -> impl Iterator<Item = &str> {
        self.sub_results.iter().map(|s| s.display.as_str())
    }

    /// Human-readable table: one row per sub-result.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "{} [{}] {} ms\n",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.wall_time_ms
        );
        for s in &self.sub_results {
            let range = s
                .range
                .map(|[a, b]| format!("[{a}, {b}]"))
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "  {:<8} {:<13} {:<12} {:<38} {}\n",
                s.display, s.outcome, range, s.method, s.check
            ));
        }
        out
    }
}

/// Default horizons for desk-scale runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Horizons {
    /// n-th root power-product sweeps.
    pub root: u64,
    /// Quadratic-size checks such as ratio gaps.
    pub quadratic: u64,
    /// The `h(n)^n > V_n` inequality and the bounds chained into it.
    pub vuh: u64,
    /// Exact `r_n` claims, whose operands grow like `n^2` digits.
    #[serde(default = "default_claims")]
    pub claims: u64,
}

fn default_claims() -> u64 {
    200
}

impl Default for Horizons {
    fn default() -> Self {
        Horizons {
            root: 500,
            quadratic: 2000,
            vuh: 300,
            claims: default_claims(),
        }
    }
}

/// Shared sequences and settings for the pipelines.
#[derive(Clone, Debug)]
pub struct Context {
    pub clf: Sequence,
    pub flf: Sequence,
    pub options: CheckOptions,
    pub pi: PiEnclosure,
    pub horizons: Horizons,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            clf: Sequence::clf(),
            flf: Sequence::flf(),
            options: CheckOptions::default(),
            pi: pi_enclosure(DEFAULT_PI_PRECISION),
            horizons: Horizons::default(),
        }
    }
}

impl Context {
    pub fn new(clf: Sequence, flf: Sequence, options: CheckOptions) -> Self {
        Context {
            clf,
            flf,
            options,
            ..Context::default()
        }
    }
}
