//! Report JSON: `{schema, timestamp, results: [{id, paper_ref, range,
//! verdict, method, witnesses}]}`.

use std::fmt;
use std::io::Write;
use std::path::Path;

use logbehave_core::induction::InductionCertificate;
use logbehave_core::logbehavior::PropertyReport;
use logbehave_core::paperchecks::{Outcome, SubResult};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictLabel {
    HoldsStrictly,
    Holds,
    Certified,
    Fails,
    NotCertified,
}

impl VerdictLabel {
    pub fn passed(self) -> bool {
        matches!(
            self,
            VerdictLabel::HoldsStrictly | VerdictLabel::Holds | VerdictLabel::Certified
        )
    }

    pub fn from_report(r: &PropertyReport) -> Self {
        if r.holds_strictly() {
            VerdictLabel::HoldsStrictly
        } else if r.holds() {
            VerdictLabel::Holds
        } else {
            VerdictLabel::Fails
        }
    }
}

impl From<Outcome> for VerdictLabel {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Holds => VerdictLabel::Holds,
            Outcome::Certified => VerdictLabel::Certified,
            Outcome::Fails => VerdictLabel::Fails,
            Outcome::NotCertified => VerdictLabel::NotCertified,
        }
    }
}

impl fmt::Display for VerdictLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).unwrap();
        f.write_str(v.as_str().unwrap())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub id: String,
    pub paper_ref: Option<String>,
    pub range: Option<[u64; 2]>,
    pub verdict: VerdictLabel,
    pub method: String,
    pub witnesses: Vec<String>,
}

impl ResultEntry {
    pub fn from_property(id: &str, paper_ref: Option<String>, r: &PropertyReport) -> Self {
        let stats = r.path_stats();
        let method = if stats.interval == 0 {
            "exact comparison".to_string()
        } else {
            format!(
                "interval-then-exact power comparison ({} interval, {} exact)",
                stats.interval, stats.exact
            )
        };
        let mut witnesses: Vec<String> = r.failures().take(10).map(|n| format!("n={n}")).collect();
        if let Some(p) = &r.partial {
            witnesses.push(format!("partial: {p}"));
        }
        ResultEntry {
            id: id.to_string(),
            paper_ref,
            range: Some([r.n_lo, r.n_hi]),
            verdict: VerdictLabel::from_report(r),
            method,
            witnesses,
        }
    }

    pub fn from_sub(prefix: &str, s: &SubResult) -> Self {
        let mut witnesses = s.witnesses.clone();
        if let Some(stats) = &s.path_stats {
            if stats.interval > 0 {
                witnesses.push(format!("paths: {} interval, {} exact", stats.interval, stats.exact));
            }
        }
        if let Some(note) = &s.note {
            witnesses.push(format!("note: {note}"));
        }
        ResultEntry {
            id: format!("{prefix}/{}", s.check),
            paper_ref: Some(s.display.clone()),
            range: s.range,
            verdict: s.outcome.into(),
            method: s.method.clone(),
            witnesses,
        }
    }

    /// Entry for an induction certificate checked against a pointwise sweep.
    pub fn from_bound(
        id: &str,
        paper_ref: Option<String>,
        cert: &InductionCertificate,
        pointwise: &PropertyReport,
    ) -> Self {
        let verdict = match (cert.is_certified(), pointwise.holds()) {
            (true, true) => VerdictLabel::Certified,
            (_, false) => VerdictLabel::Fails,
            (false, true) => VerdictLabel::NotCertified,
        };
        let mut witnesses = vec![
            format!("conclusion={}", cert.conclusion),
            format!("base n={} ratio={} bound={}", cert.base.n, cert.base.ratio(), cert.base.bound_value()),
            format!("step_numerator={}", cert.step_numerator),
        ];
        if let Some(w) = cert.step_witness() {
            witnesses.push(format!("step fails at n={w}"));
        }
        if let Some(n) = pointwise.first_failure {
            witnesses.push(format!("pointwise failure n={n}"));
        }
        ResultEntry {
            id: id.to_string(),
            paper_ref,
            range: Some([pointwise.n_lo, pointwise.n_hi]),
            verdict,
            method: "induction certificate + pointwise sweep".into(),
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub timestamp: String,
    pub results: Vec<ResultEntry>,
}

impl Report {
    pub fn new(results: Vec<ResultEntry>) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(ResultEntry::passed)
    }

    /// Copy with the timestamp blanked, for golden comparisons.
    pub fn masked(&self) -> Report {
        Report {
            timestamp: String::new(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}
