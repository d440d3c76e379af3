//! Run configuration: a single JSON document with `"schema": 1`.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use logbehave_core::exactnum::PrecisionLadder;
use logbehave_core::holonomic::{builtin, Order2Recurrence};
use logbehave_core::induction::Side;
use logbehave_core::logbehavior::Direction;
use logbehave_core::paperchecks::{Horizons, TheoremId};
use logbehave_core::poly::{PolyZ, RatFunc};
use logbehave_core::BigInt;
use serde::Deserialize;

use crate::error::CliError;
use crate::expr::parse_bound;

pub const CONFIG_SCHEMA: u32 = 1;

/// The suite run by `verify` without a config file.
pub const DEFAULT_SUITE: &str = include_str!("../suites/default.json");

/// Integer accepted either as a JSON number or as a decimal string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Coeff::Int(k) => Some(BigInt::from(*k)),
            Coeff::Text(s) => BigInt::from_str(s.trim()).ok(),
        }
    }
}

/// User recurrence `c2(n) a_{n+1} = c1(n) a_n - c0(n) a_{n-1}` with
/// ascending coefficient arrays.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDef {
    pub name: String,
    pub c2: Vec<Coeff>,
    pub c1: Vec<Coeff>,
    pub c0: Vec<Coeff>,
    pub a0: Coeff,
    pub a1: Coeff,
    pub first_valid_n: u64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckDef {
    Terms {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
    },
    LogConcave {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
        #[serde(default = "yes")]
        strict: bool,
    },
    LogConvex {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
        #[serde(default = "yes")]
        strict: bool,
    },
    RatioMonotone {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
        direction: Direction,
    },
    RootLogConcave {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
    },
    RootMonotone {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        range: [u64; 2],
    },
    RatioBound {
        id: String,
        paper_ref: Option<String>,
        sequence: String,
        bound: String,
        side: Side,
        #[serde(default)]
        shift: i64,
        base: u64,
        /// Pointwise cross-check range; defaults to 200 indices from `base`.
        range: Option<[u64; 2]>,
    },
    Theorem {
        id: String,
        theorem: TheoremId,
        n_hi: Option<u64>,
    },
}

fn yes() -> bool {
    true
}

impl CheckDef {
    pub fn id(&self) -> &str {
        match self {
            CheckDef::Terms { id, .. }
            | CheckDef::LogConcave { id, .. }
            | CheckDef::LogConvex { id, .. }
            | CheckDef::RatioMonotone { id, .. }
            | CheckDef::RootLogConcave { id, .. }
            | CheckDef::RootMonotone { id, .. }
            | CheckDef::RatioBound { id, .. }
            | CheckDef::Theorem { id, .. } => id,
        }
    }

    pub fn sequence(&self) -> Option<&str> {
        match self {
            CheckDef::Terms { sequence, .. }
            | CheckDef::LogConcave { sequence, .. }
            | CheckDef::LogConvex { sequence, .. }
            | CheckDef::RatioMonotone { sequence, .. }
            | CheckDef::RootLogConcave { sequence, .. }
            | CheckDef::RootMonotone { sequence, .. }
            | CheckDef::RatioBound { sequence, .. } => Some(sequence),
            CheckDef::Theorem { .. } => None,
        }
    }

    fn range(&self) -> Option<[u64; 2]> {
        match self {
            CheckDef::Terms { range, .. }
            | CheckDef::LogConcave { range, .. }
            | CheckDef::LogConvex { range, .. }
            | CheckDef::RatioMonotone { range, .. }
            | CheckDef::RootLogConcave { range, .. }
            | CheckDef::RootMonotone { range, .. } => Some(*range),
            CheckDef::RatioBound { range, .. } => *range,
            CheckDef::Theorem { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub schema: u32,
    #[serde(default)]
    pub sequences: Vec<SequenceDef>,
    pub checks: Vec<CheckDef>,
    pub precision_ladder: Option<Vec<u32>>,
    pub cache_dir: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub horizons: Option<Horizons>,
}

/// A configuration that passed every semantic check.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub recurrences: BTreeMap<String, Order2Recurrence>,
    pub checks: Vec<CheckDef>,
    /// Parsed bound of each `ratio_bound` check, keyed by check id.
    pub bounds: BTreeMap<String, RatFunc>,
    pub ladder: PrecisionLadder,
    pub cache_dir: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub horizons: Horizons,
}

fn coeff_poly(field: &str, cs: &[Coeff]) -> Result<PolyZ, CliError> {
    let mut out = Vec::with_capacity(cs.len());
    for (i, c) in cs.iter().enumerate() {
        out.push(
            c.to_bigint()
                .ok_or_else(|| CliError::config(format!("{field}[{i}]: not an integer")))?,
        );
    }
    Ok(PolyZ::new(out))
}

fn recurrence(i: usize, def: &SequenceDef) -> Result<Order2Recurrence, CliError> {
    let at = |f: &str| format!("sequences[{i}].{f}");
    let int = |f: &str, c: &Coeff| {
        c.to_bigint()
            .ok_or_else(|| CliError::config(format!("{}: not an integer", at(f))))
    };
    Order2Recurrence::new(
        def.name.clone(),
        coeff_poly(&at("c2"), &def.c2)?,
        coeff_poly(&at("c1"), &def.c1)?,
        coeff_poly(&at("c0"), &def.c0)?,
        int("a0", &def.a0)?,
        int("a1", &def.a1)?,
        def.first_valid_n,
    )
    .map_err(|e| CliError::config(format!("sequences[{i}]: {e}")))
}

/// Parses JSON text, reporting the field path plus line and column on error.
pub fn parse_raw(text: &str, origin: &str) -> Result<RawConfig, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        let path = e.path().to_string();
        CliError::config(format!(
            "{origin}:{}:{}: field `{path}`: {inner}",
            inner.line(),
            inner.column()
        ))
    })
}

impl RawConfig {
    pub fn validate(self) -> Result<RunConfig, CliError> {
        if self.schema != CONFIG_SCHEMA {
            return Err(CliError::config(format!(
                "schema: expected {CONFIG_SCHEMA}, found {}",
                self.schema
            )));
        }
        let mut recurrences = BTreeMap::new();
        for name in ["clf", "flf"] {
            recurrences.insert(name.to_string(), builtin(name).unwrap());
        }
        for (i, def) in self.sequences.iter().enumerate() {
            if recurrences.contains_key(&def.name) {
                return Err(CliError::config(format!(
                    "sequences[{i}].name: `{}` is already defined",
                    def.name
                )));
            }
            recurrences.insert(def.name.clone(), recurrence(i, def)?);
        }
        if self.checks.is_empty() {
            return Err(CliError::config("checks: at least one check is required"));
        }
        let mut ids = HashSet::new();
        let mut bounds = BTreeMap::new();
        for (i, c) in self.checks.iter().enumerate() {
            if c.id().is_empty() {
                return Err(CliError::config(format!("checks[{i}].id: empty")));
            }
            if !ids.insert(c.id()) {
                return Err(CliError::config(format!(
                    "checks[{i}].id: duplicate `{}`",
                    c.id()
                )));
            }
            if let Some(s) = c.sequence() {
                if !recurrences.contains_key(s) {
                    return Err(CliError::config(format!(
                        "checks[{i}].sequence: `{s}` is not defined"
                    )));
                }
            }
            if let Some([lo, hi]) = c.range() {
                if lo > hi {
                    return Err(CliError::config(format!(
                        "checks[{i}].range: [{lo}, {hi}] is empty"
                    )));
                }
            }
            if let CheckDef::RatioBound { bound, .. } = c {
                let f = parse_bound(bound)
                    .map_err(|e| CliError::config(format!("checks[{i}].bound: {e}")))?;
                bounds.insert(c.id().to_string(), f);
            }
        }
        let ladder = match self.precision_ladder {
            Some(rungs) => PrecisionLadder::new(rungs)
                .map_err(|e| CliError::config(format!("precision_ladder: {e}")))?,
            None => PrecisionLadder::default(),
        };
        Ok(RunConfig {
            recurrences,
            checks: self.checks,
            bounds,
            ladder,
            cache_dir: self.cache_dir,
            out: self.out,
            horizons: self.horizons.unwrap_or_default(),
        })
    }
}

impl RunConfig {
    pub fn from_str(text: &str, origin: &str) -> Result<Self, CliError> {
        parse_raw(text, origin)?.validate()
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        Self::from_str(&text, &path.display().to_string())
    }

    pub fn default_suite() -> Self {
        Self::from_str(DEFAULT_SUITE, "default suite").expect("default suite is valid")
    }
}

/// Parses a comma-separated ladder such as `64,256,1024`.
pub fn parse_ladder(s: &str) -> Result<PrecisionLadder, CliError> {
    let rungs = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| CliError::config(format!("--precision-ladder: `{p}` is not a bit count")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PrecisionLadder::new(rungs).map_err(|e| CliError::config(format!("--precision-ladder: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> String {
        RunConfig::from_str(text, "cfg.json").unwrap_err().to_string()
    }

    #[test]
    fn default_suite_parses() {
        let cfg = RunConfig::default_suite();
        assert!(cfg.checks.iter().any(|c| matches!(c, CheckDef::Theorem { .. })));
        assert_eq!(cfg.ladder, PrecisionLadder::default());
    }

    #[test]
    fn user_sequence() {
        let cfg = RunConfig::from_str(
            r#"{"schema": 1,
                "sequences": [{"name": "clf2", "c2": [1, 2, 1], "c1": [8, 24, "24"],
                               "c0": [0, 0, 128], "a0": 1, "a1": "8", "first_valid_n": 1}],
                "checks": [{"kind": "terms", "id": "t", "sequence": "clf2", "range": [0, 5]}]}"#,
            "cfg.json",
        )
        .unwrap();
        let r = &cfg.recurrences["clf2"];
        assert_eq!(r.c1, builtin("clf").unwrap().c1);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let e = err(r#"{"schema": 1, "checks": [{"kind": "terms", "id": "t", "sequence": "clf", "range": [0]}]}"#);
        assert!(e.contains("checks[0]") && e.contains("array of length 2"), "{e}");
        assert!(e.contains("cfg.json:1:"), "{e}");

        let e = err("{\"schema\": 1,\n \"checks\": [{\"kind\": \"nope\", \"id\": \"t\"}]}");
        assert!(e.contains("cfg.json:2:"), "{e}");

        let e = err(r#"{"schema": 1, "checks": [], "extra": 1}"#);
        assert!(e.contains("extra"), "{e}");
        let e = err(r#"{"schema": 2, "checks": []}"#);
        assert!(e.contains("schema"), "{e}");
        let e = err(r#"{"schema": 1, "checks": [{"kind": "terms", "id": "t", "sequence": "xyz", "range": [0, 1]}]}"#);
        assert!(e.contains("checks[0].sequence"), "{e}");
        let e = err(r#"{"schema": 1, "checks": [{"kind": "terms", "id": "t", "sequence": "clf", "range": [3, 1]}]}"#);
        assert!(e.contains("is empty"), "{e}");
        let e = err(r#"{"schema": 1, "precision_ladder": [256, 64],
                        "checks": [{"kind": "terms", "id": "t", "sequence": "clf", "range": [0, 1]}]}"#);
        assert!(e.contains("precision_ladder"), "{e}");
        let e = err(r#"{"schema": 1, "checks": [{"kind": "ratio_bound", "id": "b", "sequence": "clf",
                        "bound": "16n", "side": "lower", "base": 5}]}"#);
        assert!(e.contains("checks[0].bound") && e.contains("column 3"), "{e}");
        let e = err(r#"{"schema": 1, "checks": [
                        {"kind": "terms", "id": "t", "sequence": "clf", "range": [0, 1]},
                        {"kind": "terms", "id": "t", "sequence": "flf", "range": [0, 1]}]}"#);
        assert!(e.contains("duplicate"), "{e}");
        let e = err(r#"{"schema": 1, "sequences": [{"name": "bad", "c2": [0, 1], "c1": [1], "c0": [1],
                        "a0": 1, "a1": 1, "first_valid_n": 0}], "checks": []}"#);
        assert!(e.contains("sequences[0]"), "{e}");
    }

    #[test]
    fn ladder_flag() {
        assert_eq!(parse_ladder("64,256,1024").unwrap(), PrecisionLadder::default());
        assert!(parse_ladder("64,64").is_err());
        assert!(parse_ladder("x").is_err());
        assert_eq!(parse_ladder("").unwrap(), PrecisionLadder::exact_only());
    }
}
