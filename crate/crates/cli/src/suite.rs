//! Executes a validated [`RunConfig`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use logbehave_core::exactnum::{pi_enclosure, PrecisionLadder, DEFAULT_PI_PRECISION};
use logbehave_core::holonomic::{load_store, save_store, Order2Recurrence, Sequence};
use logbehave_core::induction::{induction_step, pointwise_bound_check, BoundSpec, POINTWISE_SPAN};
use logbehave_core::logbehavior::{
    check_log_concave, check_log_convex, check_ratio_monotone, check_root_log_concave,
    check_root_monotone, CheckOptions, PropertyReport, Verdict,
};
use logbehave_core::paperchecks::{self, Context, Horizons, TheoremId, TheoremReport};
use logbehave_core::Error as CoreError;

use crate::config::{CheckDef, RunConfig};
use crate::error::CliError;
use crate::report::{Report, ResultEntry};

fn cache_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.seqcache"))
}

/// Sequences used by a run, optionally backed by an on-disk cache.
pub struct SequenceBank {
    recurrences: BTreeMap<String, Order2Recurrence>,
    loaded: BTreeMap<String, Sequence>,
    cache_dir: Option<PathBuf>,
}

impl SequenceBank {
    pub fn new(recurrences: BTreeMap<String, Order2Recurrence>, cache_dir: Option<PathBuf>) -> Self {
        SequenceBank {
            recurrences,
            loaded: BTreeMap::new(),
            cache_dir,
        }
    }

    fn open(&self, name: &str) -> Result<Sequence, CliError> {
        let rec = self
            .recurrences
            .get(name)
            .ok_or_else(|| CliError::config(format!("unknown sequence `{name}`")))?
            .clone();
        if let Some(dir) = &self.cache_dir {
            let path = cache_path(dir, name);
            if path.exists() {
                match load_store(&path).and_then(|s| Sequence::with_store(rec.clone(), s)) {
                    Ok(seq) => return Ok(seq),
                    Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
                }
            }
        }
        Ok(Sequence::new(rec))
    }

    pub fn get(&mut self, name: &str) -> Result<&mut Sequence, CliError> {
        if !self.loaded.contains_key(name) {
            let seq = self.open(name)?;
            self.loaded.insert(name.to_string(), seq);
        }
        Ok(self.loaded.get_mut(name).unwrap())
    }

    fn take(&mut self, name: &str) -> Result<Sequence, CliError> {
        self.get(name)?;
        Ok(self.loaded.remove(name).unwrap())
    }

    fn put(&mut self, seq: Sequence) {
        self.loaded.insert(seq.name().to_string(), seq);
    }

    /// Writes every touched sequence back to the cache directory.
    pub fn persist(&self) -> Result<(), CliError> {
        let Some(dir) = &self.cache_dir else {
            return Ok(());
        };
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        for (name, seq) in &self.loaded {
            save_store(seq.store(), &cache_path(dir, name))?;
        }
        Ok(())
    }
}

/// Runs a theorem pipeline on the bank's built-in sequences.
pub fn run_theorem(
    bank: &mut SequenceBank,
    theorem: TheoremId,
    n_hi: Option<u64>,
    ladder: &PrecisionLadder,
    horizons: Horizons,
) -> Result<TheoremReport, CliError> {
    let clf = bank.take("clf")?;
    let flf = bank.take("flf")?;
    let mut ctx = Context {
        clf,
        flf,
        options: CheckOptions {
            ladder: ladder.clone(),
        },
        pi: pi_enclosure(DEFAULT_PI_PRECISION),
        horizons,
    };
    let n = n_hi.unwrap_or(horizons.root);
    let out = match theorem {
        TheoremId::Thm1_1 => paperchecks::theorem_1_1(&mut ctx, n),
        TheoremId::Thm1_2 => paperchecks::theorem_1_2(&mut ctx, n),
        TheoremId::Prop4_1 => paperchecks::proposition_4_1(&mut ctx, n),
        TheoremId::Lem2_1 => paperchecks::lemma_2_1(&mut ctx),
        TheoremId::Lem3_1 => paperchecks::lemma_3_1(&mut ctx),
        TheoremId::Ineq3_5 => paperchecks::ineq_3_5(&mut ctx),
        TheoremId::Ineq3_6 => paperchecks::ineq_3_6(&mut ctx),
        TheoremId::Ineq3_8 => paperchecks::ineq_3_8(&mut ctx),
        TheoremId::Ineq3_9 => paperchecks::ineq_3_9(&mut ctx),
    };
    bank.put(ctx.clf);
    bank.put(ctx.flf);
    Ok(out?)
}

fn terms_report(seq: &mut Sequence, lo: u64, hi: u64) -> Result<PropertyReport, CoreError> {
    seq.extend_to(hi)?;
    let mut r = PropertyReport::new("positive_integer_terms", seq.name().to_string(), lo, hi);
    let terms = seq.terms(lo, hi)?.to_vec();
    for (n, t) in (lo..=hi).zip(terms) {
        let v = if t > 0u32 { Verdict::HoldsStrictly } else { Verdict::Fails };
        r.push(n, v, logbehave_core::exactnum::DecisionPath::Exact);
    }
    Ok(r)
}

/// Human-readable lines describing a finished run, for stderr.
#[derive(Default)]
pub struct RunLog {
    pub lines: Vec<String>,
}

pub fn run_checks(cfg: &RunConfig, bank: &mut SequenceBank, log: &mut RunLog) -> Result<Report, CliError> {
    let opts = CheckOptions {
        ladder: cfg.ladder.clone(),
    };
    let mut results = Vec::new();
    for check in &cfg.checks {
        let id = check.id();
        match check {
            CheckDef::Terms {
                paper_ref,
                sequence,
                range: [lo, hi],
                ..
            } => {
                let r = terms_report(bank.get(sequence)?, *lo, *hi)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::LogConcave {
                paper_ref,
                sequence,
                range: [lo, hi],
                strict,
                ..
            } => {
                let r = check_log_concave(bank.get(sequence)?, *lo, *hi, *strict)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::LogConvex {
                paper_ref,
                sequence,
                range: [lo, hi],
                strict,
                ..
            } => {
                let r = check_log_convex(bank.get(sequence)?, *lo, *hi, *strict)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::RatioMonotone {
                paper_ref,
                sequence,
                range: [lo, hi],
                direction,
                ..
            } => {
                let r = check_ratio_monotone(bank.get(sequence)?, *lo, *hi, *direction)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::RootLogConcave {
                paper_ref,
                sequence,
                range: [lo, hi],
                ..
            } => {
                let r = check_root_log_concave(bank.get(sequence)?, *lo, *hi, &opts)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::RootMonotone {
                paper_ref,
                sequence,
                range: [lo, hi],
                ..
            } => {
                let r = check_root_monotone(bank.get(sequence)?, *lo, *hi, &opts)?;
                results.push(ResultEntry::from_property(id, paper_ref.clone(), &r));
            }
            CheckDef::RatioBound {
                paper_ref,
                sequence,
                side,
                shift,
                base,
                range,
                ..
            } => {
                let spec = BoundSpec::new(cfg.bounds[id].clone(), *side, *shift, *base);
                let [lo, hi] = range.unwrap_or([*base, *base + POINTWISE_SPAN]);
                let seq = bank.get(sequence)?;
                let cert = induction_step(seq, &spec)?;
                let pointwise = pointwise_bound_check(seq, &spec, lo, hi)?;
                if cert.is_certified() && !pointwise.holds() {
                    return Err(CliError::Compute(CoreError::SoundnessViolation(format!(
                        "check `{id}` certified but fails pointwise at n = {}",
                        pointwise.first_failure.unwrap_or(lo)
                    ))));
                }
                results.push(ResultEntry::from_bound(id, paper_ref.clone(), &cert, &pointwise));
            }
            CheckDef::Theorem { theorem, n_hi, .. } => {
                let t = run_theorem(bank, *theorem, *n_hi, &cfg.ladder, cfg.horizons)?;
                log.lines.extend(t.summary_table().lines().map(str::to_string));
                results.extend(t.sub_results.iter().map(|s| ResultEntry::from_sub(id, s)));
                continue;
            }
        }
        let e = results.last().unwrap();
        log.lines.push(format!(
            "{} [{}] {}",
            id,
            if e.passed() { "PASS" } else { "FAIL" },
            e.verdict
        ));
    }
    Ok(Report::new(results))
}

/// Runs the configured checks and persists the term cache.
pub fn run(cfg: &RunConfig, log: &mut RunLog) -> Result<Report, CliError> {
    let mut bank = SequenceBank::new(cfg.recurrences.clone(), cfg.cache_dir.clone());
    let report = run_checks(cfg, &mut bank, log);
    bank.persist()?;
    report
}
