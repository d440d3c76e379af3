//! `logbehave`: compute CLF/FLF terms, run check suites, and emit or recheck
//! induction certificates.
//!
//! Exit codes: 0 success, 2 configuration error, 3 computation error,
//! 4 verification failure.

pub mod config;
pub mod error;
pub mod expr;
pub mod report;
pub mod suite;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use logbehave_core::holonomic::builtin;
use logbehave_core::induction::{
    induction_step, pointwise_bound_check, BoundSpec, InductionCertificate, Side, POINTWISE_SPAN,
};
use logbehave_core::Error as CoreError;

use config::{parse_ladder, RunConfig};
pub use error::{CliError, Status};
use expr::parse_bound;
use report::write_atomic;
use suite::{RunLog, SequenceBank};

#[derive(Debug, Parser)]
#[command(name = "logbehave", version, about = "Exact log-behavior checks for the CLF and FLF sequences")]
pub struct Cli {
    /// Directory for term caches (`<name>.seqcache`).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for power-product sweeps.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Interval precisions tried before exact comparison, e.g. `64,256,1024`.
    /// An empty list forces exact comparison.
    #[arg(long, global = true, value_name = "BITS")]
    pub precision_ladder: Option<String>,

    /// Output file; stdout when absent.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a_0..=a_N, one decimal term per line.
    Terms {
        sequence: String,
        n_hi: u64,
        /// Config file defining user sequences.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Run a check suite and write the report JSON.
    Verify {
        /// Suite config; the built-in default suite when absent.
        config: Option<PathBuf>,
    },
    /// Build an induction certificate for a ratio bound.
    #[command(group(ArgGroup::new("side").required(true).args(["lower", "upper"])))]
    Certify {
        sequence: String,
        /// Claim `a_n/a_{n-1} > bound(n + shift)`.
        #[arg(long, value_name = "EXPR")]
        lower: Option<String>,
        /// Claim `a_n/a_{n-1} < bound(n + shift)`.
        #[arg(long, value_name = "EXPR")]
        upper: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
        #[arg(long)]
        base: u64,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Independently re-check a certificate file.
    Recheck { certificate: PathBuf },
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}

fn bank_for(config: Option<&Path>, cache_dir: Option<PathBuf>) -> Result<SequenceBank, CliError> {
    let recurrences = match config {
        Some(p) => RunConfig::load(p)?.recurrences,
        None => ["clf", "flf"]
            .into_iter()
            .map(|n| (n.to_string(), builtin(n).unwrap()))
            .collect(),
    };
    Ok(SequenceBank::new(recurrences, cache_dir))
}

fn configure_jobs(jobs: Option<usize>) -> Result<(), CliError> {
    if let Some(j) = jobs {
        if j == 0 {
            return Err(CliError::config("--jobs must be at least 1"));
        }
        // A second initialisation in the same process is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    Ok(())
}

/// Runs one invocation. Output goes to stdout or `--out`; diagnostics to
/// stderr.
pub fn run(cli: Cli) -> Result<Status, CliError> {
    configure_jobs(cli.jobs)?;
    let ladder = cli.precision_ladder.as_deref().map(parse_ladder).transpose()?;
    match cli.command {
        Command::Terms {
            sequence,
            n_hi,
            config,
        } => {
            let mut bank = bank_for(config.as_deref(), cli.cache_dir)?;
            let seq = bank.get(&sequence)?;
            let mut text = String::new();
            for t in seq.terms(0, n_hi)? {
                text.push_str(&t.to_string());
                text.push('\n');
            }
            bank.persist()?;
            emit(cli.out.as_deref(), &text)?;
            Ok(Status::Ok)
        }
        Command::Verify { config } => {
            let mut cfg = match &config {
                Some(p) => RunConfig::load(p)?,
                None => RunConfig::default_suite(),
            };
            if let Some(l) = ladder {
                cfg.ladder = l;
            }
            if cli.cache_dir.is_some() {
                cfg.cache_dir = cli.cache_dir;
            }
            let out = cli.out.or_else(|| cfg.out.clone());
            let mut log = RunLog::default();
            let report = suite::run(&cfg, &mut log)?;
            for l in &log.lines {
                eprintln!("{l}");
            }
            emit(out.as_deref(), &report.to_json())?;
            let status = Status::from_pass(report.passed());
            if status != Status::Ok {
                for e in report.results.iter().filter(|e| !e.passed()) {
                    eprintln!("FAILED {}: {} {}", e.id, e.verdict, e.witnesses.join("; "));
                }
            }
            Ok(status)
        }
        Command::Certify {
            sequence,
            lower,
            upper,
            shift,
            base,
            config,
        } => {
            let (side, src) = match (lower, upper) {
                (Some(l), None) => (Side::Lower, l),
                (None, Some(u)) => (Side::Upper, u),
                _ => return Err(CliError::config("exactly one of --lower and --upper is required")),
            };
            let bound = parse_bound(&src).map_err(|e| CliError::config(e.to_string()))?;
            let spec = BoundSpec::new(bound, side, shift, base);
            let mut bank = bank_for(config.as_deref(), cli.cache_dir)?;
            let seq = bank.get(&sequence)?;
            let cert = induction_step(seq, &spec)?;
            let pointwise = pointwise_bound_check(seq, &spec, base, base + POINTWISE_SPAN)?;
            bank.persist()?;
            if cert.is_certified() && !pointwise.holds() {
                return Err(CliError::Compute(CoreError::SoundnessViolation(format!(
                    "certificate contradicted at n = {}",
                    pointwise.first_failure.unwrap_or(base)
                ))));
            }
            let json = serde_json::to_string_pretty(&cert).expect("certificate serializes") + "\n";
            emit(cli.out.as_deref(), &json)?;
            eprintln!(
                "{} bound {} on {}: {}; pointwise [{}, {}] {}",
                side,
                src,
                sequence,
                cert.conclusion,
                pointwise.n_lo,
                pointwise.n_hi,
                if pointwise.holds() { "holds" } else { "fails" }
            );
            Ok(Status::from_pass(cert.is_certified()))
        }
        Command::Recheck { certificate } => {
            let text = std::fs::read_to_string(&certificate)
                .map_err(|e| CliError::config(format!("{}: {e}", certificate.display())))?;
            let cert: InductionCertificate = serde_json::from_str(&text).map_err(|e| {
                CliError::config(format!("{}:{}:{}: {e}", certificate.display(), e.line(), e.column()))
            })?;
            match cert.recheck() {
                Ok(()) => {
                    eprintln!("accepted: {}", cert.conclusion);
                    Ok(Status::from_pass(cert.is_certified()))
                }
                Err(CoreError::CertificateRejected(why)) => {
                    eprintln!("rejected: {why}");
                    Ok(Status::VerificationFailed)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}
