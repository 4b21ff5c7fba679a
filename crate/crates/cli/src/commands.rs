//! Subcommand dispatch and exit-code mapping.

use foldbranch::branching::{
    branch_rho, counterexample_demo, expected_mass, triality_demo, verify_lemma,
    verify_tensor_identity, verify_proposition, verify_theorem,
};
use foldbranch::charalg::{CharacterProvider, Freudenthal};
use foldbranch::{Error, Family, FoldedPair, Limits};
use log::info;
use serde_json::json;
use thiserror::Error as ThisError;

use crate::cache::DiskCache;
use crate::config::{Command, Format, RunConfig, Suite};
use crate::render::{to_json, weight_list, BranchOutput, Check, FoldOutput, PairInfo, VerifyOutput};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Audit(_) => CliError::Verification(msg),
            Error::Gated(_) => CliError::Resource(format!(
                "{msg}; pass --allow-large to run it"
            )),
            Error::Guard { .. } => CliError::Resource(format!("{msg}; raise --term-guard to continue")),
            Error::Overflow(_) => CliError::Resource(msg),
            _ => CliError::Input(msg),
        }
    }
}

/// What a successful run prints, and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// Human-readable summary for standard error, when stdout is machine-readable.
    pub summary: Option<String>,
    pub passed: bool,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn provider(config: &RunConfig) -> Result<Box<dyn CharacterProvider>, CliError> {
    match &config.cache_dir {
        Some(dir) => {
            let cache = DiskCache::new(dir).map_err(|e| {
                CliError::Input(format!("cannot use cache directory {}: {e}", dir.display()))
            })?;
            Ok(Box::new(cache))
        }
        None => Ok(Box::new(Freudenthal::new())),
    }
}

/// Runs one subcommand on a thread pool of the configured size.
pub fn run(command: &Command, config: &RunConfig) -> Result<Output, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| CliError::Resource(format!("cannot start thread pool: {e}")))?;
    pool.install(|| dispatch(command, config))
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<Output, CliError> {
    let fp = FoldedPair::from_id(&config.pair)?;
    let limits = config.limits();
    match command {
        Command::Fold { .. } => {
            let out = FoldOutput::new(&fp);
            Ok(Output {
                stdout: render(config.format, &out, FoldOutput::to_text, FoldOutput::to_csv),
                summary: None,
                passed: true,
            })
        }
        Command::Branch { .. } => {
            let dec = branch_rho(&fp, config.d, &limits)?;
            let out = BranchOutput::new(&fp, config.d, &dec, expected_mass(&fp, config.d)?)?;
            info!(
                "{}: {} constituents, total dimension {}",
                config.pair,
                out.constituents.len(),
                out.mass_audit.actual
            );
            Ok(Output {
                stdout: render(config.format, &out, BranchOutput::to_text, BranchOutput::to_csv),
                summary: None,
                passed: true,
            })
        }
        Command::Verify { suite, .. } => {
            let provider = provider(config)?;
            let out = verify(&fp, *suite, config, provider.as_ref(), &limits)?;
            Ok(Output {
                passed: out.passed,
                summary: (config.format != Format::Text).then(|| out.to_text()),
                stdout: render(config.format, &out, VerifyOutput::to_text, VerifyOutput::to_csv),
            })
        }
    }
}

fn render<T: serde::Serialize>(
    format: Format,
    value: &T,
    text: fn(&T) -> String,
    csv: fn(&T) -> String,
) -> String {
    match format {
        Format::Json => to_json(value),
        Format::Text => text(value),
        Format::Csv => csv(value),
    }
}

/// `n` for the pairs `A_{2n-1} -> C_n` with `n` odd.
fn counterexample_rank(fp: &FoldedPair) -> Option<usize> {
    let folded = fp.folded().lie_type();
    let n = folded.rank();
    (folded.family() == Family::C && n % 2 == 1).then_some(n)
}

fn applicable(fp: &FoldedPair, suite: Suite) -> bool {
    match suite {
        Suite::TensorIdentity | Suite::Lemma | Suite::Proposition => fp.order() == 2,
        Suite::Theorem => true,
        Suite::Counterexample => counterexample_rank(fp).is_some(),
        Suite::Triality => fp.id() == "D4G2",
        Suite::All => false,
    }
}

const SUITES: [Suite; 6] = [
    Suite::TensorIdentity,
    Suite::Lemma,
    Suite::Proposition,
    Suite::Theorem,
    Suite::Counterexample,
    Suite::Triality,
];

pub fn verify(
    fp: &FoldedPair,
    suite: Suite,
    config: &RunConfig,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<VerifyOutput, CliError> {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    if suite == Suite::All {
        for s in SUITES {
            if !applicable(fp, s) {
                continue;
            }
            if s == Suite::Theorem && fp.ambient().lie_type().family() == Family::E && !limits.allow_large {
                skipped.push(format!("theorem: needs --allow-large for {}", fp.id()));
                continue;
            }
            checks.push(run_suite(fp, s, config, provider, limits)?);
        }
    } else {
        if !applicable(fp, suite) {
            return Err(CliError::Input(format!(
                "suite {} does not apply to {}",
                suite.name(),
                fp.id()
            )));
        }
        checks.push(run_suite(fp, suite, config, provider, limits)?);
    }
    Ok(VerifyOutput {
        pair: PairInfo::new(fp),
        d: config.d,
        passed: checks.iter().all(|c| c.passed),
        checks,
        skipped,
    })
}

fn run_suite(
    fp: &FoldedPair,
    suite: Suite,
    config: &RunConfig,
    provider: &dyn CharacterProvider,
    limits: &Limits,
) -> Result<Check, CliError> {
    let (passed, summary, details) = match suite {
        Suite::TensorIdentity => {
            let r = verify_tensor_identity(fp, provider, limits)?;
            (
                r.holds,
                format!("res V(rho) = V0(rho_0) x V0(p(rho)-rho_0) ({} weights, dim {})", r.terms, r.mass),
                json!({ "terms": r.terms, "mass": r.mass.to_string() }),
            )
        }
        Suite::Lemma => {
            let r = verify_lemma(fp, provider, limits)?;
            (
                r.holds,
                format!("{} subset sums against a character of dimension {}", r.subsets, r.character_mass),
                json!({ "subsets": r.subsets, "character_mass": r.character_mass.to_string() }),
            )
        }
        Suite::Proposition => {
            let r = verify_proposition(fp, config.bounds.as_deref(), provider, limits)?;
            let mismatches: Vec<_> = r
                .mismatches
                .iter()
                .map(|m| json!({ "mu": m.mu.coords(), "criterion": m.criterion, "multiplicity": m.multiplicity }))
                .collect();
            (
                r.holds(),
                format!(
                    "{} weights in box {:?}, {} accepted, {} mismatches",
                    r.scanned,
                    r.bound,
                    r.accepted,
                    r.mismatches.len()
                ),
                json!({
                    "bound": r.bound,
                    "scanned": r.scanned,
                    "accepted": r.accepted,
                    "short_dominance_only": weight_list(&r.short_dominance_only),
                    "mismatches": mismatches,
                }),
            )
        }
        Suite::Theorem => {
            let r = verify_theorem(fp, config.d, provider, limits)?;
            (
                r.agreement,
                format!(
                    "d={}: {} constituents, {} of the form d*mu with mu central, {} non-central, {} candidates",
                    r.d,
                    r.constituents.len(),
                    r.scaled_constituents.len(),
                    r.non_central.len(),
                    r.candidate_set.len()
                ),
                json!({
                    "scaled_constituents": weight_list(&r.scaled_constituents),
                    "non_central": weight_list(&r.non_central),
                    "candidate_set": weight_list(&r.candidate_set),
                    "witnesses": weight_list(&r.witnesses),
                }),
            )
        }
        Suite::Counterexample => {
            let n = counterexample_rank(fp).expect("checked by applicable");
            let r = counterexample_demo(n, limits)?;
            (
                r.holds(),
                format!(
                    "mu = {}: short dominance {}, weight multiplicity {}, in branching {}",
                    r.mu,
                    r.short_dominance,
                    r.multiplicity,
                    r.in_branch
                ),
                json!({
                    "n": r.n,
                    "mu": r.mu.coords(),
                    "short_dominance": r.short_dominance,
                    "multiplicity": r.multiplicity,
                    "in_branch": r.in_branch,
                }),
            )
        }
        Suite::Triality => {
            let r = triality_demo(fp, provider, limits)?;
            (
                r.holds(),
                format!(
                    "{} constituents, tensor and candidate sets agree: {}, dim {} of {}",
                    r.branch_set.len(),
                    r.branch_set == r.tensor_set && r.tensor_set == r.candidate_set,
                    r.branch_mass,
                    r.expected_mass
                ),
                json!({
                    "branch_set": weight_list(&r.branch_set),
                    "tensor_set": weight_list(&r.tensor_set),
                    "candidate_set": weight_list(&r.candidate_set),
                    "branch_mass": r.branch_mass.to_string(),
                    "expected_mass": r.expected_mass.to_string(),
                }),
            )
        }
        Suite::All => unreachable!("expanded by the caller"),
    };
    Ok(Check {
        suite: suite.name().to_string(),
        passed,
        summary,
        details,
    })
}
