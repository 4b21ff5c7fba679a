use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use foldbranch::charalg::DEFAULT_TERM_GUARD;
use foldbranch::folding::SUPPORTED_PAIRS;
use foldbranch::Limits;

const AFTER_HELP: &str = "\
Weights are written as integer arrays in fundamental-weight coordinates of the
folded system, with Bourbaki node numbering (e.g. [2,1] is 2*w1 + w2 in C2).

Pairs: A3C2 A5C3 A7C4 A9C5 D4B3 D5B4 D6B5 E6F4 D4G2

Exit codes: 0 success, 1 verification failed, 2 invalid input, 3 resource guard.";

#[derive(Debug, Parser)]
#[command(name = "foldbranch", version, about = "Branching of V(d rho) to fixed-point subalgebras of diagram automorphisms", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summarize a folding: folded type, short/long simple roots, m(beta), rho_0, rho_s, p(rho).
    Fold {
        /// Pair id such as A3C2 (alternative to --pair)
        #[arg(id = "pair_id", value_name = "PAIR")]
        pair: Option<String>,
    },
    /// Decompose res V(d rho) into irreducibles of the folded algebra.
    Branch {
        #[arg(id = "pair_id", value_name = "PAIR")]
        pair: Option<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(id = "pair_id", value_name = "PAIR")]
        pair: Option<String>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

impl Command {
    fn positional_pair(&self) -> Option<&str> {
        match self {
            Command::Fold { pair } | Command::Branch { pair } | Command::Verify { pair, .. } => {
                pair.as_deref()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "panyushev")]
    TensorIdentity,
    Lemma,
    Proposition,
    Theorem,
    Counterexample,
    Triality,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::TensorIdentity => "panyushev",
            Suite::Lemma => "lemma",
            Suite::Proposition => "proposition",
            Suite::Theorem => "theorem",
            Suite::Counterexample => "counterexample",
            Suite::Triality => "triality",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Args)]
pub struct Options {
    /// Pair id, e.g. A3C2 or D4G2
    #[arg(long, global = true)]
    pub pair: Option<String>,

    /// Scale d of V(d rho)
    #[arg(long, global = true, default_value_t = 1)]
    pub d: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for character products
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Maximum number of terms in any intermediate character
    #[arg(long, global = true, default_value_t = DEFAULT_TERM_GUARD)]
    pub term_guard: usize,

    /// Directory for cached irreducible characters
    #[arg(long, global = true, env = "FOLDBRANCH_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Allow E6F4 branching (the largest supported computation)
    #[arg(long, global = true)]
    pub allow_large: bool,

    /// Upper bounds of the proposition scan, comma separated (default: p(rho) + 2)
    #[arg(long = "box", global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub bounds: Option<Vec<i64>>,
}

/// Validated settings for one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub pair: String,
    pub d: usize,
    pub format: Format,
    pub threads: usize,
    pub term_guard: usize,
    pub cache_dir: Option<PathBuf>,
    pub allow_large: bool,
    pub bounds: Option<Vec<i64>>,
}

pub const MIN_TERM_GUARD: usize = 10_000;

/// Rough peak footprint of one character term, counting the hash map entry,
/// its heap-allocated key, and the copy made when partial products merge.
const BYTES_PER_TERM: u64 = 200;

/// `MemAvailable` from `/proc/meminfo`, where that exists.
fn available_memory() -> Option<u64> {
    let info = std::fs::read_to_string("/proc/meminfo").ok()?;
    let line = info.lines().find(|l| l.starts_with("MemAvailable:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

/// Largest term count that plausibly fits in memory.
pub fn memory_term_cap() -> Option<usize> {
    available_memory().map(|b| usize::try_from(b / BYTES_PER_TERM).unwrap_or(usize::MAX))
}

impl RunConfig {
    pub fn from_cli(command: &Command, options: &Options) -> Result<Self, String> {
        let pair = match (command.positional_pair(), options.pair.as_deref()) {
            (Some(a), Some(b)) if a != b => {
                return Err(format!("conflicting pairs {a:?} and {b:?}"));
            }
            (Some(p), _) | (None, Some(p)) => p.to_string(),
            (None, None) => return Err("missing pair id".into()),
        };
        let config = RunConfig {
            pair,
            d: options.d,
            format: options.format,
            threads: options.threads,
            term_guard: options.term_guard,
            cache_dir: options.cache_dir.clone(),
            allow_large: options.allow_large,
            bounds: options.bounds.clone(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !SUPPORTED_PAIRS.contains(&self.pair.as_str()) {
            return Err(format!(
                "unsupported pair {:?}; expected one of {}",
                self.pair,
                SUPPORTED_PAIRS.join(", ")
            ));
        }
        if self.d == 0 {
            return Err("--d must be at least 1".into());
        }
        if self.threads == 0 {
            return Err("--threads must be at least 1".into());
        }
        if self.term_guard < MIN_TERM_GUARD {
            return Err(format!("--term-guard must be at least {MIN_TERM_GUARD}"));
        }
        Ok(())
    }

    /// Engine limits; the term guard is lowered to what memory can hold so
    /// that large runs stop with a guard error instead of being killed.
    pub fn limits(&self) -> Limits {
        let mut term_guard = self.term_guard;
        if let Some(cap) = memory_term_cap() {
            let cap = cap.max(MIN_TERM_GUARD);
            if cap < term_guard {
                log::info!("term guard lowered from {term_guard} to {cap} to fit available memory");
                term_guard = cap;
            }
        }
        Limits {
            term_guard,
            allow_large: self.allow_large,
            ..Limits::default()
        }
    }
}
