//! The `paragroup` command line.
//!
//! Reports go to standard output and diagnostics to standard error. Exit
//! codes: 0 ok, 2 parse or validation failure, 3 size budget exceeded,
//! 4 not completely simple, 5 verification failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::bicyclic::{no_primitive_witness, BicyclicElement};
use crate::rees::{self, verify_decomposition, ReesError, DEFAULT_MAX_ORDER};
use crate::semigroup::FiniteSemigroup;
use crate::structure::{
    is_completely_simple, is_simple, maximal_subgroup, primitive_idempotent_indices, NotCompletelySimple,
};
use crate::zoo::{make_standard, random_rees, StandardKind};

pub mod format;

pub use format::{parse_json, to_json, DecompositionFile, ReesSpecFile, SemigroupFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Budget(String),
    #[error("not completely simple: {0}")]
    NotCompletelySimple(NotCompletelySimple),
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Budget(_) => 3,
            CliError::NotCompletelySimple(_) => 4,
            CliError::VerificationFailed => 5,
        }
    }
}

impl From<ReesError> for CliError {
    fn from(err: ReesError) -> Self {
        match err {
            ReesError::SizeBudgetExceeded { .. } => CliError::Budget(err.to_string()),
            ReesError::NotCompletelySimple(witness) => CliError::NotCompletelySimple(witness),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "paragroup",
    version,
    about = "Finite semigroups, Rees matrix semigroups and their decompositions"
)]
pub struct Cli {
    /// Largest semigroup order any command will build or analyze.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report idempotents, simplicity and maximal subgroups of a Cayley table.
    Analyze { input: PathBuf },
    /// Build the Cayley table of a Rees matrix semigroup.
    Construct {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decompose a completely simple semigroup as a Rees matrix semigroup.
    Decompose {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a decomposition against its source semigroup.
    Verify { source: PathBuf, decomposition: PathBuf },
    /// Write a standard or random semigroup.
    Zoo {
        #[command(subcommand)]
        kind: ZooCommand,
    },
    /// Check the descending idempotent chain of the bicyclic monoid.
    Bicyclic {
        #[arg(long = "check-primitive-up-to", value_parser = clap::value_parser!(u64).range(1..))]
        check_primitive_up_to: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZooCommand {
    LeftZero {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    RightZero {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    RectangularBand {
        k: usize,
        m: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    CyclicGroup {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    ZeroSemigroup {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    MinSemilattice {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    SymmetricGroup {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    FullTransformationMonoid {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A seeded random Rees matrix semigroup over a cyclic group.
    RandomRees {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_group: usize,
        #[arg(long, default_value_t = 4)]
        max_x: usize,
        #[arg(long, default_value_t = 4)]
        max_y: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

impl ZooCommand {
    fn standard(&self) -> Option<(StandardKind, &Path)> {
        Some(match self {
            ZooCommand::LeftZero { n, output } => (StandardKind::LeftZero(*n), output),
            ZooCommand::RightZero { n, output } => (StandardKind::RightZero(*n), output),
            ZooCommand::RectangularBand { k, m, output } => (StandardKind::RectangularBand(*k, *m), output),
            ZooCommand::CyclicGroup { n, output } => (StandardKind::CyclicGroup(*n), output),
            ZooCommand::ZeroSemigroup { n, output } => (StandardKind::ZeroSemigroup(*n), output),
            ZooCommand::MinSemilattice { n, output } => (StandardKind::MinSemilattice(*n), output),
            ZooCommand::SymmetricGroup { n, output } => (StandardKind::SymmetricGroup(*n), output),
            ZooCommand::FullTransformationMonoid { n, output } => (StandardKind::FullTransformationMonoid(*n), output),
            ZooCommand::RandomRees { .. } => return None,
        })
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn in_file(path: &Path, err: CliError) -> CliError {
    match err {
        CliError::Invalid(message) => CliError::Invalid(format!("{}: {message}", path.display())),
        other => other,
    }
}

fn check_budget(order: u128, max_order: usize) -> Result<(), CliError> {
    if order > max_order as u128 {
        Err(CliError::Budget(format!(
            "order {order} exceeds the size budget of {max_order} (see --max-order)"
        )))
    } else {
        Ok(())
    }
}

/// Reads and validates a Cayley table file.
pub fn load_semigroup(path: &Path, max_order: usize) -> Result<FiniteSemigroup, CliError> {
    let file: SemigroupFile = parse_json(&read(path)?).map_err(|e| in_file(path, e))?;
    check_budget(file.order as u128, max_order)?;
    file.to_semigroup("").map_err(|e| in_file(path, e))
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub verified: bool,
    pub idempotent_count: usize,
    pub idempotents: Vec<usize>,
    pub is_simple: bool,
    pub primitive_idempotents: Vec<usize>,
    pub is_completely_simple: bool,
    /// `|H_e|` for each primitive idempotent; empty unless completely simple.
    pub maximal_subgroup_orders: Vec<usize>,
}

pub fn analyze(s: &FiniteSemigroup) -> Result<AnalysisReport, CliError> {
    let idempotents = s.idempotent_indices();
    let primitive = primitive_idempotent_indices(s);
    let completely_simple = is_completely_simple(s);
    let maximal_subgroup_orders = if completely_simple {
        primitive
            .iter()
            .map(|&e| {
                let e = s.element(e).expect("in range");
                maximal_subgroup(s, e).map(|h| h.order())
            })
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Invalid(e.to_string()))?
    } else {
        Vec::new()
    };
    Ok(AnalysisReport {
        order: s.order(),
        verified: true,
        idempotent_count: idempotents.len(),
        idempotents,
        is_simple: is_simple(s),
        primitive_idempotents: primitive,
        is_completely_simple: completely_simple,
        maximal_subgroup_orders,
    })
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub bijective: bool,
    pub homomorphic: bool,
    pub size_consistent: bool,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
struct BicyclicSummary {
    checked: u64,
    strict_pairs: u64,
    all_strict: bool,
    first_pair: [[u64; 2]; 2],
    last_pair: [[u64; 2]; 2],
}

fn pair(e: BicyclicElement) -> [u64; 2] {
    [e.a, e.b]
}

/// Runs one command, writing any report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let max_order = cli.max_order;
    let emit = |out: &mut dyn Write, text: String| {
        out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
    };
    match cli.command {
        Command::Analyze { input } => {
            let s = load_semigroup(&input, max_order)?;
            emit(out, to_json(&analyze(&s)?))
        }
        Command::Construct { input, output } => {
            let spec: ReesSpecFile = parse_json(&read(&input)?).map_err(|e| in_file(&input, e))?;
            let r = spec.to_rees().map_err(|e| in_file(&input, e))?;
            let cayley = r.to_cayley(max_order)?;
            write(&output, &to_json(&SemigroupFile::from_semigroup(&cayley.semigroup)))
        }
        Command::Decompose { input, output } => {
            let s = load_semigroup(&input, max_order)?;
            let d = rees::decompose(&s)?;
            write(&output, &to_json(&DecompositionFile::from_decomposition(&d)))
        }
        Command::Verify { source, decomposition } => {
            let s = load_semigroup(&source, max_order)?;
            let file: DecompositionFile = parse_json(&read(&decomposition)?).map_err(|e| in_file(&decomposition, e))?;
            let d = file.to_decomposition(s).map_err(|e| in_file(&decomposition, e))?;
            let report = verify_decomposition(&d);
            emit(
                out,
                to_json(&VerifyReport {
                    bijective: report.bijective,
                    homomorphic: report.homomorphic,
                    size_consistent: report.size_consistent,
                    passed: report.passed(),
                }),
            )?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Zoo { kind } => {
            if let Some((standard, output)) = kind.standard() {
                check_budget(standard.order(), max_order)?;
                let s = make_standard(standard).map_err(|e| CliError::Invalid(e.to_string()))?;
                return write(output, &to_json(&SemigroupFile::from_semigroup(&s)));
            }
            let ZooCommand::RandomRees {
                seed,
                max_group,
                max_x,
                max_y,
                output,
            } = kind
            else {
                unreachable!("standard kinds handled above")
            };
            let r = random_rees(seed, max_group, max_x, max_y).map_err(|e| CliError::Invalid(e.to_string()))?;
            write(&output, &to_json(&ReesSpecFile::from_rees(&r)))
        }
        Command::Bicyclic { check_primitive_up_to } => {
            let links = no_primitive_witness(check_primitive_up_to).map_err(|e| CliError::Invalid(e.to_string()))?;
            let strict = links.iter().filter(|l| l.is_strict()).count() as u64;
            let (first, last) = (links[0], links[links.len() - 1]);
            let summary = BicyclicSummary {
                checked: check_primitive_up_to,
                strict_pairs: strict,
                all_strict: strict == check_primitive_up_to,
                first_pair: [pair(first.lower), pair(first.upper)],
                last_pair: [pair(last.lower), pair(last.upper)],
            };
            emit(out, to_json(&summary))?;
            if summary.all_strict {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}
