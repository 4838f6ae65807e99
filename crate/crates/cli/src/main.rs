//! `cyclorder` command-line tool. Data goes to stdout as JSON, diagnostics to
//! stderr.
//!
//! Exit codes: 0 success, 1 ordering invalid (`verify`) or a failed file
//! (`batch-check`), 2 no removable basis, 3 no cyclic ordering, 4 bad input
//! or any other error.

mod batch;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use cyclorder::catalog::{fano, random_sparse_paving, uniform};
use cyclorder::io::{
    basis_to_json, load, load_order, matroid_to_json, order_to_json, partition_to_json, save,
};
use cyclorder::removal::RemovalError;
use cyclorder::{
    beta_ground, find_bruteforce, find_ordering, find_removable_basis, gamma, is_tight,
    partition_into_independent, verify, CyclicOrdering, OrderingError, PavingMatroid,
};
use serde::Serialize;

const INVALID: u8 = 1;
const NO_REMOVABLE_BASIS: u8 = 2;
const NO_ORDERING: u8 = 3;
const FAILURE: u8 = 4;

/// Environment variable that replaces the `--seed` of `gen sparse`.
const SEED_VAR: &str = "CYCLORDER_SEED";

#[derive(Parser)]
#[command(
    name = "cyclorder",
    version,
    about = "Densities, partitions and cyclic base orderings of paving matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maximum density, the density of the ground set and whether they agree.
    Gamma { matroid: PathBuf },
    /// Split the ground set into independent sets.
    Partition { matroid: PathBuf },
    /// Print a basis whose removal keeps the density condition.
    RemoveBasis { matroid: PathBuf },
    /// Print a cyclic ordering.
    Order {
        matroid: PathBuf,
        /// Use exhaustive search instead of the constructive algorithm.
        #[arg(long)]
        brute: bool,
    },
    /// Check an ordering file against a matroid.
    Verify { matroid: PathBuf, order: PathBuf },
    /// Check every `*.json` matroid in a directory, one JSON line per file.
    BatchCheck {
        dir: PathBuf,
        /// Skip the ordering search for matroids with more elements.
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads (default: one per core).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Write a matroid file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (default: stdout).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The uniform matroid U_{r,n}.
    Uniform {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// The Fano plane.
    Fano,
    /// A seeded random sparse paving matroid.
    Sparse {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// Number of non-bases to aim for.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct GammaReport {
    gamma: String,
    #[serde(rename = "beta_E")]
    beta_e: String,
    tight: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { FAILURE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cyclorder: {e:#}");
            ExitCode::from(FAILURE)
        }
    }
}

fn read_matroid(path: &Path) -> anyhow::Result<PavingMatroid> {
    load(path).with_context(|| format!("cannot load matroid {}", path.display()))
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Gamma { matroid } => {
            let m = read_matroid(&matroid)?;
            let report = GammaReport {
                gamma: gamma(&m).to_string(),
                beta_e: beta_ground(&m).to_string(),
                tight: is_tight(&m),
            };
            println!("{}", serde_json::to_string(&report)?);
            Ok(0)
        }
        Command::Partition { matroid } => {
            let m = read_matroid(&matroid)?;
            let p = partition_into_independent(&m)?;
            println!("{}", partition_to_json(&p));
            Ok(0)
        }
        Command::RemoveBasis { matroid } => {
            let m = read_matroid(&matroid)?;
            match find_removable_basis(&m) {
                Ok(b) => {
                    println!("{}", basis_to_json(b));
                    Ok(0)
                }
                Err(
                    e @ (RemovalError::NoRemovableBasis | RemovalError::PreconditionGammaNotTight),
                ) => {
                    eprintln!("cyclorder: {e}");
                    Ok(NO_REMOVABLE_BASIS)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Order { matroid, brute } => {
            let m = read_matroid(&matroid)?;
            let found = if brute {
                find_bruteforce(&m)?
            } else {
                find_ordering(&m)?
            };
            match found {
                Some(o) => {
                    recheck(&m, &o)?;
                    println!("{}", order_to_json(&o));
                    Ok(0)
                }
                None => {
                    eprintln!(
                        "cyclorder: no cyclic ordering: gamma = {} exceeds |E|/r = {}",
                        gamma(&m),
                        beta_ground(&m)
                    );
                    Ok(NO_ORDERING)
                }
            }
        }
        Command::Verify { matroid, order } => {
            let m = read_matroid(&matroid)?;
            let seq = load_order(&order)
                .with_context(|| format!("cannot load ordering {}", order.display()))?;
            match verify(&m, &seq) {
                Ok(true) => Ok(0),
                Ok(false) => {
                    eprintln!(
                        "cyclorder: some window of {} elements is not a basis",
                        m.rank_of_matroid()
                    );
                    Ok(INVALID)
                }
                Err(OrderingError::NotAPermutation) => {
                    eprintln!(
                        "cyclorder: the ordering is not a permutation of 0..{}",
                        m.n()
                    );
                    Ok(INVALID)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::BatchCheck { dir, max_n, jobs } => batch::run(&dir, max_n, jobs),
        Command::Gen { kind, out } => {
            let m = match kind {
                GenKind::Uniform { r, n } => uniform(r, n)?,
                GenKind::Fano => fano(),
                GenKind::Sparse { r, n, count, seed } => {
                    let seed = match std::env::var(SEED_VAR) {
                        Ok(text) => text.trim().parse().with_context(|| {
                            format!("{SEED_VAR}={text:?} is not an unsigned integer")
                        })?,
                        Err(_) => seed,
                    };
                    random_sparse_paving(seed, r, n, count)?
                }
            };
            match out {
                Some(path) => save(&m, &path)?,
                None => println!("{}", matroid_to_json(&m)),
            }
            Ok(0)
        }
    }
}

/// Every ordering is checked once more before it is printed.
fn recheck(m: &PavingMatroid, o: &CyclicOrdering) -> anyhow::Result<()> {
    if verify(m, o.as_slice())? {
        Ok(())
    } else {
        bail!(
            "internal error: constructed ordering {:?} failed verification",
            o.as_slice()
        )
    }
}
