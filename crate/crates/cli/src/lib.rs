//! Instance files and report-producing commands behind the `dingtri` binary.

pub mod commands;
pub mod instance;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{FuzzParams, Options, Record};
use dingtri_core::par::Exec;

#[derive(Debug, Parser)]
#[command(
    name = "dingtri",
    version,
    about = "Ding projective and injective modules over triangular matrix algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Largest resolution length explored before giving up.
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub cutoff: u64,
    /// Attach wall-clock timings to each record (makes output nondeterministic).
    #[arg(long)]
    pub timings: bool,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

impl Common {
    fn options(&self) -> Options {
        Options {
            cutoff: self.cutoff as usize,
            timings: self.timings,
            exec: if self.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            },
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a file and check every object.
    Validate { file: PathBuf },
    /// Report homological data for every module and triple.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check one statement on every applicable object.
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(commands::THEOREMS))]
        theorem: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check random triples over a ring of the file.
    Fuzz {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Ring to fuzz over; defaults to the first fuzz task's ring or the first ring.
        #[arg(long)]
        ring: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn emit(out: &mut impl Write, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_line())?;
    }
    out.flush()
}

/// Runs a parsed command, writing records to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let file = match &cli.command {
        Command::Validate { file }
        | Command::Analyze { file, .. }
        | Command::Verify { file, .. }
        | Command::Fuzz { file, .. } => file,
    };
    let inst = match instance::load(file) {
        Ok(inst) => inst,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", file.display());
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Validate { .. } => {
            let _ = writeln!(
                err,
                "{}: ok ({} algebras, {} rings, {} modules, {} triples)",
                file.display(),
                inst.algebras.len(),
                inst.rings.len(),
                inst.modules.len(),
                inst.triples.len()
            );
            return 0;
        }
        Command::Analyze { common, .. } => Ok((commands::analyze(&inst, &common.options()), None)),
        Command::Verify { theorem, common, .. } => commands::verify(&inst, theorem, &common.options()).map(|r| {
            let status = commands::verify_status(&r);
            (r, Some(status))
        }),
        Command::Fuzz {
            seed,
            count,
            max_dim,
            ring,
            common,
            ..
        } => {
            let params = FuzzParams {
                ring: ring.clone(),
                seed: *seed,
                count: *count,
                max_dim: *max_dim,
            };
            commands::fuzz(&inst, &params, &common.options()).map(|r| {
                let status = if commands::verify_status(&r) == 1 { 1 } else { 0 };
                (r, Some(status))
            })
        }
    };
    match result {
        Ok((records, status)) => {
            if let Err(e) = emit(out, &records) {
                let _ = writeln!(err, "write error: {e}");
                return 3;
            }
            if status.is_some() {
                let (pass, fail, inconclusive) = commands::tally(&records);
                let _ = writeln!(err, "pass {pass}, fail {fail}, inconclusive {inconclusive}");
            }
            status.unwrap_or(0)
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
