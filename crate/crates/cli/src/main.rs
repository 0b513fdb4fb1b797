use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coxeter_euler::recursion::{load_engine, resolve_cache_path, save_engine, CacheStatus, Engine};
use coxeter_euler::Error;

mod compute;
mod table;
mod verify;

/// Generalized Euler numbers K(W): orbits of maximal chains in the
/// intersection lattice of a finite Coxeter arrangement.
#[derive(Parser, Debug)]
#[command(name = "coxeter-euler", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute K(W) for a group spec such as E6, A2xB3 or I2(5).
    Compute {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Recursion)]
        method: MethodArg,
        #[command(flatten)]
        common: Common,
        /// Write the intersection lattice as JSON (brute-force methods only).
        #[arg(long)]
        dump_lattice: Option<PathBuf>,
    },
    /// Print A, B, D, bar-D, exceptional and dihedral values.
    Table {
        #[arg(long, default_value_t = 12)]
        max_rank: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the cross-validation suite.
    Verify {
        /// Also brute-force A5, B5, D5, F4 and E6.
        #[arg(long)]
        deep: bool,
        #[arg(long, default_value_t = 12)]
        max_rank: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Write the intersection lattice of a brute-force supported group as JSON.
    ExportLattice {
        spec: String,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Include the reflection model (roots, generators).
        #[arg(long)]
        with_model: bool,
    },
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Threads for brute-force chain enumeration. Results do not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
    /// Recursion cache file (overridden by COXETER_CACHE).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Recursion,
    Bruteforce,
    Closed,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Exit statuses shared by every command.
pub(crate) mod exit {
    pub const FAILURE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const UNSUPPORTED: u8 = 3;
    pub const DISAGREEMENT: u8 = 4;
}

pub(crate) fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::NotFinite(_) | Error::RankOutOfRange(_) => exit::PARSE,
        Error::UnsupportedBruteForce { .. } | Error::GroupTooLarge { .. } => exit::UNSUPPORTED,
        Error::Disagreement { .. } => exit::DISAGREEMENT,
        _ => exit::FAILURE,
    }
}

/// Engine backed by the cache file, if any. Unreadable caches are ignored with a warning.
pub(crate) fn open_engine(explicit: Option<&Path>) -> (Engine, Option<PathBuf>) {
    let Some(path) = resolve_cache_path(explicit) else {
        return (Engine::new(), None);
    };
    match load_engine(&path) {
        Ok((engine, status)) => {
            if status == CacheStatus::Stale {
                eprintln!("note: ignoring cache {} from another engine version", path.display());
            }
            (engine, Some(path))
        }
        Err(e) => {
            eprintln!("warning: {e}; starting with an empty cache");
            (Engine::new(), Some(path))
        }
    }
}

pub(crate) fn store_engine(engine: &Engine, path: Option<&Path>) {
    if let Some(p) = path {
        if let Err(e) = save_engine(engine, p) {
            eprintln!("warning: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Compute { spec, method, common, dump_lattice } => {
            compute::run(&spec, method, &common, dump_lattice.as_deref())
        }
        Command::Table { max_rank, common } => table::run(max_rank, &common),
        Command::Verify { deep, max_rank, common } => verify::run(deep, max_rank, &common),
        Command::ExportLattice { spec, output, with_model } => {
            compute::export_lattice(&spec, output.as_deref(), with_model)
        }
    };
    ExitCode::from(status)
}
