//! `qschur`: batch driver for the queer q-Schur superalgebra library.

mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::{CliError, EXIT_FAILED, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact computations in twisted queer q-Schur superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,

    #[arg(long, global = true, default_value_t = 1)]
    pub r: u32,

    /// Block label as comma separated parts, e.g. `1,1`.
    #[arg(long, global = true)]
    pub mu: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = queer_schur::repr::DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = queer_schur::oracle::DEFAULT_MAX_R)]
    pub oracle_max_r: u32,

    /// Also close submodules under the derived odd generators.
    #[arg(long, global = true)]
    pub include_derived_generators: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the basis `M(n, r)`.
    Basis,
    /// Apply a generator word to a basis element.
    Act {
        /// Basis index, e.g. `(1,0;0,0|0,0;0,0)`.
        #[arg(long)]
        basis: String,
        /// Comma separated generators, applied right to left, e.g. `E1,F1`.
        #[arg(long)]
        word: String,
    },
    /// Check every defining relation and the structural properties.
    Verify,
    /// Compare the action formulas with the Hecke-Clifford model.
    OracleCheck,
    /// Decompose one block, or the whole regular module.
    Decompose,
    /// Block, weight and summand dimension tables.
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli).and_then(|(body, ok)| emit(&cli, &body).map(|_| ok)) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("qschur: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}
