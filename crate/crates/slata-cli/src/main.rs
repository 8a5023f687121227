//! `slata`: validate finite meet-semilattices with adjoint operator pairs,
//! compute their dual spaces, and check the structure correspondences.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 malformed input,
//! 3 a size gate was hit.

mod commands;
mod doc;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "slata",
    version,
    about = "Finite meet-semilattices with adjoint operator pairs: duality and congruence tooling"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit the timing field so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Size gate for the command's enumeration (per-command default).
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Seed for the sampled relation checks of `corpus`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the algebra laws and any declared operator tables.
    Validate { file: String },
    /// Compute the dual space, its families, and the operator relations.
    Dualize { file: String },
    /// Enumerate congruences with quotients, their dual families, and the
    /// round trips.
    Congruences { file: String },
    /// Enumerate the dual-side families and compare with the congruence
    /// count.
    Vietoris { file: String },
    /// Run the full duality round trip with explicit isomorphism witnesses.
    VerifyDuality { file: String },
    /// Generate every small algebra and spot-check the whole theory on it.
    Corpus,
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    let load = |path: &String| -> Result<doc::AlgebraDocument, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
        doc::parse_document(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
    };
    let size = |default: usize| cli.max_size.unwrap_or(default);
    match &cli.cmd {
        Cmd::Validate { file } => commands::cmd_validate(&load(file)?, file),
        Cmd::Dualize { file } => commands::cmd_dualize(&load(file)?, file, size(12)),
        Cmd::Congruences { file } => commands::cmd_congruences(&load(file)?, file, size(8)),
        Cmd::Vietoris { file } => commands::cmd_vietoris(&load(file)?, file, size(12)),
        Cmd::VerifyDuality { file } => commands::cmd_verify_duality(&load(file)?, file, size(10)),
        Cmd::Corpus => commands::cmd_corpus(size(4), cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut rep) => {
            if !cli.no_timing {
                rep.timing_ms = Some(start.elapsed().as_millis());
            }
            let rendered = match cli.format {
                Format::Text => rep.render_text(),
                Format::Json => rep.render_json(),
            };
            print!("{rendered}");
            if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
