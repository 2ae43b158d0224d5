mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ibh_core::integer_homology::DEFAULT_CAP;

/// Triply graded integer homology of link diagrams on the disk, annulus and
/// torus.
#[derive(Debug, Parser)]
#[command(name = "ibh", version)]
pub struct Cli {
    /// Chain complex model to compute with.
    #[arg(long, value_enum, default_value_t = BackendArg::Foam, global = true)]
    pub backend: BackendArg,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Largest crossing count accepted.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: usize,

    /// Seed for randomized rewrite orders.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Aps,
    Foam,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the nonzero homology groups of a diagram.
    Homology { file: PathBuf },

    /// Print the chain group ranks of a diagram.
    ChainGroups { file: PathBuf },

    /// Run the internal consistency checks on one or more diagrams.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,

        /// Also check the skein exact sequence at this crossing.
        #[arg(long)]
        exact_at: Option<usize>,

        /// Randomized normalizations per bridge.
        #[arg(long, default_value_t = 100)]
        confluence_runs: usize,
    },

    /// Compare the homology of two diagrams on the same surface.
    Compare {
        first: PathBuf,
        second: PathBuf,

        /// Accept the second table as the first shifted by `I:J`.
        #[arg(long, value_parser = parse_shift, allow_hyphen_values = true)]
        allow_shift: Option<(i64, i64)>,
    },

    /// Run every transition case through both models.
    TableCases,
}

fn parse_shift(text: &str) -> Result<(i64, i64), String> {
    let (i, j) = text.split_once(':').ok_or("expected I:J")?;
    let i = i.trim().parse().map_err(|e| format!("bad I: {e}"))?;
    let j = j.trim().parse().map_err(|e| format!("bad J: {e}"))?;
    Ok((i, j))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    if cli.cap > DEFAULT_CAP {
        eprintln!(
            "warning: cap {} is above {DEFAULT_CAP}; chain groups grow as 2^n and may exhaust memory",
            cli.cap
        );
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
