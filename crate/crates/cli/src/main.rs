//! `hgl`: reports on Hopf-Galois structures of dihedral extensions.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check, 2 on a usage
//! error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::CommandError;

#[derive(Parser)]
#[command(name = "hgl", version, about = "Hopf-Galois structures on dihedral extensions of Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// The p + 2 regular subgroups normalized by λ(D_p), with checks.
    Catalog {
        #[arg(long)]
        p: u64,
    },
    /// Exhaustive enumeration of regular subgroups normalized by λ(G).
    Enumerate {
        /// d3 or klein4.
        #[arg(long)]
        group: String,
    },
    /// Descend one structure to its Hopf algebra and check it.
    Descend {
        #[arg(long)]
        p: u64,
        /// rho, lambda or N<c>.
        #[arg(long)]
        structure: String,
        /// cubic:<v> (p = 3) or split.
        #[arg(long)]
        field: String,
    },
    /// Hopf and algebra isomorphism classes and decompositions at p = 3.
    Classify {
        #[arg(long)]
        p: u64,
        /// cubic:<v>.
        #[arg(long)]
        field: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match &cli.command {
        Command::Catalog { p } => commands::catalog_report(*p),
        Command::Enumerate { group } => commands::enumerate_report(group),
        Command::Descend { p, structure, field } => commands::descend_report(*p, structure, field),
        Command::Classify { p, field } => commands::classify_report(*p, field),
    };
    let report = match report {
        Ok(r) => r,
        Err(CommandError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CommandError::Failed(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = if cli.json { report.to_json() } else { report.to_text() };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
