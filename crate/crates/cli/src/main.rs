//! `spel`: batch front end for the Standpoint EL+ reasoner.

mod commands;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "spel", version, about = "Standpoint EL+ reasoner")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Accept identifiers with the reserved `_` prefix, as in `normalize` output.
    #[arg(long)]
    pub allow_reserved: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide satisfiability of a knowledge base.
    Check {
        file: PathBuf,
        /// Print the derivation of the refutation fact when UNSAT.
        #[arg(long)]
        trace: bool,
        /// Saturate to the full fixpoint even after a refutation.
        #[arg(long)]
        no_early_exit: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Decide entailment of each statement in a query file.
    Entail {
        kb: PathBuf,
        #[arg(long)]
        query: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print the normal form of a knowledge base.
    Normalize {
        file: PathBuf,
        /// Also report input and output sizes.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print every fact of the saturated store.
    Saturate {
        file: PathBuf,
        /// Print each fact with its derivation.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Write the Datalog rules and facts for a knowledge base.
    ExportDatalog {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a finite model within the given bounds.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_domain: usize,
        #[arg(long, default_value_t = 3)]
        max_prec: usize,
        /// Grounding step budget.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(commands::EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}
