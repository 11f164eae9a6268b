//! `chevalley`: batch front end for the exact Chevalley group library.
//!
//! Exit status is 0 on success, 1 when the input is valid but the operation
//! has no answer (a non-unimodular vector, a non-unit corner, a failed
//! check), and 2 for malformed invocations or inputs. Errors are written to
//! stderr as `{"error": {"kind": ..., "detail": ...}}`.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "chevalley", version, about = "Exact Chevalley groups in minuscule representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every randomized input (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for batch work; output order does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// The E7 identities and the certificate sweep.
    #[value(name = "paper", alias = "identities")]
    Identities,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the roots of a Cartan type, or the members of a subsystem.
    Roots {
        /// `A5`, `D5`, `E6`, `E7`, ...
        #[arg(long = "type", value_name = "TYPE")]
        cartan: Option<String>,
        /// A subsystem label such as `A1+D6@E7`.
        #[arg(long, conflicts_with = "cartan")]
        subsystem: Option<String>,
        #[arg(long)]
        positive: bool,
    },
    /// Export a weight diagram.
    Diagram {
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Replay a word (or a random one) as a matrix.
    Elem {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        ring: String,
        /// A JSON word, or an object with a `word` field.
        #[arg(long = "in", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Length of a seeded random elementary word.
        #[arg(long)]
        random: Option<usize>,
        /// Also apply the element to this JSON vector.
        #[arg(long)]
        apply: Option<PathBuf>,
    },
    /// Split `g = v g1 u` at an invertible highest-weight corner.
    Decompose {
        #[arg(long)]
        rep: String,
        /// Ring, when the input does not name one.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        pivot: Option<usize>,
        /// A matrix, a word, or an element object with `matrix`/`word`.
        #[arg(long = "in", conflicts_with = "random")]
        input: Option<PathBuf>,
        #[arg(long)]
        random: Option<usize>,
    },
    /// Find `h` with `(h v)^μ = 1` for a unimodular `v`.
    Reduce {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        ring: String,
        /// A JSON array of ring elements, or an object with a `vector` field.
        #[arg(long = "in", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Use a seeded random unimodular vector.
        #[arg(long)]
        random: bool,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        minimize: bool,
    },
    /// Run a named suite of identity checks and report each.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
    },
    /// Weyl word over a subsystem carrying one root to another.
    Conjugate {
        /// Root in simple-root coordinates, e.g. `[1,1,1,1,0,0,0]`.
        #[arg(long)]
        root: String,
        /// Defaults to the first simple root.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value = "A1+D6@E7")]
        subsystem: String,
        /// Also emit the tagged certificate for `z_root(xi, zeta)`.
        #[arg(long)]
        certificate: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            commands::report(&commands::CliError::usage("Usage", e.to_string().trim()));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            commands::report(&e);
            ExitCode::from(e.exit_code())
        }
    }
}
