use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latglue_core::{Error, Limits};
use serde_json::{json, Value};

mod commands;
mod schema;

#[derive(Parser, Debug)]
#[command(name = "latglue", version, about = "Exact computations with even lattices, glue and (-2)-curve graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub caps: Caps,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Reserved; every algorithm is deterministic.
    #[arg(long, global = true)]
    pub seedless: bool,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Caps {
    /// Largest discriminant group walked by subgroup scans.
    #[arg(long, global = true, env = "GLUE_MAX_DISC_GROUP", default_value_t = 10_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_disc_group: u64,
    /// Largest rank for short-vector enumeration.
    #[arg(long, global = true, default_value_t = 26, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rank: u64,
    /// Largest curve graph.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_graph: u64,
}

impl Caps {
    pub fn limits(&self) -> Limits {
        Limits {
            max_group_order: self.max_disc_group,
            max_rank: self.max_rank as usize,
            max_graph: self.max_graph as usize,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Discriminant group, generator lifts and the q/b tables.
    Discform { gram: PathBuf },
    /// Roots of a negative definite lattice and their ADE type.
    Roots {
        gram: PathBuf,
        /// Also list every root.
        #[arg(long)]
        all: bool,
    },
    /// Overlattices, saturation and threshold scans.
    Glue {
        #[command(subcommand)]
        op: GlueOp,
    },
    /// Curve graphs.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Orthogonal complement of a sublattice.
    Complement { ambient: PathBuf, sub: PathBuf },
    /// Runs every check of the paper replication and reports pass/fail.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
pub enum GlueOp {
    /// All even overlattices, one per isotropic subgroup.
    Overlattices { gram: PathBuf },
    /// Saturation of a sublattice in its ambient lattice.
    Saturate { ambient: PathBuf, sub: PathBuf },
    /// Overlattices of A_{p-1}^r for r = 1..rmax.
    Scan {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        rmax: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GraphOp {
    /// Elliptic configurations, orthogonal vertices and their lattice.
    Analyze { graph: PathBuf },
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => 2,
            Error::Resource { .. } => 3,
            Error::Verification(_) | Error::Internal(_) => 1,
        };
        CliError {
            code,
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

/// What a subcommand produced: the JSON document, a text rendering and
/// the exit code.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

fn emit_error(e: &CliError) {
    let v = json!({ "error": { "kind": e.kind, "message": e.message, "exit_code": e.code } });
    eprintln!("{v}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            emit_error(&CliError::usage(e.to_string().trim_end().to_string()));
            return ExitCode::from(2);
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
                    if matches!(cli.command, Command::VerifyPaper) {
                        eprint!("{}", out.text);
                    }
                }
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            emit_error(&e);
            ExitCode::from(e.code)
        }
    }
}
