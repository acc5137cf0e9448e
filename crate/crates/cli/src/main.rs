//! `regrade`: command-line front end for the regrade library.
//!
//! Exit codes: 0 success, 1 mathematical verdict "false" (not regular, not minimal, invalid
//! pairing or algebra, failing verification), 2 input errors.

mod report;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regrade::builtins::{self, SpecError};
use regrade::identities::DEFAULT_MAX_N;
use regrade::io::{Encoder, IoError};
use regrade::regularity::DEFAULT_STATE_CAP;
use regrade::verify::Suite;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "regrade", version, about = "Regular gradings on finite-dimensional algebras")]
struct Cli {
    /// Add approximate complex values to every scalar (marked "approx").
    #[arg(long, global = true)]
    decimal: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Finite abelian groups.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Bicharacters and 2-cocycles.
    Pairing {
        #[command(subcommand)]
        command: PairingCommand,
    },
    /// Graded algebras.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Regularity and the decomposition matrix. `regular <spec>` is short for `regular check <spec>`.
    #[command(args_conflicts_with_subcommands = true)]
    Regular {
        #[command(subcommand)]
        command: Option<RegularCommand>,
        #[command(flatten)]
        check: Option<CheckArgs>,
    },
    /// Graded (and optionally ordinary) codimensions c_1 .. c_N.
    Codim(CodimArgs),
    /// Run acceptance suites: `all`, `slow`, or a criterion number.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, exponent, elements and the sum of all elements.
    Info { group: String },
}

#[derive(Subcommand)]
enum PairingCommand {
    /// Validate a bicharacter or cocycle and report its decomposition data.
    Check { spec: String },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Validate an algebra specification.
    Validate { spec: String },
    /// Jacobson radical and its grading properties.
    Radical { spec: String },
    /// Print the algebra in the JSON file format.
    Export { spec: String },
}

#[derive(Args)]
struct CheckArgs {
    spec: String,
    #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
    state_cap: usize,
}

#[derive(Subcommand)]
enum RegularCommand {
    /// Decide conditions (i) and (ii); report beta, det, minimality and the structure theorem.
    Check(CheckArgs),
    /// Decomposition matrix, determinant and minimality.
    Matrix { spec: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Tuples {
    All,
    Nonzero,
}

#[derive(Args)]
struct CodimArgs {
    spec: String,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Also compute ordinary codimensions.
    #[arg(long)]
    ordinary: bool,
    #[arg(long, value_enum, default_value_t = Tuples::All)]
    tuples: Tuples,
}

/// Outcome of a verb: the report plus whether its verdict is true.
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub verdict: bool,
}

pub enum Failure {
    Input(String),
    Invalid(Value, String),
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match &e {
            SpecError::Json { source: IoError::Pairing(_) | IoError::Algebra(_) | IoError::Group(_), .. } => {
                Failure::Invalid(serde_json::json!({"valid": false, "reason": e.to_string()}), e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn degree_cap() -> Result<usize, Failure> {
    match std::env::var("REGRADE_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("REGRADE_MAX_N must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let enc = Encoder { decimal: cli.decimal };
    match &cli.command {
        Command::Group { command: GroupCommand::Info { group } } => {
            Ok(report::group_info(&builtins::parse_group(group)?))
        }
        Command::Pairing { command: PairingCommand::Check { spec } } => {
            Ok(report::pairing_check(&enc, &builtins::parse_pairing(spec)?))
        }
        Command::Algebra { command } => match command {
            AlgebraCommand::Validate { spec } => Ok(report::algebra_validate(&builtins::parse_algebra(spec)?)),
            AlgebraCommand::Radical { spec } => report::algebra_radical(&enc, &builtins::parse_algebra(spec)?),
            AlgebraCommand::Export { spec } => {
                let a = builtins::parse_algebra(spec)?;
                let v = enc.algebra(&a);
                Ok(Outcome { text: serde_json::to_string_pretty(&v).unwrap_or_default(), report: v, verdict: true })
            }
        },
        Command::Regular { command, check } => match (command, check) {
            (Some(RegularCommand::Check(args)), _) | (None, Some(args)) => {
                report::regular_check(&enc, &builtins::parse_algebra(&args.spec)?, args.state_cap)
            }
            (Some(RegularCommand::Matrix { spec }), _) => {
                Ok(report::regular_matrix(&enc, &builtins::parse_algebra(spec)?))
            }
            (None, None) => Err(Failure::Input("regular: missing algebra specification".into())),
        },
        Command::Codim(args) => {
            let cap = degree_cap()?;
            if args.max_n == 0 || args.max_n > cap {
                return Err(Failure::Input(format!(
                    "--max-n must be between 1 and the degree cap {cap} (set REGRADE_MAX_N to raise it)"
                )));
            }
            let a = builtins::parse_algebra(&args.spec)?;
            report::codim(&a, args.max_n, cap, args.ordinary, args.tuples == Tuples::Nonzero)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(Failure::Input)?;
            Ok(report::verify(suite))
        }
    }
}

fn emit(format: Format, report: &Value, text: &str) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(report).unwrap_or_default(),
        Format::Text => text.trim_end().to_string(),
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            emit(cli.format, &outcome.report, &outcome.text);
            ExitCode::from(if outcome.verdict { 0 } else { 1 })
        }
        Err(Failure::Invalid(report, message)) => {
            emit(cli.format, &report, &format!("invalid: {message}"));
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
