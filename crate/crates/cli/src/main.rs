use clap::{Parser, Subcommand, ValueEnum};
use homlie_cli::commands::{self, CmdOutput, ConnectionsQuery, InputError, OutputFormat};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exact-arithmetic analysis of split regular Hom-Lie color algebras:
/// axiom validation, root-space decompositions, connections of roots,
/// ideal decompositions and simplicity reports.
#[derive(Parser)]
#[command(name = "homlie", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> OutputFormat {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every defining axiom of the input algebra.
    Validate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the root-space decomposition with respect to a MAGSA.
    Roots {
        #[arg(long)]
        input: PathBuf,
        /// JSON file with explicit MAGSA basis rows (skips the greedy search).
        #[arg(long)]
        magsa: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide connections of roots: a single pair or the full partition.
    Connections {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        magsa: Option<PathBuf>,
        /// Source root as comma-separated rationals over the H0 basis.
        #[arg(long, requires = "to", conflicts_with = "classes", allow_hyphen_values = true)]
        from: Option<String>,
        /// Target root as comma-separated rationals over the H0 basis.
        #[arg(long, requires = "from", allow_hyphen_values = true)]
        to: Option<String>,
        /// Compute the whole quotient of the root system instead.
        #[arg(long)]
        classes: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute U, the per-class ideals and all decomposition certificates.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        magsa: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the simplicity criterion and the independent oracle.
    Simplicity {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        magsa: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit a builtin example document to standard output.
    Example {
        /// One of: sl2, sl2_yau, osp12, heisenberg, sl2_plus_center,
        /// sl2_direct_sum, super_z2_toy, doubled_sl2.
        name: String,
        /// Twist parameter for sl2_yau, as "p/q" (default 2).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run the whole pipeline: validate, roots, connections, decompose,
    /// simplicity; stops at the first structural failure.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        magsa: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_opt(path: &Option<PathBuf>) -> Result<Option<String>, String> {
    match path {
        None => Ok(None),
        Some(p) => read(p).map(Some),
    }
}

fn run(cli: Cli) -> Result<CmdOutput, String> {
    let outcome: Result<CmdOutput, InputError> = match cli.command {
        Command::Validate { input, format } => {
            commands::cmd_validate(&read(&input)?, format.into())
        }
        Command::Roots {
            input,
            magsa,
            format,
        } => commands::cmd_roots(&read(&input)?, read_opt(&magsa)?.as_deref(), format.into()),
        Command::Connections {
            input,
            magsa,
            from,
            to,
            classes,
            format,
        } => {
            let query = if classes {
                ConnectionsQuery::Classes
            } else {
                match (from, to) {
                    (Some(from), Some(to)) => ConnectionsQuery::Pair { from, to },
                    _ => return Err("use either --classes or both --from and --to".to_owned()),
                }
            };
            commands::cmd_connections(
                &read(&input)?,
                read_opt(&magsa)?.as_deref(),
                &query,
                format.into(),
            )
        }
        Command::Decompose {
            input,
            magsa,
            format,
        } => commands::cmd_decompose(&read(&input)?, read_opt(&magsa)?.as_deref(), format.into()),
        Command::Simplicity {
            input,
            magsa,
            format,
        } => commands::cmd_simplicity(&read(&input)?, read_opt(&magsa)?.as_deref(), format.into()),
        Command::Example { name, lambda } => commands::cmd_example(&name, lambda.as_deref()),
        Command::Report {
            input,
            magsa,
            format,
        } => commands::cmd_report(&read(&input)?, read_opt(&magsa)?.as_deref(), format.into()),
    };
    outcome.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.exit as u8)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
