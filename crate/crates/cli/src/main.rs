//! Command-line interface: reads a problem file, dispatches the requested
//! task, and writes the report. Exit codes: 0 success, 2 parse/validation,
//! 3 failed hypothesis, 4 failed certificate.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use omnf_cli::error::CliError;
use omnf_cli::problem::{self, Task};
use omnf_cli::report::Format;
use omnf_cli::run;

#[derive(Parser)]
#[command(
    name = "omnf",
    about = "Exact normal forms of omega-Hamiltonian vector fields with semisymplectic symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Both,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Both => Format::Both,
        }
    }
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Problem file (TOML)
    file: PathBuf,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every group element by its symmetry type
    Classify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check every hypothesis the pipelines rely on
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute a truncated normal form of the Hamiltonian
    NormalForm {
        #[command(flatten)]
        common: CommonArgs,
        /// Constrain the computation to the symmetry group in the file
        #[arg(long)]
        equivariant: bool,
        /// Truncation order (overrides the file's `order`)
        #[arg(long)]
        order: Option<u32>,
    },
    /// Run the task named by the file's `task` tag
    Run {
        #[command(flatten)]
        common: CommonArgs,
        /// Truncation order (overrides the file's `order`)
        #[arg(long)]
        order: Option<u32>,
    },
}

fn execute(cmd: &Command) -> Result<(), CliError> {
    let common = match cmd {
        Command::Classify { common }
        | Command::Verify { common }
        | Command::NormalForm { common, .. }
        | Command::Run { common, .. } => common,
    };
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| CliError::parse(format!("{}: {e}", common.file.display())))?;
    let spec = problem::parse_problem(&text)?;

    let (task, equivariant, order) = match cmd {
        Command::Classify { .. } => (Task::Classify, false, None),
        Command::Verify { .. } => (Task::Verify, false, None),
        Command::NormalForm {
            equivariant, order, ..
        } => (Task::NormalForm, *equivariant, *order),
        Command::Run { order, .. } => {
            let task = spec.task.ok_or_else(|| {
                CliError::validation("`run` requires a `task` tag in the problem file".into())
            })?;
            // a normal-form run with a group block is equivariant by intent
            (
                task,
                task == Task::NormalForm && spec.group.is_some(),
                *order,
            )
        }
    };

    let doc = run::run_task(&spec, task, equivariant, order)?;
    let rendered = doc.render(common.format.into());
    match &common.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
