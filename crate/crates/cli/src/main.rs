use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hamsub::commands::{self, Format, TrajectoryArgs};
use hamsub::CliError;

#[derive(Parser)]
#[command(
    name = "hamsub",
    version,
    about = "Invariant subspaces of discrete-time LQ Hamiltonian systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension and rank report of a system as JSON.
    Analyze {
        file: PathBuf,
        /// Include the system and all computed matrices.
        #[arg(long)]
        full: bool,
        /// Rank tolerance factor (default: machine epsilon).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Solve a finite-horizon problem with the closed-form solution.
    Trajectory {
        file: PathBuf,
        /// Initial state, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        /// Horizon length.
        #[arg(long)]
        kf: usize,
        /// Terminal state; the endpoint is free when omitted.
        #[arg(long, allow_hyphen_values = true)]
        xf: Option<String>,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Check the embedded example against its printed bases.
    Golden {
        /// Also print the rank report.
        #[arg(long)]
        report: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = &mut std::io::stdout().lock();
    match cli.command {
        Command::Analyze { file, full, tol } => commands::analyze_file(&file, full, tol, stdout),
        Command::Trajectory {
            file,
            x0,
            kf,
            xf,
            out,
            format,
        } => {
            let args = TrajectoryArgs {
                x0: &x0,
                horizon: kf,
                xf: xf.as_deref(),
                format: match format {
                    OutputFormat::Csv => Format::Csv,
                    OutputFormat::Json => Format::Json,
                },
            };
            commands::trajectory_file(&file, &args, out.as_deref())
        }
        Command::Golden { report } => commands::golden(report, stdout),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::GoldenFail) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
