use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mstaq_cli::commands::{self, Backend, Report, Target};
use mstaq_cli::{load_circuit, CliError, EXIT_VERIFY};

#[derive(Parser)]
#[command(name = "mstaq", version, about = "Qubit circuits as real multivectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Ga,
    Matrix,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Run a circuit file on the multivector and/or matrix simulator.
    Simulate {
        /// Circuit file.
        file: String,
        #[arg(long, value_enum, default_value = "both")]
        backend: BackendArg,
        /// Computational basis input such as `01`; defaults to all zeros.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Euler angles about the universality axes and the best H/T word.
    Decompose {
        /// Target `exp(i n theta)` as `nx,ny,nz,theta` (radians).
        #[arg(long, conflicts_with = "su2", allow_hyphen_values = true)]
        target: Option<String>,
        /// Target SU(2) matrix as 8 numbers: re,im of u00,u01,u10,u11.
        #[arg(long, allow_hyphen_values = true)]
        su2: Option<String>,
        /// Seed for a random target when neither --target nor --su2 is given.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rotors, angles and axes of the two universality circuits.
    Universality {
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<(Report, bool), CliError> {
    match cli.command {
        Command::Simulate {
            file,
            backend,
            input,
            json,
        } => {
            let circuit = load_circuit(&file)?;
            let backend = match backend {
                BackendArg::Ga => Backend::Ga,
                BackendArg::Matrix => Backend::Matrix,
                BackendArg::Both => Backend::Both,
            };
            Ok((
                commands::simulate(&circuit, backend, input.as_deref())?,
                json,
            ))
        }
        Command::Decompose {
            target,
            su2,
            seed,
            max_len,
            json,
        } => {
            let t = match (target, su2) {
                (Some(t), _) => Target::parse_axis_angle(&t)?,
                (None, Some(u)) => Target::parse_su2(&u)?,
                (None, None) => Target::Random(seed),
            };
            Ok((commands::decompose(&t, max_len)?, json))
        }
        Command::Universality { json } => Ok((commands::universality()?, json)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((report, json)) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                );
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
