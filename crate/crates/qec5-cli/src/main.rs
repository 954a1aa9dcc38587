//! `qec5` — command-line front end for the five-qubit code simulator.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qec5::noise::NoiseSchedule;
use qec5::{ErrorCondition, LogicalGate};
use qec5_cli::commands::{
    cmd_advantage, cmd_baseline, cmd_codewords, cmd_run, cmd_sweep, cmd_syndrome_table, RunContext,
};
use qec5_cli::config::{expand_t2, load_noise_file, validate_probability, DEFAULT_T2_MS};
use qec5_cli::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "qec5",
    version,
    about = "Simulator of the five-qubit perfect quantum error correcting code",
    long_about = "Runs encoded logical gate experiments on the five-qubit code: encode, \
                  apply a logical gate, inject one of the 16 single-qubit error conditions, \
                  decode, correct coherently, and characterize the effective channel by \
                  process tomography."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format (CSV covers fidelity tables only)
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Reserved: echoed into the report; the simulator is deterministic
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct NoiseArgs {
    /// Noise schedule JSON file
    #[arg(long, value_name = "PATH", conflicts_with_all = ["dephasing_p", "t2", "duration"])]
    noise: Option<PathBuf>,
    /// Uniform dephasing probability per qubit at every stage boundary
    #[arg(long, value_name = "P", conflicts_with_all = ["t2", "duration"])]
    dephasing_p: Option<f64>,
    /// Per-qubit T2* in ms (one value or five, comma separated); requires --duration
    #[arg(
        long,
        value_name = "MS,..",
        value_delimiter = ',',
        requires = "duration"
    )]
    t2: Option<Vec<f64>>,
    /// Total experiment duration in ms, split evenly over the four stages
    /// (T2* defaults to 100 ms per qubit)
    #[arg(long, value_name = "MS")]
    duration: Option<f64>,
}

#[derive(Args)]
struct TomographyArgs {
    /// Assume the identity response is E instead of measuring it
    #[arg(long)]
    assume_identity_response: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the two codewords as signed ket lists and verify them
    Codewords {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Derive and print the syndrome -> correction table
    SyndromeTable {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one experiment (gate + error condition) with full tomography
    Run {
        /// Logical gate to apply
        #[arg(long, value_parser = parse_gate)]
        gate: LogicalGate,
        /// Error condition to inject
        #[arg(long, value_parser = parse_error)]
        error: ErrorCondition,
        #[command(flatten)]
        noise: NoiseArgs,
        #[command(flatten)]
        tomo: TomographyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run all 48 experiments (3 gates x 16 error conditions)
    Sweep {
        #[command(flatten)]
        noise: NoiseArgs,
        #[command(flatten)]
        tomo: TomographyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// No-correction reference: per-gate fidelities and the 13/16 mean
    Baseline {
        #[command(flatten)]
        tomo: TomographyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sweep averages minus the no-correction reference
    Advantage {
        #[command(flatten)]
        noise: NoiseArgs,
        #[command(flatten)]
        tomo: TomographyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_gate(s: &str) -> Result<LogicalGate, String> {
    LogicalGate::from_label(s).ok_or_else(|| format!("unknown gate '{s}' (expected id, not, had)"))
}

fn parse_error(s: &str) -> Result<ErrorCondition, String> {
    ErrorCondition::from_label(s).ok_or_else(|| {
        format!("unknown error condition '{s}' (expected E, B1..B5, S1..S5, BS1..BS5)")
    })
}

fn resolve_noise(args: &NoiseArgs) -> CliResult<Option<NoiseSchedule>> {
    if let Some(path) = &args.noise {
        return load_noise_file(path);
    }
    if let Some(p) = args.dephasing_p {
        validate_probability(p)?;
        return Ok(Some(NoiseSchedule::uniform_dephasing(p)));
    }
    if let Some(duration) = args.duration {
        if duration < 0.0 {
            return Err(CliError::Usage(format!(
                "--duration must be non-negative, got {duration}"
            )));
        }
        let t2 = match &args.t2 {
            Some(values) => expand_t2(values)?,
            None => [DEFAULT_T2_MS; 5],
        };
        let schedule =
            NoiseSchedule::from_t2(duration, &t2).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(Some(schedule));
    }
    Ok(None)
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn context(noise: &NoiseArgs, tomo: &TomographyArgs, common: &CommonArgs) -> CliResult<RunContext> {
    Ok(RunContext {
        noise: resolve_noise(noise)?,
        assume_identity_response: tomo.assume_identity_response,
        seed: common.seed,
    })
}

fn dispatch(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Codewords { common } => {
            if common.format == Format::Csv {
                return Err(CliError::Usage(
                    "codewords has no CSV form; use --format json".into(),
                ));
            }
            print_json(&cmd_codewords(common.seed))
        }
        Command::SyndromeTable { common } => {
            let report = cmd_syndrome_table(common.seed)?;
            match common.format {
                Format::Json => print_json(&report),
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
            }
        }
        Command::Run {
            gate,
            error,
            noise,
            tomo,
            common,
        } => {
            let ctx = context(&noise, &tomo, &common)?;
            let report = cmd_run(gate, error, &ctx)?;
            match common.format {
                Format::Json => print_json(&report),
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
            }
        }
        Command::Sweep {
            noise,
            tomo,
            common,
        } => {
            let ctx = context(&noise, &tomo, &common)?;
            let report = cmd_sweep(&ctx)?;
            match common.format {
                Format::Json => print_json(&report),
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
            }
        }
        Command::Baseline { tomo, common } => {
            let ctx = RunContext {
                noise: None,
                assume_identity_response: tomo.assume_identity_response,
                seed: common.seed,
            };
            let report = cmd_baseline(&ctx)?;
            match common.format {
                Format::Json => print_json(&report),
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
            }
        }
        Command::Advantage {
            noise,
            tomo,
            common,
        } => {
            let ctx = context(&noise, &tomo, &common)?;
            let report = cmd_advantage(&ctx)?;
            match common.format {
                Format::Json => print_json(&report),
                Format::Csv => {
                    print!("{}", report.to_csv());
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    // clap itself exits with code 2 on parse errors
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err @ CliError::Usage(_)) => {
            eprintln!("{err}");
            ExitCode::from(2)
        }
        Err(err @ CliError::Internal(_)) => {
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}
