use std::path::PathBuf;
use std::process::ExitCode;

use bethe_ff::cli::{run_text, RunOptions, Task, EXIT_INPUT};
use bethe_ff::numeric::Backend;
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TaskArg {
    Verify,
    Sp,
    Ff,
    Chain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Rational,
    Float,
}

/// Exact and floating-point form factors of SU(3)-invariant integrable models.
#[derive(Debug, Parser)]
#[command(name = "bethe-ff", version)]
struct Args {
    task: TaskArg,
    /// Input document (`key = value` lines).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    #[arg(long)]
    seed: Option<u64>,
    /// Relative tolerance for floating-point checks.
    #[arg(long)]
    tol: Option<f64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let opts = RunOptions {
        task: Some(match args.task {
            TaskArg::Verify => Task::Verify,
            TaskArg::Sp => Task::Sp,
            TaskArg::Ff => Task::Ff,
            TaskArg::Chain => Task::Chain,
        }),
        backend: args.backend.map(|b| match b {
            BackendArg::Rational => Backend::Rational,
            BackendArg::Float => Backend::Float,
        }),
        seed: args.seed,
        tol: args.tol,
    };
    let (out, code) = run_text(&text, &opts);
    print!("{out}");
    ExitCode::from(code as u8)
}
