use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use bsynth::{parse_problem, render_pretty, run, Command, RunOptions, EXIT_INPUT};
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// Controller synthesis for linear systems in kernel form.
#[derive(Debug, Parser)]
#[command(name = "bsynth", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Problem file; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report destination; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Degree cap on intermediate polynomials.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Cross-check min-interaction with exhaustive search.
    #[arg(long)]
    oracle: bool,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("bsynth: {msg}");
    ExitCode::from(EXIT_INPUT as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map(|_| s)
                .map_err(|e| format!("cannot read standard input: {e}"))
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    let file = match parse_problem(&text) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let opts = RunOptions {
        max_degree: cli.max_degree,
        oracle: cli.oracle,
    };
    let report = match run(cli.command, &file, &opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let body = match cli.format {
        Format::Json => report.to_json(),
        Format::Pretty => render_pretty(&report),
    };
    let written = match &cli.output {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        return fail(e);
    }
    ExitCode::from(report.exit_code() as u8)
}
