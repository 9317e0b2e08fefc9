//! Thin command-line front end; all logic lives in the library's `report`
//! module.
//!
//! Exit codes: 0 success, 1 assertion mismatch, 2 usage error,
//! 3 enumeration-cap refusal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use coxeter_descent::report::{
    cmd_analyze, cmd_group, cmd_product, cmd_transversal, reproduce, OutputFormat,
    ReproduceTarget, RunConfig,
};
use coxeter_descent::Error;

#[derive(Parser)]
#[command(
    name = "descent",
    about = "Finite Coxeter groups, descent algebras, and native-basis analysis",
    version
)]
struct Cli {
    /// Enumeration cap (element count) for full group enumeration.
    #[arg(long, global = true)]
    cap: Option<u64>,

    /// Output format: json, csv, or text.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized spot-check selection.
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, Coxeter matrix, and generator model of a system.
    Group {
        /// Type spec: A5, B3, D4, I2:7, H3, H4, F4, E6, E7, E8.
        spec: String,
    },
    /// List X_J (one subset) or X_JK (two subsets) as reduced words.
    Transversal {
        spec: String,
        /// Subset J as comma-separated indices, or "-" for the empty set.
        j: String,
        /// Optional subset K for double-coset representatives.
        k: Option<String>,
    },
    /// Multiply two basis elements and print the expansion.
    Product { spec: String, j: String, k: String },
    /// Analyze the subalgebra generated by x_J for J = S \ {s}.
    Analyze {
        spec: String,
        /// 1-based generator index s.
        s: usize,
    },
    /// Re-run a golden verification suite.
    Reproduce {
        /// One of: table1, example_rank2, example_b3, classical_products,
        /// base_changes, prop42, main_theorem.
        target: String,
    },
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::EnumerationCap { .. } => ExitCode::from(3),
        Error::Parse { .. }
        | Error::InvalidRank { .. }
        | Error::GeneratorIndex { .. }
        | Error::NotContained { .. }
        | Error::ChainIndex { .. } => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn emit(output: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, output),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match OutputFormat::parse(&cli.format) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = RunConfig {
        cap: cli.cap,
        format,
        seed: cli.seed,
    };

    let result = match &cli.command {
        Command::Group { spec } => cmd_group(spec, &cfg),
        Command::Transversal { spec, j, k } => cmd_transversal(spec, j, k.as_deref(), &cfg),
        Command::Product { spec, j, k } => cmd_product(spec, j, k, &cfg),
        Command::Analyze { spec, s } => cmd_analyze(spec, *s, &cfg),
        Command::Reproduce { target } => match ReproduceTarget::parse(target) {
            Ok(target) => match reproduce(target, &cfg) {
                Ok(report) => {
                    let rendered = report.render();
                    if let Err(e) = emit(&rendered, &cli.out) {
                        eprintln!("error: {e}");
                        return ExitCode::from(1);
                    }
                    return if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    };
                }
                Err(e) => Err(e),
            },
            Err(e) => Err(e),
        },
    };

    match result {
        Ok(output) => {
            if let Err(e) = emit(&output, &cli.out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
