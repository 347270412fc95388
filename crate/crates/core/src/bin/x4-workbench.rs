//! Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use x4geom::graph::GraphFile;
use x4geom::json::to_canonical_json;
use x4geom::report::{
    automorphisms_payload, emit_dot, enumerate_payload, fibers_payload, named_graph, reflection_payload,
    reproduce_paper, ReproduceOptions,
};

#[derive(Parser)]
#[command(name = "x4-workbench", version, about = "Exact lattice geometry of the discriminant-four K3 surface X4")]
struct Cli {
    /// Write Graphviz files for the configuration graphs into this directory.
    #[arg(long, global = true, value_name = "DIR")]
    emit_dot: Option<PathBuf>,
    /// Write the JSON output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification and print the run report.
    ReproducePaper {
        /// Expected |det| of the algebraic lattice.
        #[arg(long, value_name = "N")]
        expect_discriminant: Option<u64>,
    },
    /// Enumerate numerical negative classes on Y4 up to an H-degree bound.
    Enumerate {
        #[arg(long, value_name = "N")]
        bound: i64,
    },
    /// Analyze a fibration given as a JSON list of fiber components.
    Fibers {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
    },
    /// Certify the reflection induced by the quadratic transformation.
    Reflection,
    /// Automorphism group of `petersen`, `extended`, or a JSON graph file.
    Automorphisms {
        #[arg(long, value_name = "GRAPH")]
        graph: String,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(cli: &Cli, value: &impl serde::Serialize) -> Result<(), String> {
    let text = to_canonical_json(value).map_err(|e| e.to_string())?;
    match &cli.json {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(dir) = &cli.emit_dot {
        if let Err(e) = emit_dot(dir) {
            return usage_error(e);
        }
    }

    let payload: Result<Value, String> = match &cli.command {
        Command::ReproducePaper { expect_discriminant } => {
            let report = reproduce_paper(&ReproduceOptions {
                expect_discriminant: *expect_discriminant,
                ..Default::default()
            });
            for c in &report.checks {
                eprintln!("{:<8} {:<40} {}", format!("{:?}", c.status).to_uppercase(), c.id, c.summary);
            }
            if let Err(e) = emit(&cli, &report) {
                return usage_error(e);
            }
            return ExitCode::from(report.exit_code() as u8);
        }
        Command::Enumerate { bound } => enumerate_payload(*bound).map_err(|e| e.to_string()),
        Command::Fibers { input } => fs::read_to_string(input)
            .map_err(|e| format!("{}: {e}", input.display()))
            .and_then(|text| fibers_payload(&text).map_err(|e| format!("{}: {e}", input.display()))),
        Command::Reflection => reflection_payload().map_err(|e| e.to_string()),
        Command::Automorphisms { graph } => match named_graph(graph) {
            Ok(Some(g)) => Ok(automorphisms_payload(&g)),
            Ok(None) => fs::read_to_string(graph)
                .map_err(|e| format!("{graph}: {e}"))
                .and_then(|text| GraphFile::parse(&text).map_err(|e| format!("{graph}: {e}")))
                .map(|g| automorphisms_payload(&g)),
            Err(e) => Err(e.to_string()),
        },
    };
    match payload.and_then(|p| emit(&cli, &p)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(e),
    }
}
