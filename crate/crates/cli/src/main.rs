use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mvkt_cli::catalog;
use mvkt_cli::run::{self, load, verify_outcome, Outcome, RunFlags};
use mvkt_cli::{CliError, Format};

#[derive(Parser)]
#[command(
    name = "mvkt",
    version,
    about = "Twisted Mayer–Vietoris spectral sequences in K-theory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Scenario file (JSON, schema "mvkt/1").
    scenario: Option<PathBuf>,
    /// Use a built-in scenario instead of a file.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the spectral sequence and print a report.
    Run {
        #[command(flatten)]
        source: Source,
        /// List every page and differential in text output.
        #[arg(long)]
        dump_pages: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Compute only the untwisted gluing.
        #[arg(long)]
        baseline_only: bool,
        /// Attach oracle checks; exit 5 on disagreement.
        #[arg(long)]
        verify: bool,
        /// Write the report here instead of standard output.
        #[arg(long, short, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Re-check a run against brute-force oracles; exit 0 iff all agree.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// List catalog entries, or print one as a scenario file.
    Catalog { name: Option<String> },
}

fn execute(cli: Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    match cli.command {
        Command::Run {
            source,
            dump_pages,
            format,
            baseline_only,
            verify,
            output,
        } => {
            let scenario = load(source.scenario.as_deref(), source.catalog.as_deref())?;
            let flags = RunFlags {
                dump_pages,
                baseline_only,
                verify,
                format,
            };
            Ok((run::run(&scenario, flags)?, output))
        }
        Command::Verify { source, format } => {
            let scenario = load(source.scenario.as_deref(), source.catalog.as_deref())?;
            Ok((verify_outcome(&scenario, format)?, None))
        }
        Command::Catalog { name } => {
            let text = match name {
                Some(name) => catalog::scenario(&name)?.to_json() + "\n",
                None => catalog::NAMES.map(|n| format!("{n}\n")).concat(),
            };
            Ok((Outcome { text, exit_code: 0 }, None))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = execute(cli).and_then(|(outcome, output)| {
        match output {
            Some(path) => fs::write(&path, &outcome.text)
                .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let _ = std::io::stdout().write_all(outcome.text.as_bytes());
            }
        }
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
