use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rimtori::{run, Command, Scenario};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

/// Exact rim tori calculator.
#[derive(Debug, Parser)]
#[command(name = "rimtori", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Scenario file (TOML).
    #[arg(long)]
    scenario: PathBuf,
    /// Only run the records with these names (repeatable).
    #[arg(long = "name")]
    names: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Scenario::load(&cli.scenario).and_then(|sc| run(cli.command, &sc, &cli.names));
    match result {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text()),
                Format::Machine => print!("{}", report.json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
