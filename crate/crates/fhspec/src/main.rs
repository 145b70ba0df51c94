use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fhspec::campaigns::{self, RunError};
use fhspec::config::{self, ConfigDoc};

/// Verification campaigns for spectral asymptotics of Toeplitz-matrix
/// products with power-law symbols.
///
/// Exit codes: 0 all assertions passed, 1 usage or i/o failure,
/// 2 assertion or validation failure, 3 numerical non-convergence.
#[derive(Parser)]
#[command(name = "fhspec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the campaign described by a config file.
    Run { config: PathBuf },
    /// Check a config file's schema and constraints without running.
    Validate { config: PathBuf },
}

fn load(path: &PathBuf) -> Result<ConfigDoc, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    ConfigDoc::from_json(&text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/usage text
            let _ = e.print();
            return ExitCode::from(1);
        }
    };

    match cli.command {
        Command::Validate { config } => {
            let doc = match load(&config) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match config::validate(&doc) {
                Ok(v) => {
                    println!(
                        "configuration valid: campaign {}, {} sweep value(s)",
                        v.doc.campaign.as_str(),
                        v.doc.n_list.len()
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("invalid configuration: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Run { config } => {
            let doc = match load(&config) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let validated = match config::validate(&doc) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("invalid configuration: {e}");
                    return ExitCode::from(2);
                }
            };
            match campaigns::run(&validated) {
                Ok(outcome) => {
                    println!(
                        "campaign {}: {} row(s) -> {}",
                        validated.doc.campaign.as_str(),
                        outcome.rows,
                        outcome.output_path.display()
                    );
                    if outcome.violations.is_empty() {
                        println!("all assertions passed");
                        ExitCode::SUCCESS
                    } else {
                        for v in &outcome.violations {
                            eprintln!("assertion failed: {v}");
                        }
                        ExitCode::from(2)
                    }
                }
                Err(RunError::NonConvergence(m)) => {
                    eprintln!("numerical non-convergence: {m}");
                    ExitCode::from(3)
                }
                Err(RunError::Failed(m)) => {
                    eprintln!("error: {m}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
