//! Command-line front end for the EAOCWS toolkit: search for codes on a
//! given register, re-verify written certificates, and reproduce the bundled
//! worked example and parameter tables.
//!
//! Exit codes: 0 success, 1 operational error, 2 usage error, 3 search ended
//! below the requested dimension, 4 a requested verification failed.

mod reproduce;
mod search;
mod tables;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exit code when a search ends without reaching `--min-k`.
pub const EXIT_NO_CODE: u8 = 3;
/// Exit code when a requested verification fails.
pub const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "eaocws",
    version,
    about = "Construct, search for, and verify entanglement-assisted operator \
             codeword-stabilized quantum codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a code and write a JSON certificate
    Search(search::SearchArgs),
    /// Re-run verifiers against a certificate's claims and update it
    Verify(verify::VerifyArgs),
    /// Replay the bundled worked example or re-run table searches
    Reproduce(reproduce::ReproduceArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Search(args) => search::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Reproduce(args) => reproduce::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
