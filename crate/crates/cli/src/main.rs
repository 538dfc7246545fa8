//! `sombor` command-line front end.

mod args;
mod commands;
mod input;
mod sweep;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

/// How a run ended when it did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input the core rejected: exit 2.
    Usage(String),
    /// A checked claim did not hold: exit 1.
    Verification(String),
}

impl From<sombor_core::Error> for Failure {
    fn from(e: sombor_core::Error) -> Self {
        use sombor_core::Error::*;
        match e {
            MonotonicityViolated { .. } | ConvergenceFailure { .. } => Self::Verification(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

/// Text for stdout plus whether every check in it passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    pub fn pass(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
