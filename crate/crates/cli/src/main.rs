mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::Parser;
use inv3412::Error;

use config::{Cli, Command};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::ResourceCap { .. } => EXIT_CAP,
        Error::Argument(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_VERIFY,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("inv3412: cannot set up {n} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Genfun(a) => commands::genfun(a, g),
        Command::Shapes(a) => commands::shapes(a, g),
        Command::Verify(a) => commands::verify(a, g),
        Command::Table(a) => commands::table(a, g),
        Command::Classify(a) => commands::classify(a, g),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("inv3412: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    if let Err(e) = output::write(g.format, g.output.as_deref(), &cli, &outcome) {
        eprintln!("inv3412: writing output: {e}");
        return ExitCode::from(EXIT_VERIFY);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}
