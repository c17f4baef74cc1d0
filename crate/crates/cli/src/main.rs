mod cli;
mod commands;

use clap::Parser;
use rhp_core::fault::{self, Fault};

use crate::cli::{Cli, Command};
use crate::commands::{Failure, EXIT_USAGE};

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let _guard = match &cli.inject_fault {
        Some(spec) => {
            let f: Fault = spec.parse().map_err(|e| Failure {
                code: EXIT_USAGE,
                message: format!("{e}"),
            })?;
            Some(fault::inject(f))
        }
        None => None,
    };
    match &cli.command {
        Command::Coeffs(args) => commands::coeffs(cli, args),
        Command::Eval { family, x } => commands::eval(cli, family, x),
        Command::Series(args) => commands::series(cli, args),
        Command::Turan { family, n, param } => commands::turan(cli, *family, *n, param),
        Command::Verify { suites } => commands::verify(cli, suites),
    }
}
