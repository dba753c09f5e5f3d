//! Command-line front end for the exact Bernoulli/series kernel.
//!
//! Exit codes: 0 on success, 1 when an identity check failed, 2 on usage
//! errors and violated preconditions. Data goes to stdout, diagnostics to
//! stderr.

use std::env;
use std::process::ExitCode;

mod bench;
mod compute;
mod expand;
mod flags;
mod output;
mod verify;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or violated preconditions; exit 2.
    Usage(String),
    /// An identity sweep found a counterexample; exit 1.
    IdentityFailure(String),
}

const USAGE: &str = "\
Usage: bkron <command> [flags]

Commands:
  compute   compute one Bernoulli number by a chosen method
  verify    run identity sweeps and report pass/fail
  expand    print a truncated series expansion, one term per line
  bench     time the methods over a range of m, as CSV

Run 'bkron <command> --help' for the command's flags.
";

fn main() -> ExitCode {
    let args: Vec<String> = env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::IdentityFailure(message)) => {
            if !message.is_empty() {
                eprintln!("identity failure: {message}");
            }
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(args: &[String]) -> Result<(), CliError> {
    let Some(command) = args.first() else {
        crate::output::write_stdout(format_args!("{USAGE}"));
        return Err(CliError::Usage("missing command".into()));
    };
    let rest = &args[1..];
    match command.as_str() {
        "compute" => compute::run(rest),
        "verify" => verify::run(rest),
        "expand" => expand::run(rest),
        "bench" => bench::run(rest),
        "help" | "--help" | "-h" => {
            crate::output::write_stdout(format_args!("{USAGE}"));
            Ok(())
        }
        other => Err(CliError::Usage(format!("unknown command {other:?}"))),
    }
}
