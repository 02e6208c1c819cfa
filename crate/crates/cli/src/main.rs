//! `cplx`: command-line front end for the cost-based complexity toolkit.
//!
//! Exit codes: 0 success, 1 validation/usage error, 2 runtime or domain
//! error. Diagnostics go to stderr; data goes to stdout or `--output`.

mod commands;
mod config;
mod loader;
mod output;

use clap::Parser;

#[derive(Parser)]
#[command(
    name = "cplx",
    version,
    about = "Complexity measures and cost trade-off experiments",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn exit_code(err: &cplx_core::Error) -> i32 {
    use cplx_core::Error;
    match err {
        Error::Config(_) | Error::Parse { .. } => 1,
        Error::Domain(_) | Error::Internal(_) | Error::Disconnected { .. } => 2,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Err(err) = cli.command.run() {
        eprintln!("error: {err}");
        std::process::exit(exit_code(&err));
    }
}
