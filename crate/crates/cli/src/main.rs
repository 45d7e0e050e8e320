mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::{run, Report, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli).unwrap_or_else(|e| Report::error(&e));
    let out = report.render(cli.json);
    // a closed pipe on the reader's side is not an error of ours
    let _ = if report.status == Status::Error && !cli.json {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    report.status.exit_code()
}
