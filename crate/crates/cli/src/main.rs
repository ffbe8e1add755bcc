mod args;
mod run;

use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig::from(&cli.global);
    match run::execute(&cli.command, &cfg) {
        Ok(report) => {
            let out = if cfg.json {
                report.to_json(&cfg) + "\n"
            } else {
                report.text.clone()
            };
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
