use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gvdkit_cli::cli::RunConfig;
use gvdkit_cli::commands::{input_error_code, run};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok((text, status)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            // criteria that overran the deadline may still hold worker threads
            std::process::exit(status.code());
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(input_error_code() as u8)
        }
    }
}
