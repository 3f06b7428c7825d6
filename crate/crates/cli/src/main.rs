use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use majordex_cli::commands::{run, Cli};

/// Prints to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error[io]: cannot write output: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&e.to_json()).expect("JSON values serialize"));
            }
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}
