use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use kway_cli::cli::{run_command, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_command(&cli.command) {
        Ok(out) => {
            print!("{}", out.json);
            let _ = std::io::stdout().flush();
            eprintln!("{}", out.summary);
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
