use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use skewpbw::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let text = match std::fs::read_to_string(&cli.session) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read `{}`: {}", cli.session, e);
            return ExitCode::from(2);
        }
    };
    match execute(&cli, &text) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
