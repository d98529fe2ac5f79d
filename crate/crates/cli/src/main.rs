use std::process::ExitCode;

use clap::Parser;
use rm_infoset_cli::{run, Cli};

fn main() -> ExitCode {
    // clap's own usage errors would exit with 2, which is reserved
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if let Some(msg) = outcome.stderr {
                eprintln!("error: {msg}");
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
