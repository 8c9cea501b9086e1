use std::process::ExitCode;

use clap::Parser;
use halftheta_cli::commands::run;
use halftheta_cli::config::{Cli, CommandConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = CommandConfig::from_opts(&cli.opts).and_then(|cfg| run(cli.command, &cfg));
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
