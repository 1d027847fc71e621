use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use isocartan::cli::{self, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    eprint!("{}", run.diagnostics);
    let written = match &cli.opts.out {
        Some(path) => std::fs::write(path, &run.report).map_err(|e| format!("writing {}: {e}", path.display())),
        None => std::io::stdout().write_all(run.report.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(run.code)
}
