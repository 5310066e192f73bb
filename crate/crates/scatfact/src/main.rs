use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use scatfact::cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result.and_then(|o| flushed.map(|_| o).map_err(CliError::from)) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scatfact: {e}");
            ExitCode::from(2)
        }
    }
}
