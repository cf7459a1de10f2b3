mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hurwitz_asym::{Error, Precision};

use args::{Cli, Command, Output};

fn run(cli: &Cli) -> Result<(table::Table, Output), Error> {
    let precision = Precision::from_env()?;
    Ok(match &cli.command {
        Command::Eval(a) => (commands::eval(a, precision)?, a.point.output),
        Command::Reference(a) => (commands::reference_cmd(a, precision)?, a.point.output),
        Command::VerifyExact(a) => (commands::verify_exact(a)?, a.point.output),
        Command::VerifyAlpha(a) => (commands::verify_alpha(a)?, a.point.output),
        Command::VerifyGl(a) => (commands::verify_gl(a)?, a.point.output),
        Command::SweepN(a) => (commands::sweep_n(a, precision)?, a.point.output),
        Command::SweepEta(a) => (commands::sweep_eta(a, precision)?, a.point.output),
        Command::Scaling(a) => (commands::scaling(a, precision)?, a.output),
        Command::Bench(a) => (commands::bench(a, precision)?, a.point.output),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((table, output)) => {
            let text = match output {
                Output::Csv => table.to_csv(),
                Output::Json => table.to_json(),
            };
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(if e.is_validation() { 2 } else { 3 })
        }
    }
}
