mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Report;

fn run(cli: &Cli) -> rama_core::Result<Report> {
    let d = cli.digits;
    match &cli.command {
        Command::Coeff(a) => commands::coeff(a),
        Command::Eval(a) => commands::eval(a, d),
        Command::Oracle(a) => commands::oracle(a, d),
        Command::Classify(a) => commands::classify_cmd(a, d),
        Command::Szego(a) => commands::szego(a, d),
        Command::Verify(a) => commands::verify(a, d),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match cli.format.unwrap_or(report.default) {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("json"),
        Format::Plain => report.plain.clone(),
        Format::Csv => match &report.csv {
            Some(c) => c.clone(),
            None => {
                eprintln!("error: this command has no CSV form");
                return ExitCode::from(2);
            }
        },
    };
    println!("{out}");
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
