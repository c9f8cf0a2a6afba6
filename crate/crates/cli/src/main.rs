use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::Parser;
use sepkit::{run_tasks, table, CliError, SpecDocument, DEFAULT_LIMIT, OPS};

/// Checks and searches for separability certificates described in a JSON
/// task document. `run` executes every task; any other subcommand runs the
/// tasks with that op.
#[derive(Parser)]
#[command(name = "sepkit", version)]
struct Args {
    #[arg(value_parser = PossibleValuesParser::new(std::iter::once("run").chain(OPS.iter().copied())))]
    command: String,
    file: PathBuf,
    /// Most candidates any one search may enumerate.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: u64,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = std::fs::read_to_string(&args.file)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.file.display())))
        .and_then(|text| serde_json::from_str::<SpecDocument>(&text).map_err(|e| CliError::Input(format!("parse error: {e}"))))
        .and_then(|doc| run_tasks(&doc, (args.command != "run").then_some(args.command.as_str()), args.limit));
    match result {
        Ok(report) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", table(&report));
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("sepkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
