use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gts_cli::grammar::GRAMMAR;
use gts_cli::{corpus_verify, parse, run, Caps, Report};

#[derive(Parser)]
#[command(
    name = "gts",
    version,
    about = "Exact queries on real-line generalized topologies"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Largest chain index checked
    #[arg(long = "caps-chain", default_value_t = 64, global = true)]
    caps_chain: u64,
    /// Largest generation depth
    #[arg(long = "caps-depth", default_value_t = 8, global = true)]
    caps_depth: u64,
    /// Also write the machine-readable report here
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a query file
    Eval { file: PathBuf },
    /// Run the built-in verification suite
    Corpus,
    /// Print the query grammar
    PrintGrammar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

fn emit(report: &Report, cli: &Cli) -> ExitCode {
    match cli.format {
        Format::Human => print!("{}", report.human()),
        Format::Machine => print!("{}", report.machine()),
    }
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, report.machine()) {
            eprintln!("gts: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.failures() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        chain: cli.caps_chain,
        depth: cli.caps_depth,
    };
    match &cli.cmd {
        Cmd::PrintGrammar => {
            print!("{GRAMMAR}");
            ExitCode::SUCCESS
        }
        Cmd::Corpus => emit(&corpus_verify(caps), &cli),
        Cmd::Eval { file } => {
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("gts: cannot read {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            match parse(&text) {
                Ok(doc) => emit(&run(&doc, caps), &cli),
                Err(e) => {
                    eprintln!("{}:{e}", file.display());
                    ExitCode::from(2)
                }
            }
        }
    }
}
