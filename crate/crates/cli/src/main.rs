//! `ncgrowth`: truncated Gröbner bases, Hilbert series and growth of finitely
//! presented graded algebras.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "ncgrowth", version, about = "Growth of finitely presented graded algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Presentation file.
    #[arg(long)]
    input: PathBuf,
    /// Degree truncation bound.
    #[arg(long)]
    max_degree: usize,
    /// Reduce an integer presentation over Q modulo this prime.
    #[arg(long = "char")]
    characteristic: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Truncated reduced Gröbner basis.
    Gb(Input),
    /// Normal-word counts by degree.
    Hilbert(Input),
    /// Count words avoiding forbidden factor patterns.
    Automaton {
        #[arg(long)]
        patterns: PathBuf,
        /// Generators, largest first, e.g. "x y z".
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        max_degree: usize,
    },
    /// Growth estimates and classification.
    Growth(Input),
    /// Compare a claimed basis family with the computed basis.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Family file: factor patterns or a `builtin:` line.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        family: Option<PathBuf>,
        /// Named family, e.g. `exa1(b=-3)`, `exa2(a=1)`, `rgbC`.
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Check the claims about one of the algebras A, B, C.
    Paper {
        #[arg(long, value_parser = ["A", "B", "C"])]
        algebra: String,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        max_degree: usize,
        /// Largest degree for the dedicated count of C.
        #[arg(long, default_value_t = 400)]
        n_large: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = commands::execute(&cli.command);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
