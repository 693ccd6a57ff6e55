//! `coxlink`: analyze mixed-sign Coxeter graphs from the command line.
//!
//! Exit status: 0 success, 1 property violation, 2 input or parse error,
//! 3 contract violation.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "coxlink",
    version,
    about = "Exact Coxeter and Alexander polynomials of mixed-sign graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report polynomials, certified flags and the spectral radius of a graph.
    Analyze {
        /// Graph file, `-` for standard input, or a built-in example name.
        input: String,
        #[command(flatten)]
        out: OutputArgs,
        /// Enclosure width, as `p/q`, an integer or a decimal.
        #[arg(long, default_value = "1e-9")]
        epsilon: String,
        /// Accept graphs whose signs do not alternate (reduced report).
        #[arg(long)]
        classical: bool,
    },
    /// Check vertex extension and interlacing between two graphs.
    Compare {
        small: String,
        large: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the theorem sweep over alternating trees and seeded random pairs.
    Verify {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Extension and inclusion trials per size.
        #[arg(long, default_value_t = 50)]
        trials: u64,
        /// One tree per isomorphism class.
        #[arg(long)]
        dedup: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimum spectral radius over alternating trees up to `--nmax` vertices.
    MinSearch {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value = "1e-9")]
        epsilon: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a built-in example graph in the graph file format.
    Example { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            input,
            out,
            epsilon,
            classical,
        } => commands::analyze(&input, out.json, &epsilon, classical),
        Command::Compare { small, large, out } => commands::compare(&small, &large, out.json),
        Command::Verify {
            nmax,
            seed,
            trials,
            dedup,
            out,
        } => commands::verify(nmax, seed, trials, dedup, out.json),
        Command::MinSearch {
            nmax,
            dedup,
            epsilon,
            out,
        } => commands::min_search(nmax, dedup, &epsilon, out.json),
        Command::Example { name } => commands::example(&name),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(out) = &e.stdout {
                print!("{out}");
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
