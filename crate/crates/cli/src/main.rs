use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use paucity_cli::commands;

/// Exact counting and identity checks for power-sum systems with one
/// degree omitted.
#[derive(Parser)]
#[command(name = "paucity", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count solution pairs over [1, X]: total, diagonal, and difference
    Count {
        /// Variables per side
        #[arg(long)]
        k: usize,
        /// Omission shift; degree k-d is dropped from the system
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Range bound X
        #[arg(long)]
        xmax: u64,
        /// Also run the pairwise reference count and require agreement
        #[arg(long)]
        naive: bool,
        /// Worker threads for the histogram route
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Progress notes on stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Enumerate nondiagonal witnesses and verify the exact identities
    Verify {
        /// Variables per side
        #[arg(long)]
        k: usize,
        /// Omission shift; needs 2d < k
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Range bound X
        #[arg(long)]
        xmax: u64,
        /// Verify at most this many witnesses (default: all)
        #[arg(long)]
        limit: Option<usize>,
        /// Also write the witnesses as JSON lines to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-witness notes on stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Report the paucity exponents and the conditional bounds
    Exponents {
        /// Variables per side (k >= 3)
        #[arg(long)]
        k: u64,
        /// Omission shift; needs 2d < k
        #[arg(long, default_value_t = 0)]
        d: u64,
        /// Include the refined exponent and the per-r refinement terms
        #[arg(long)]
        refined: bool,
    },
    /// Sweep a list of X values, emit CSV rows, fit the log-log slope
    Experiment {
        /// Variables per side
        #[arg(long)]
        k: usize,
        /// Omission shift; degree k-d is dropped from the system
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Comma-separated, strictly increasing X values (at least two)
        #[arg(long)]
        xlist: String,
        /// Worker threads for the histogram route
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the CSV here (fit JSON then goes to stdout); without
        /// this flag the CSV goes to stdout and the fit JSON to stderr
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-X progress on stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Run the gcd cascade on a matrix file or a witness JSONL file
    Decompose {
        /// Input: a JSON object {"x_bound":..,"u":[[..],..]} or witness
        /// JSON lines
        file: PathBuf,
        /// Columns to use when building matrices from witnesses
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Write the JSONL output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Input-shape notes on stderr
        #[arg(long)]
        verbose: bool,
    },
    /// Count distinct link-value tuples at fixed points 1..r
    Nr {
        /// Variables per side
        #[arg(long)]
        k: usize,
        /// Omission shift; needs 2d < k
        #[arg(long, default_value_t = 0)]
        d: usize,
        /// Number of fixed evaluation points (uses 1..=r)
        #[arg(long)]
        r: usize,
        /// Range bound X
        #[arg(long)]
        xmax: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Count { k, d, xmax, naive, threads, verbose } => {
            commands::cmd_count(k, d, xmax, naive, threads, verbose)
        }
        Cmd::Verify { k, d, xmax, limit, out, verbose } => {
            commands::cmd_verify(k, d, xmax, limit, out, verbose)
        }
        Cmd::Exponents { k, d, refined } => commands::cmd_exponents(k, d, refined),
        Cmd::Experiment { k, d, xlist, threads, out, verbose } => {
            commands::cmd_experiment(k, d, &xlist, threads, out, verbose)
        }
        Cmd::Decompose { file, r, out, verbose } => {
            commands::cmd_decompose(&file, r, out, verbose)
        }
        Cmd::Nr { k, d, r, xmax } => commands::cmd_nr(k, d, r, xmax),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
