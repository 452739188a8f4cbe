use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Rank alternatives from incomplete pairwise comparisons with Heuristic Rating Estimation.
#[derive(Parser, Debug)]
#[command(name = "hre", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute priorities of the unknown alternatives.
    Rank {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Rescale the output to sum to one. This changes the known priorities too.
        #[arg(long)]
        normalize: bool,
    },
    /// Report reciprocity violations, missing counts, connectivity and inconsistent triads.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Fill every missing comparison with the ratio of the computed priorities.
    Complete {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Geometric)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = StyleArg::Decimal)]
        number_style: StyleArg,
    },
    /// Compare both HRE variants and, for complete matrices, EVM and GMM.
    Compare {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Problem file (CSV or JSON).
    input: PathBuf,
    /// Separate `label,priority` file (or JSON object) with the known priorities.
    #[arg(long)]
    known: Option<PathBuf>,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output format; defaults to the input format.
    #[arg(long, value_enum)]
    output_format: Option<FormatArg>,
    /// Relative tolerance for reciprocity, consistency and residual checks.
    #[arg(long, default_value_t = hre_core::DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Replace the lower triangle with reciprocals of the upper triangle.
    #[arg(long)]
    force_reciprocal: bool,
    /// Write results here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Arithmetic,
    Geometric,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StyleArg {
    Decimal,
    Fraction,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Rank {
            input,
            method,
            normalize,
        } => commands::rank(&input, method, normalize),
        Command::Check { input } => commands::check(&input),
        Command::Complete {
            input,
            method,
            number_style,
        } => commands::complete(&input, method, number_style),
        Command::Compare { input } => commands::compare(&input),
    };
    ExitCode::from(code)
}
