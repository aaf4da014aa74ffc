//! Command-line front end: solve cubics, show their two-cube decomposition,
//! depress to reduced form, or check claimed roots, over single inputs or
//! batch files, in text, JSON-lines, or CSV.

pub mod batch;
pub mod commands;
pub mod literal;
pub mod record;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sylvester_cubic::reduction::{self, ReducedCubic};
use sylvester_cubic::sylvester::{SolveOptions, DEFAULT_EPS_CLASS, DEFAULT_POLISH_ITERS};

use commands::{
    exit_code_for, run_check, solve_from_coefficients, solve_from_reduced, write_decomposition_text,
    write_reduction_text, write_solution_text, CheckTarget,
};
use literal::{parse_complex_list, render_complex};
use record::SolveRecord;

/// Process exit codes; errors go to the error stream, results to stdout.
pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DEGENERATE_INPUT: i32 = 3;
    pub const CHECK_FAILED: i32 = 4;
    pub const INTERNAL_DEGENERACY: i32 = 5;
}

pub const DEFAULT_CHECK_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "sylcubic",
    version,
    about = "Solve cubic equations over the complex numbers via the two-cube canonical form"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a cubic and print roots, classification, and residuals
    Solve(SolveArgs),
    /// Print the two-cube form f(x) = alpha*(x-r)^3 + beta*(x-s)^3 (generic cubics only)
    Decompose(DecomposeArgs),
    /// Depress a general cubic to x^3 - 3px + q and print p, q, shift
    Reduce(ReduceArgs),
    /// Evaluate residuals of claimed roots and report PASS or FAIL
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SolveSource {
    /// Standard coefficients A,B,C,D of Ax^3 + Bx^2 + Cx + D (complex literals)
    #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Reduced pair p,q of f(x) = x^3 - 3px + q
    #[arg(long, value_name = "P,Q", allow_hyphen_values = true)]
    pub reduced: Option<String>,
    /// Batch file: one cubic per line as A,B,C,D; blank lines and # comments skipped
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InlineSource {
    /// Standard coefficients A,B,C,D of Ax^3 + Bx^2 + Cx + D (complex literals)
    #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Reduced pair p,q of f(x) = x^3 - 3px + q
    #[arg(long, value_name = "P,Q", allow_hyphen_values = true)]
    pub reduced: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: SolveSource,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Width of the classification bands, relative; in (0, 1e-2]
    #[arg(long = "eps-class", value_name = "EPS", default_value_t = DEFAULT_EPS_CLASS, value_parser = parse_eps_class)]
    pub eps_class: f64,
    /// Newton polish iterations per root
    #[arg(long = "polish", value_name = "N", default_value_t = DEFAULT_POLISH_ITERS, value_parser = clap::value_parser!(u32).range(0..=8))]
    pub polish_iters: u32,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub source: InlineSource,
    /// Width of the classification bands, relative; in (0, 1e-2]
    #[arg(long = "eps-class", value_name = "EPS", default_value_t = DEFAULT_EPS_CLASS, value_parser = parse_eps_class)]
    pub eps_class: f64,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// Standard coefficients A,B,C,D of Ax^3 + Bx^2 + Cx + D (complex literals)
    #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true, required = true)]
    pub coeffs: String,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: InlineSource,
    /// Three claimed roots, comma separated
    #[arg(long, value_name = "X1,X2,X3", allow_hyphen_values = true, required = true)]
    pub roots: String,
    /// Residual threshold for PASS
    #[arg(long, value_name = "TOL", default_value_t = DEFAULT_CHECK_TOL, value_parser = parse_tol)]
    pub tol: f64,
}

fn parse_eps_class(text: &str) -> Result<f64, String> {
    let value: f64 = text
        .parse()
        .map_err(|_| "not a decimal number".to_owned())?;
    if value > 0.0 && value <= 1e-2 {
        Ok(value)
    } else {
        Err("must lie in (0, 1e-2]".to_owned())
    }
}

fn parse_tol(text: &str) -> Result<f64, String> {
    let value: f64 = text
        .parse()
        .map_err(|_| "not a decimal number".to_owned())?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err("must be a positive finite number".to_owned())
    }
}

fn raw_fields<const N: usize>(text: &str) -> [String; N] {
    let mut out: [String; N] = std::array::from_fn(|_| String::new());
    for (slot, field) in out.iter_mut().zip(text.split(',')) {
        *slot = field.trim().to_owned();
    }
    out
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Solve(args) => run_solve(args, out, err),
        Command::Decompose(args) => run_decompose(args, out, err),
        Command::Reduce(args) => run_reduce(args, out, err),
        Command::Check(args) => run_check_command(args, out, err),
    }
}

fn usage_error(err: &mut dyn Write, flag: &str, message: &str) -> i32 {
    let _ = writeln!(err, "error: {flag}: {message}");
    exit_code::USAGE
}

fn run_solve(args: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = SolveOptions {
        eps_class: args.eps_class,
        polish_iters: args.polish_iters,
    };
    if let Some(path) = args.source.input {
        return batch::run_batch(&path, args.format, &opts, out, err);
    }

    let (solved, input) = if let Some(text) = args.source.coeffs.as_deref() {
        let coeffs = match parse_complex_list::<4>(text) {
            Ok(c) => c,
            Err(message) => return usage_error(err, "--coeffs", &message),
        };
        (solve_from_coefficients(coeffs, &opts), raw_fields::<4>(text))
    } else {
        let text = args.source.reduced.as_deref().expect("source group is required");
        let pair = match parse_complex_list::<2>(text) {
            Ok(c) => c,
            Err(message) => return usage_error(err, "--reduced", &message),
        };
        let reduced = ReducedCubic::new(pair[0], pair[1]);
        let input = [
            "1".to_owned(),
            "0".to_owned(),
            render_complex(reduced.p * -3.0),
            render_complex(reduced.q),
        ];
        (solve_from_reduced(reduced, &opts), input)
    };

    let solved = match solved {
        Ok(solved) => solved,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let write_result = match args.format {
        Format::Text => write_solution_text(out, &solved),
        Format::Jsonl => {
            let record = SolveRecord::success(1, input, &solved);
            writeln!(out, "{}", record.to_jsonl())
        }
        Format::Csv => {
            let record = SolveRecord::success(1, input, &solved);
            writeln!(out, "{}", SolveRecord::CSV_HEADER)
                .and_then(|_| writeln!(out, "{}", record.to_csv_row()))
        }
    };
    match write_result {
        Ok(()) => exit_code::SUCCESS,
        Err(_) => exit_code::USAGE,
    }
}

fn run_decompose(args: DecomposeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = SolveOptions {
        eps_class: args.eps_class,
        polish_iters: 0,
    };
    let solved = if let Some(text) = args.source.coeffs.as_deref() {
        let coeffs = match parse_complex_list::<4>(text) {
            Ok(c) => c,
            Err(message) => return usage_error(err, "--coeffs", &message),
        };
        solve_from_coefficients(coeffs, &opts)
    } else {
        let text = args.source.reduced.as_deref().expect("source group is required");
        match parse_complex_list::<2>(text) {
            Ok(pair) => solve_from_reduced(ReducedCubic::new(pair[0], pair[1]), &opts),
            Err(message) => return usage_error(err, "--reduced", &message),
        }
    };
    let solved = match solved {
        Ok(solved) => solved,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    match &solved.decomposition {
        Some(d) => match write_decomposition_text(out, &solved, d) {
            Ok(()) => exit_code::SUCCESS,
            Err(_) => exit_code::USAGE,
        },
        None => {
            let _ = writeln!(
                err,
                "error: no two-cube decomposition: classification is {}",
                solved.classification.name()
            );
            exit_code::INTERNAL_DEGENERACY
        }
    }
}

fn run_reduce(args: ReduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let coeffs = match parse_complex_list::<4>(&args.coeffs) {
        Ok(c) => c,
        Err(message) => return usage_error(err, "--coeffs", &message),
    };
    let general = match reduction::normalize(coeffs[0], coeffs[1], coeffs[2], coeffs[3]) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let record = reduction::depress(&general);
    match write_reduction_text(out, &record) {
        Ok(()) => exit_code::SUCCESS,
        Err(_) => exit_code::USAGE,
    }
}

fn run_check_command(args: CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let roots = match parse_complex_list::<3>(&args.roots) {
        Ok(r) => r,
        Err(message) => return usage_error(err, "--roots", &message),
    };
    let target = if let Some(text) = args.source.coeffs.as_deref() {
        let coeffs = match parse_complex_list::<4>(text) {
            Ok(c) => c,
            Err(message) => return usage_error(err, "--coeffs", &message),
        };
        match reduction::normalize(coeffs[0], coeffs[1], coeffs[2], coeffs[3]) {
            Ok(g) => CheckTarget::General(g),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return exit_code_for(&e);
            }
        }
    } else {
        let text = args.source.reduced.as_deref().expect("source group is required");
        match parse_complex_list::<2>(text) {
            Ok(pair) => CheckTarget::Reduced(ReducedCubic::new(pair[0], pair[1])),
            Err(message) => return usage_error(err, "--reduced", &message),
        }
    };
    match run_check(out, &target, roots, args.tol) {
        Ok(code) => code,
        Err(_) => exit_code::USAGE,
    }
}
