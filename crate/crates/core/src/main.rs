use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use qwhittaker::cli::job::{parse_ints, parse_range, parse_rational};
use qwhittaker::cli::{run_to_output, Command, Format, Job, Limits, EXIT_INVALID};
use qwhittaker::error::Result;

/// Exact q-Whittaker functions, Macdonald polynomials, affine Demazure
/// characters and quantum-torus matrix elements.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Args {
    /// whittaker | macdonald | demazure | torus | verify
    command: String,
    /// Number of variables (ℓ + 1).
    #[arg(long, default_value_t = 2)]
    rank: usize,
    /// Comma-separated integer point, e.g. `2,1,0`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Comma-separated partition, e.g. `2,1`.
    #[arg(long)]
    lambda: Option<String>,
    /// Rational q, e.g. `1/3`; omit for symbolic q.
    #[arg(long)]
    q: Option<String>,
    /// Rational t; `0` or omitted (without --k) means t = 0 with symbolic q.
    #[arg(long)]
    t: Option<String>,
    /// Use t = q^{-k}.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// q-series truncation order for constant-term checks.
    #[arg(long, default_value_t = 8)]
    trunc: usize,
    /// Inclusive coordinate box `lo..hi` for verification.
    #[arg(long = "box", default_value = "0..3", allow_hyphen_values = true)]
    range: String,
    /// Suite name, repeatable; `all` runs everything.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    /// json | text
    #[arg(long, default_value = "json")]
    format: String,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report the normalized function (polynomial coefficients).
    #[arg(long)]
    normalized: bool,
    /// Include wall-clock time per suite.
    #[arg(long)]
    timing: bool,
    /// Largest accepted rank.
    #[arg(long, default_value_t = Limits::default().max_rank)]
    max_rank: usize,
    /// Largest accepted absolute value of a coordinate or part.
    #[arg(long, default_value_t = Limits::default().max_entry)]
    max_entry: i64,
}

fn build_job(a: &Args) -> Result<Job> {
    let command: Command = a.command.parse()?;
    let mut job = Job::new(command, a.rank);
    job.point = a.point.as_deref().map(parse_ints).transpose()?;
    job.lambda = a.lambda.as_deref().map(parse_ints).transpose()?;
    job.q = a.q.as_deref().map(parse_rational).transpose()?;
    job.t = a.t.as_deref().map(parse_rational).transpose()?;
    job.k = a.k;
    job.trunc = a.trunc;
    job.range = parse_range(&a.range)?;
    job.suites = a.suites.clone();
    job.format = a.format.parse::<Format>()?;
    job.normalized = a.normalized;
    job.timing = a.timing;
    job.limits = Limits { max_rank: a.max_rank, max_entry: a.max_entry };
    Ok(job)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let out = match build_job(&args) {
        Ok(job) => run_to_output(&job),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };
    if out.exit == EXIT_INVALID {
        eprint!("{}", out.text);
    } else if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &out.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_INVALID as u8);
        }
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.exit as u8)
}
