mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use cayley_census::census::{self, Method};
use cayley_census::formula::CountOptions;
use cayley_census::numbers::is_prime;
use cayley_census::{Limits, Mode};
use clap::{Args, Parser, Subcommand};

use output::Format;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;

/// Count Cayley graphs of a finite group up to (weak) equivalence, by
/// closed-form Burnside/Möbius sums and by brute-force orbit enumeration.
#[derive(Parser)]
#[command(name = "cayley-census", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count classes of degree-m Cayley graphs of one group.
    Count {
        #[command(flatten)]
        census: CensusArgs,
        /// Degree m of the Cayley graphs.
        #[arg(long, short)]
        degree: usize,
    },
    /// Counts for every degree 1..|A| of one group.
    Table {
        #[command(flatten)]
        census: CensusArgs,
    },
    /// Cross-check formula against oracle over the group roster.
    Validate {
        /// Largest group order to include.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Degree range such as `1..6` (inclusive) or a single degree.
        #[arg(long, value_parser = parse_degrees)]
        degrees: Option<(usize, usize)>,
        /// Write every row here; the summary still goes to standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Negate the Möbius values below the top (fault injection).
        #[arg(long, hide = true)]
        corrupt_moebius: bool,
    },
    /// Circulant graph counts for a prime modulus.
    Circulant {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        max_degree: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CensusArgs {
    /// Group spec: Z<n>, products like Z2xZ4, D<n>, Q8, S<n>, A<n>, file:<path>.
    #[arg(long, short)]
    group: String,
    #[arg(long, default_value_t = Mode::Weak)]
    mode: Mode,
    #[arg(long, default_value_t = Method::Formula)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for the formula engine.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

fn parse_degrees(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad degree `{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if lo == 0 || lo > hi {
        return Err(format!("degree range `{s}` must satisfy 1 <= lo <= hi"));
    }
    Ok((lo, hi))
}

fn limits() -> Result<Limits> {
    match std::env::var("CAYLEY_CENSUS_MAX_ORDER") {
        Ok(v) => {
            let n = v.trim().parse().with_context(|| format!("CAYLEY_CENSUS_MAX_ORDER=`{v}` is not a number"))?;
            Ok(Limits::with_override(n))
        }
        Err(_) => Ok(Limits::default()),
    }
}

fn options(threads: usize) -> Result<CountOptions> {
    Ok(CountOptions { limits: limits()?, threads, ..Default::default() })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Count { census: c, degree } => {
            let report = census::count(&c.group, degree, c.mode, c.method, &options(c.parallel)?)?;
            output::reports(&mut *output::sink(c.output.as_deref())?, std::slice::from_ref(&report), c.format, true)?;
            if report.disagrees() {
                eprintln!("formula and oracle disagree for {} m={degree} {}", report.group, report.mode);
                return Ok(EXIT_DISAGREE);
            }
            Ok(EXIT_OK)
        }
        Command::Table { census: c } => {
            let rows = census::table(&c.group, c.mode, c.method, &options(c.parallel)?)?;
            output::reports(&mut *output::sink(c.output.as_deref())?, &rows, c.format, false)?;
            let bad: Vec<_> = rows.iter().filter(|r| r.disagrees()).map(|r| r.degree.to_string()).collect();
            if !bad.is_empty() {
                eprintln!("formula and oracle disagree at m = {}", bad.join(", "));
                return Ok(EXIT_DISAGREE);
            }
            Ok(EXIT_OK)
        }
        Command::Validate { max_order, degrees, report, format, parallel, corrupt_moebius } => {
            let opts = CountOptions { corrupt_moebius, ..options(parallel)? };
            let rows = census::validate(max_order, degrees, &opts)?;
            if let Some(path) = &report {
                output::validation(&mut *output::sink(Some(path))?, &rows, format)?;
            }
            let bad: Vec<_> = rows.iter().filter(|r| !r.agree).collect();
            println!("{} rows, {} agree, {} disagree", rows.len(), rows.len() - bad.len(), bad.len());
            if bad.is_empty() {
                return Ok(EXIT_OK);
            }
            let mut err = std::io::stderr().lock();
            output::validation(&mut err, &bad.into_iter().cloned().collect::<Vec<_>>(), Format::Text)?;
            Ok(EXIT_DISAGREE)
        }
        Command::Circulant { prime, max_degree, format, output: path } => {
            if prime < 3 || !is_prime(prime) {
                bail!("circulant tables cover odd prime moduli only; {prime} is not an odd prime (use `count --group Z{prime}` for other cyclic groups)");
            }
            let rows = census::circulant_table(prime, max_degree)?;
            output::circulant(&mut *output::sink(path.as_deref())?, &rows, format)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
