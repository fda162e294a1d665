//! Command-line front end for the 2-bridge knot census.

mod render;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use bridge_census::census::analyze_all;
use bridge_census::{
    analyze, enumerate_model_words, group_by_knot, lower_bound_avg_genus, normalize_to_model,
    run_census_with, run_check, sample, BilliardWord, CensusOptions, Error, Execution, Normalized,
};
use clap::{Parser, Subcommand, ValueEnum};

use render::{Format, Printer};

#[derive(Parser, Debug)]
#[command(
    name = "bridge-census",
    version,
    about = "Census of 2-bridge knots through reduced billiard table words"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Human, global = true)]
    format: FormatArg,

    /// Worker threads (defaults to the machine's parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a billiard table word and analyze the knot it represents.
    Analyze {
        /// Word over `+` and `-`; whitespace is ignored.
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Enumerate every model word with C crossings and aggregate.
    Census {
        c: usize,
        /// Also emit one row per word.
        #[arg(long)]
        per_word: bool,
    },
    /// Closed-form lower bound on the average genus for a range like `6..9`.
    Bound {
        range: String,
        /// Also report the exact average genus for crossing numbers up to this.
        #[arg(long, default_value_t = 24)]
        max_enumerate: usize,
    },
    /// List the model words with C crossings in enumeration order.
    Enumerate { c: usize },
    /// Group the model words with C crossings by knot type.
    Classes { c: usize },
    /// Analyze COUNT uniformly random words of length N.
    Sample { n: usize, count: usize, seed: u64 },
    /// Cross-check every shortcut against the planar-diagram oracle.
    Check { c_max: usize },
}

/// Exit status 1 for invariant failures, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parity(_) | Error::MultiComponent(_) | Error::Invariant(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || usage(format!("invalid range {text:?}, expected C or A..B"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let c = num(text)?;
            (c, c)
        }
    };
    if a < 3 || b < a {
        return Err(bad());
    }
    Ok(a..=b)
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        bridge_census::par::configure_threads(n).map_err(usage)?;
    }
    let format = match cli.format {
        FormatArg::Human => Format::Human,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let stdout = io::stdout();
    let mut out = Printer::new(stdout.lock(), format);
    let exec = Execution::Parallel;

    match cli.command {
        Command::Analyze { word } => {
            let w = BilliardWord::parse(&word)?;
            let class = normalize_to_model(&w);
            let a = match &class {
                Normalized::ModelWord(r) => Some(analyze(r)?),
                _ => None,
            };
            out.analysis(&w, &class, a.as_ref())?;
        }
        Command::Census { c, per_word } => {
            let report = run_census_with(
                c,
                &CensusOptions {
                    execution: exec,
                    classes: None,
                },
            )?;
            let rows = if per_word {
                Some(analyze_all(c, exec)?)
            } else {
                None
            };
            out.census(&report, rows.as_deref())?;
        }
        Command::Bound {
            range,
            max_enumerate,
        } => {
            let range = parse_range(&range)?;
            let mut rows = Vec::new();
            for c in range {
                let bound = lower_bound_avg_genus(c)?;
                let exact = if c <= max_enumerate {
                    let opts = CensusOptions {
                        execution: exec,
                        classes: Some(false),
                    };
                    Some(run_census_with(c, &opts)?.avg_genus)
                } else {
                    None
                };
                rows.push((c, bound, exact));
            }
            out.bounds(&rows)?;
        }
        Command::Enumerate { c } => {
            out.words(enumerate_model_words(c)?)?;
        }
        Command::Classes { c } => {
            out.classes(&group_by_knot(c)?)?;
        }
        Command::Sample { n, count, seed } => {
            let mut rows = Vec::with_capacity(count);
            for w in sample(n, count, seed) {
                let class = normalize_to_model(&w);
                let a = match &class {
                    Normalized::ModelWord(r) => Some(analyze(r)?),
                    _ => None,
                };
                rows.push((w, class, a));
            }
            out.samples(&rows)?;
        }
        Command::Check { c_max } => {
            if c_max < 3 {
                return Err(Error::TooFewCrossings(c_max).into());
            }
            let report = run_check(c_max, exec)?;
            out.check(&report)?;
            if !report.passed() {
                out.flush()?;
                return Err(Failure {
                    code: 1,
                    message: "cross-check failed".into(),
                });
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.message.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(f) => {
            let _ = writeln!(io::stderr(), "error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
