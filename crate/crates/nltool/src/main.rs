use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use nltool::bench::{render_table, run_bench};
use nltool::format::{format_poly, poly_json};
use nltool::report::{run_method, Method};
use nltool::spec::FunctionSpec;
use nltool::sweep::{run_sweep, FunctionSet, SweepConfig};

/// Nonlinearity of Boolean functions by cross-checking methods.
///
/// Functions are given as `tt:<hex>` (truth table, little-endian hex,
/// ceil(2^n/4) digits), `anf:<expr>` (e.g. "x1*x2 + 1"), or
/// `random:<seed>`. The environment variable NLTOOL_THREADS caps the
/// worker threads used by sweeps.
#[derive(Parser)]
#[command(name = "nltool", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumKind {
    Walsh,
    Distance,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the nonlinearity of one function.
    Nl {
        /// Function description: tt:<hex>, anf:<expr>, or random:<seed>.
        #[arg(long = "in")]
        input: String,
        /// Variable count.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the nonlinearity polynomial over a_0..a_n.
    Nlpoly {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the Walsh spectrum or the distance spectrum.
    Spectrum {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: SpectrumKind,
    },
    /// Cross-check methods over a family of functions and report
    /// per-class statistics. Exits 3 on any method disagreement.
    #[command(group(ArgGroup::new("set").required(true).args(["exhaustive", "sample"])))]
    Sweep {
        #[arg(long)]
        n: usize,
        /// All 2^(2^n) functions (n <= 4).
        #[arg(long)]
        exhaustive: bool,
        /// Number of random functions to draw instead.
        #[arg(long, value_name = "COUNT")]
        sample: Option<u64>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated methods to compare.
        #[arg(long, value_delimiter = ',',
              default_values_t = vec![Method::Fwt, Method::Nnf, Method::QLoop])]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Time each method over seeded random functions. The f2 method is
    /// opt-in here: its generator stream grows like C(2^n, t), which is
    /// only tractable for n <= 4 or so.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',',
              default_values_t = vec![Method::Fwt, Method::Nnf, Method::QLoop])]
        methods: Vec<Method>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("NLTOOL_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => {
                eprintln!("error: NLTOOL_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_function(input: &str, n: usize) -> Result<nlcore::BooleanFunction, String> {
    if !(1..=nlcore::MAX_VARS).contains(&n) {
        return Err(format!("n must be in 1..={}", nlcore::MAX_VARS));
    }
    let spec = FunctionSpec::parse(input).map_err(|e| format!("in {input:?}: {e}"))?;
    spec.realize(n).map_err(|e| format!("in {input:?}: {e}"))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Nl {
            input,
            n,
            method,
            format,
        } => {
            let f = parse_function(&input, n)?;
            let (report, _) = run_method(&f, method);
            match format {
                OutputFormat::Text => println!("{}", report.nl),
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&report).unwrap())
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nlpoly { input, n, format } => {
            let f = parse_function(&input, n)?;
            let poly = nlcore::build_nl_poly(&f);
            match format {
                OutputFormat::Text => println!("{}", format_poly(poly.poly())),
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string(&poly_json(n, poly.poly())).unwrap()
                    )
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { input, n, kind } => {
            let f = parse_function(&input, n)?;
            let line = match kind {
                SpectrumKind::Walsh => nlcore::walsh_spectrum(&f)
                    .values()
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                SpectrumKind::Distance => nlcore::distance_spectrum(&f)
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            println!("{line}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            n,
            exhaustive,
            sample,
            seed,
            methods,
            format,
        } => {
            if !(1..=nlcore::MAX_VARS).contains(&n) {
                return Err(format!("n must be in 1..={}", nlcore::MAX_VARS));
            }
            let set = if exhaustive {
                FunctionSet::Exhaustive
            } else {
                FunctionSet::Sample {
                    count: sample.unwrap(),
                    seed,
                }
            };
            let report = run_sweep(SweepConfig { n, set, methods })?;
            match format {
                OutputFormat::Text => print!("{}", report.render_text()),
                OutputFormat::Json => print!("{}", report.render_json_lines()),
            }
            let mut mismatched = false;
            for outcome in report.mismatches() {
                mismatched = true;
                let detail: Vec<String> = outcome
                    .reports
                    .iter()
                    .map(|r| format!("{}={}", r.method, r.nl))
                    .collect();
                eprintln!(
                    "mismatch on tt:{} (n={}): {}",
                    outcome.tt(),
                    n,
                    detail.join(" ")
                );
            }
            if mismatched {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Bench {
            n,
            reps,
            seed,
            methods,
        } => {
            if !(1..=nlcore::MAX_VARS).contains(&n) {
                return Err(format!("n must be in 1..={}", nlcore::MAX_VARS));
            }
            if reps == 0 {
                return Err("--reps must be positive".to_string());
            }
            let rows = run_bench(n, reps, seed, &methods);
            print!("{}", render_table(n, &rows));
            Ok(ExitCode::SUCCESS)
        }
    }
}
