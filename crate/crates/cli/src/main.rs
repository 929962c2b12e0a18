//! `fusionkit`: validate and analyze fusion rings and modular data.
//!
//! Exit codes: 0 success, 1 validation or axiom failure (including
//! malformed input data), 2 usage error, 3 internal invariant violation
//! (a structural theorem failed on data that passed validation).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fusionkit_core::error::Error;
use fusionkit_core::fp::FpOptions;
use fusionkit_core::io::{emit_modular, emit_ring, parse_modular, parse_ring, write_json};
use fusionkit_core::modular::DEFAULT_MODULAR_TOLERANCE;
use fusionkit_core::report::{analyze_modular, analyze_ring, Outcome};
use fusionkit_core::{catalog, ring::FusionRing};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "Exact computations with fusion rings and modular data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Primary tolerance for the subcommand (eigenvector accuracy for
    /// ring analysis, complex comparisons for modular data). Overrides
    /// the FUSIONKIT_TOL environment variable.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Iteration budget for eigenvector computations.
    #[arg(long, global = true)]
    max_iter: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fusion-ring axioms of a ring file.
    Validate {
        /// Ring file path, or - for standard input.
        input: Option<PathBuf>,
    },
    /// Full report: validation, dimensions, gradings, series,
    /// divisibility.
    Analyze {
        input: Option<PathBuf>,
        /// Analyze every catalog entry instead of reading input.
        #[arg(long)]
        all_catalog: bool,
    },
    /// Central series and their duality only.
    Series {
        input: Option<PathBuf>,
    },
    /// S/T-matrix suite: validation, fusion-rule recovery, twists,
    /// invertibles, centralizer checks.
    Modular {
        /// Modular file path, or - for standard input.
        input: Option<PathBuf>,
    },
    /// List or emit built-in entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the names of every built-in entry.
    List,
    /// Print a built-in entry as a ring file (or a modular file with
    /// --modular).
    Emit {
        name: String,
        #[arg(long)]
        modular: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fusionkit: {e}");
            ExitCode::from(match e {
                Error::InvariantViolation(_) => EXIT_INVARIANT,
                Error::UnknownEntry(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let tolerance = cli.tol.or_else(env_tolerance);
    let ring_opts = FpOptions {
        tolerance: tolerance.unwrap_or(FpOptions::default().tolerance),
        max_iterations: cli
            .max_iter
            .unwrap_or(FpOptions::default().max_iterations),
    };
    let modular_tolerance = tolerance.unwrap_or(DEFAULT_MODULAR_TOLERANCE);

    match &cli.command {
        Command::Validate { input } => {
            let ring = read_ring(input.as_deref())?;
            let analysis = analyze_ring(&ring, &ring_opts, false)?;
            let report = match cli.format {
                Format::Json => {
                    let mut map = Map::new();
                    map.insert("validation".into(), analysis.value()["validation"].clone());
                    map.insert("rank".into(), analysis.value()["rank"].clone());
                    map.insert("labels".into(), analysis.value()["labels"].clone());
                    write_json(&Value::Object(map))
                }
                Format::Text => analysis.text(),
            };
            write_output(cli, &report)?;
            Ok(outcome_code(analysis.outcome))
        }
        Command::Analyze { input, all_catalog } => {
            if *all_catalog {
                let mut entries = Map::new();
                let mut worst = Outcome::Pass;
                let mut text = String::new();
                for entry in catalog::build_all()? {
                    let analysis = analyze_ring(&entry.ring, &ring_opts, true)?;
                    worst = worst_outcome(worst, analysis.outcome);
                    text.push_str(&format!("== {}\n{}", entry.name, analysis.text()));
                    entries.insert(entry.name.to_string(), analysis.value().clone());
                }
                let report = match cli.format {
                    Format::Json => write_json(&json!({ "entries": Value::Object(entries) })),
                    Format::Text => text,
                };
                write_output(cli, &report)?;
                return Ok(outcome_code(worst));
            }
            let ring = read_ring(input.as_deref())?;
            let analysis = analyze_ring(&ring, &ring_opts, true)?;
            let report = match cli.format {
                Format::Json => analysis.json(),
                Format::Text => analysis.text(),
            };
            write_output(cli, &report)?;
            Ok(outcome_code(analysis.outcome))
        }
        Command::Series { input } => {
            let ring = read_ring(input.as_deref())?;
            let analysis = analyze_ring(&ring, &ring_opts, false)?;
            let report = match cli.format {
                Format::Json => analysis.json(),
                Format::Text => analysis.text(),
            };
            write_output(cli, &report)?;
            Ok(outcome_code(analysis.outcome))
        }
        Command::Modular { input } => {
            let text = read_input(input.as_deref())?;
            let md = parse_modular(&text, modular_tolerance)?;
            let analysis = analyze_modular(&md)?;
            let report = match cli.format {
                Format::Json => analysis.json(),
                Format::Text => analysis.text(),
            };
            write_output(cli, &report)?;
            Ok(outcome_code(analysis.outcome))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let names = catalog::names();
                let report = match cli.format {
                    Format::Json => write_json(&json!({ "entries": names })),
                    Format::Text => {
                        let mut s = names.join("\n");
                        s.push('\n');
                        s
                    }
                };
                write_output(cli, &report)?;
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Emit { name, modular } => {
                let entry = catalog::build(name)?;
                let report = if *modular {
                    let md = entry.modular.ok_or_else(|| {
                        Error::UnknownEntry(format!("{name} carries no modular data"))
                    })?;
                    emit_modular(&md)
                } else {
                    emit_ring(&entry.ring)
                };
                write_output(cli, &report)?;
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn env_tolerance() -> Option<f64> {
    let raw = std::env::var("FUSIONKIT_TOL").ok()?;
    match raw.trim().parse::<f64>() {
        Ok(t) if t > 0.0 => Some(t),
        _ => {
            eprintln!("fusionkit: ignoring invalid FUSIONKIT_TOL value {raw:?}");
            None
        }
    }
}

fn outcome_code(outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::ValidationFailed => ExitCode::from(EXIT_FAIL),
        Outcome::TheoremViolation => ExitCode::from(EXIT_INVARIANT),
    }
}

fn worst_outcome(a: Outcome, b: Outcome) -> Outcome {
    use Outcome::*;
    match (a, b) {
        (TheoremViolation, _) | (_, TheoremViolation) => TheoremViolation,
        (ValidationFailed, _) | (_, ValidationFailed) => ValidationFailed,
        _ => Pass,
    }
}

fn read_input(path: Option<&std::path::Path>) -> Result<String, Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_ring(path: Option<&std::path::Path>) -> Result<FusionRing, Error> {
    parse_ring(&read_input(path)?)
}

fn write_output(cli: &Cli, report: &str) -> Result<(), Error> {
    match &cli.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}
