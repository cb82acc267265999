//! Deterministic command-line front end: enumeration, single-spectrum
//! checks, monad shapes, curve profiles, generic initial ideals, and the
//! exclusion report. Exit codes: 0 success, 1 when the mathematical answer
//! is "violation found" (or a computation reports an error), 2 usage.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use spectra::config::{default_cache_dir, parse_field_spec, Config, OutputFormat};
use spectra::curves::{tail_search, CurveFamily, TailSearcher, TwoPlanesVariant};
use spectra::groebner::{
    gin, points_ideal, standard_resolution, Field, FieldSpec, MonomialIdeal, PrimeField, Rationals,
};
use spectra::monad::{enumerate_admissible, MonadRecord};
use spectra::report::write_cached;
use spectra::seq::FinSuppSeq;
use spectra::spectrum::{enumerate, ObstructionVerdict, Spectrum, SpectrumRecord};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spectra", version, about = "Exact calculus for spectra of stable rank-2 bundles on P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all valid spectra with the given c2, one JSON line or TSV
    /// row per spectrum
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        c2: i64,
        /// What to verify per spectrum
        #[arg(long, value_enum, default_value_t = Filter::Obstruction)]
        filter: Filter,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Check a comma-separated tail (values at i = 0, 1, ...) against the
    /// axioms and the obstruction; exits 1 when something is violated
    Check { tail: String },
    /// List the (rho, b) monad shapes not excluded for a spectrum
    Monad { tail: String },
    /// Closed-form curve profiles and the reverse search
    Curves {
        #[command(subcommand)]
        cmd: CurvesCmd,
    },
    /// Generic initial ideals of point configurations
    Gin {
        #[command(subcommand)]
        cmd: GinCmd,
    },
    /// Write (and cache) the exclusion report up to a bound
    Report {
        #[arg(long = "c2-max", value_parser = clap::value_parser!(i64).range(1..))]
        c2_max: i64,
        /// Cache directory; defaults to $SPECTRA_CACHE or .spectra-cache
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    /// Axioms only
    AxiomsOnly,
    /// Axioms plus the count-of-ones obstruction verdict
    Obstruction,
    /// Additionally count curve-family matches for each tail
    TailSearch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum CurvesCmd {
    /// Print the second-difference profile of one family instance
    Delta2(FamilyArgs),
    /// List the families reproducing a candidate tail
    Search {
        #[arg(long)]
        tail: String,
        #[arg(long = "max-c2", default_value_t = 21)]
        max_c2: i64,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// quadric | cone | twoplanes | twoplanes-line | doubleplane
    #[arg(long)]
    family: String,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    d0: Option<i64>,
    #[arg(long)]
    d1: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    r0: Option<i64>,
    #[arg(long)]
    r1: Option<i64>,
    #[arg(long)]
    sigma: Option<i64>,
    /// Comma-separated strictly increasing lambda values
    #[arg(long)]
    lambda: Option<String>,
    /// twoplanes-line variant: xpp (default) or xline
    #[arg(long)]
    variant: Option<String>,
    /// Degree of the extra line section for the xline variant
    #[arg(long)]
    mneg: Option<i64>,
}

#[derive(Subcommand)]
enum GinCmd {
    /// gin, standard resolution and Hilbert data of points in P^2
    Points {
        /// JSON file holding [[x, y, z], ...] integer coordinates
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// rationals (default) or prime:P for a fast pre-check
        #[arg(long, default_value = "rationals")]
        field: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", json!({ "error": e }));
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("{}", json!({ "error": msg }));
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate { c2, filter, output } => {
            let searcher = match filter {
                Filter::TailSearch => Some(TailSearcher::new(c2)),
                _ => None,
            };
            for s in enumerate(c2) {
                let mut rec = SpectrumRecord::new(&s);
                match filter {
                    Filter::AxiomsOnly => {}
                    Filter::Obstruction => rec = rec.with_obstruction(s.obstruction()),
                    Filter::TailSearch => {
                        rec = rec.with_obstruction(s.obstruction());
                        let searcher = searcher.as_ref().expect("built above");
                        rec.verdicts.curve_matches = Some(searcher.matches(&s.tail_seq()).len());
                    }
                }
                match output {
                    Output::Json => println!(
                        "{}",
                        serde_json::to_string(&rec).map_err(|e| e.to_string())?
                    ),
                    Output::Tsv => {
                        let tail = join_tail(&rec.tail);
                        let obs = rec
                            .verdicts
                            .obstruction
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "-".into());
                        let matches = rec
                            .verdicts
                            .curve_matches
                            .map(|n| n.to_string())
                            .unwrap_or_else(|| "-".into());
                        println!("{}\t{}\t{}\tok\t{}\t{}", rec.c2, tail, rec.m, obs, matches);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { tail } => {
            let tail = parse_tail(&tail)?;
            match Spectrum::validate(&FinSuppSeq::from_tail(&tail)) {
                Err(violations) => {
                    let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                    println!(
                        "{}",
                        json!({ "tail": tail, "verdicts": { "axioms": msgs } })
                    );
                    Ok(ExitCode::from(1))
                }
                Ok(s) => {
                    let verdict = s.obstruction();
                    let rec = SpectrumRecord::new(&s).with_obstruction(verdict);
                    println!(
                        "{}",
                        serde_json::to_string(&rec).map_err(|e| e.to_string())?
                    );
                    if verdict == ObstructionVerdict::Violated {
                        Ok(ExitCode::from(1))
                    } else {
                        Ok(ExitCode::SUCCESS)
                    }
                }
            }
        }
        Command::Monad { tail } => {
            let tail = parse_tail(&tail)?;
            match Spectrum::validate(&FinSuppSeq::from_tail(&tail)) {
                Err(violations) => {
                    let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                    Err(format!("invalid spectrum: {}", msgs.join("; ")))
                }
                Ok(s) => {
                    for (rho, b) in enumerate_admissible(&s) {
                        let rec = MonadRecord::new(&rho, &b);
                        println!(
                            "{}",
                            serde_json::to_string(&rec).map_err(|e| e.to_string())?
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Curves { cmd } => match cmd {
            CurvesCmd::Delta2(args) => match family_from_args(&args) {
                Err(msg) => Ok(usage_error(&msg)),
                Ok(family) => {
                    let d2 = family.delta2_h0().map_err(|e| e.to_string())?;
                    println!(
                        "{}",
                        json!({
                            "family": family,
                            "delta2": d2,
                            "degree": family.degree(),
                        })
                    );
                    Ok(ExitCode::SUCCESS)
                }
            },
            CurvesCmd::Search { tail, max_c2 } => {
                let tail = parse_tail(&tail)?;
                let t = FinSuppSeq::from_tail(&tail);
                let matches = tail_search(&t, max_c2);
                println!(
                    "{}",
                    json!({ "tail": tail, "matches": matches, "count": matches.len() })
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Gin { cmd } => match cmd {
            GinCmd::Points {
                file,
                trials,
                seed,
                field,
            } => {
                let spec = match parse_field_spec(&field) {
                    Ok(s) => s,
                    Err(msg) => return Ok(usage_error(&msg)),
                };
                let config = Config {
                    field: spec,
                    seed,
                    trials,
                    output: OutputFormat::Json,
                    ..Config::default()
                };
                if let Err(e) = config.validate() {
                    return Ok(usage_error(&e.to_string()));
                }
                let raw = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
                let coords: Vec<[i64; 3]> =
                    serde_json::from_str(&raw).map_err(|e| format!("bad points file: {e}"))?;
                let out = match spec {
                    FieldSpec::Rationals => gin_points(&Rationals, &coords, trials, seed)?,
                    FieldSpec::Prime(p) => {
                        let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                        gin_points(&f, &coords, trials, seed)?
                    }
                };
                println!("{out}");
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Report { c2_max, cache_dir } => {
            let config = Config {
                max_c2: c2_max,
                cache_dir: cache_dir.unwrap_or_else(default_cache_dir),
                ..Config::default()
            };
            config.validate().map_err(|e| e.to_string())?;
            let written = write_cached(config.max_c2, &config.cache_dir, env!("CARGO_PKG_VERSION"))
                .map_err(|e| e.to_string())?;
            print!("{}", written.markdown);
            eprintln!(
                "{}",
                json!({
                    "markdown": written.markdown_path,
                    "tsv": written.tsv_path,
                    "cache_hit": written.cache_hit,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn gin_points<F: Field>(
    field: &F,
    coords: &[[i64; 3]],
    trials: u32,
    seed: u64,
) -> Result<String, String> {
    let points: Vec<Vec<F::Elem>> = coords
        .iter()
        .map(|c| c.iter().map(|&x| field.from_i64(x)).collect())
        .collect();
    let gb = points_ideal(field, &points).map_err(|e| e.to_string())?;
    let g: MonomialIdeal = gin(field, &gb, trials, seed).map_err(|e| e.to_string())?;
    let res = standard_resolution(&g).map_err(|e| e.to_string())?;
    let hilbert = g.quotient_hf_window(0, res.deg_gamma() + 2);
    Ok(json!({
        "gin": g.gens_strings(),
        "sigma": res.sigma,
        "lambdas": res.lambdas,
        "degree": res.deg_gamma(),
        "hilbert": hilbert,
    })
    .to_string())
}

fn parse_tail(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("bad tail entry {p:?}")))
        .collect()
}

fn join_tail(tail: &[i64]) -> String {
    tail.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn family_from_args(args: &FamilyArgs) -> Result<CurveFamily, String> {
    let need = |v: Option<i64>, name: &str| v.ok_or(format!("--{name} is required"));
    let family = match args.family.as_str() {
        "quadric" => CurveFamily::QuadricDivisor {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
        },
        "cone" => CurveFamily::ConeCurve {
            d: need(args.d, "d")?,
        },
        "twoplanes" => CurveFamily::TwoPlanesNoLine {
            d0: need(args.d0, "d0")?,
            d1: need(args.d1, "d1")?,
            r: need(args.r, "r")?,
        },
        "twoplanes-line" => {
            let variant = match args.variant.as_deref().unwrap_or("xpp") {
                "xpp" => TwoPlanesVariant::Xpp,
                "xline" => TwoPlanesVariant::XprimePlusLine {
                    mneg: need(args.mneg, "mneg")?,
                },
                other => return Err(format!("unknown variant {other:?}")),
            };
            CurveFamily::TwoPlanesWithLine {
                r0: need(args.r0, "r0")?,
                d0: need(args.d0, "d0")?,
                r1: need(args.r1, "r1")?,
                d1: need(args.d1, "d1")?,
                variant,
            }
        }
        "doubleplane" => {
            let lambda = args.lambda.as_deref().ok_or("--lambda is required")?;
            let lambdas = parse_tail(lambda)?;
            CurveFamily::DoublePlane {
                sigma: args.sigma.unwrap_or(lambdas.len() as i64),
                lambdas,
                r0: need(args.r0, "r0")?,
                r: need(args.r, "r")?,
            }
        }
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(family)
}
