use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hopf_cli::commands::{self, exit_code, KPolicy, RunReport};
use hopf_cli::{load, Settings, Subject, Suite};

#[derive(Parser, Debug)]
#[command(name = "hopf", version, about = "Exact indicators, exponents, orders and fusion indices of Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coproduct-tuple budget for generic Sweedler powers.
    #[arg(long, global = true, default_value_t = hopf_core::hopf::DEFAULT_MAX_TERMS)]
    max_terms: u64,
    /// Exponent scan cap (default dim(H)²).
    #[arg(long, global = true)]
    exp_cap: Option<u64>,
    /// Precision of the numerical approximations printed next to exact values.
    #[arg(long, global = true, default_value_t = 128)]
    precision_bits: u32,
    /// Seed for character-table splitting; HOPF_SEED overrides it.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Include wall-clock timings in the report (breaks byte-identical reruns).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in algebras.
    Catalog,
    /// Table of ν_{m,k}(χ) for m up to --m.
    Indicators {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        m: u64,
        #[arg(long, value_enum, default_value_t = KPolicy::One)]
        k: KPolicy,
        #[arg(long = "char")]
        chi: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exponents of the simples and of the algebra.
    Exponent {
        #[arg(long)]
        algebra: String,
        #[arg(long = "char")]
        chi: Option<String>,
    },
    /// Order and multiplicity of simples.
    Order {
        #[arg(long)]
        algebra: String,
        #[arg(long = "char")]
        chi: Option<String>,
    },
    /// Fusion matrix analysis and index of imprimitivity.
    Index {
        #[arg(long)]
        algebra: String,
        #[arg(long = "char")]
        chi: Option<String>,
        /// Write the fusion digraph of each analysed character as GraphViz.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// Run a verifier suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        algebra: String,
    },
}

fn print_json<T: Serialize>(v: &T) {
    print_text(&(serde_json::to_string_pretty(v).expect("reports serialize") + "\n"));
}

/// Writes to stdout, treating a closed pipe as the reader being done.
fn print_text(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn run(cli: Cli) -> hopf_core::Result<i32> {
    let seed = match std::env::var("HOPF_SEED") {
        Ok(v) => v.parse().map_err(|_| hopf_core::Error::Domain(format!("HOPF_SEED={} is not an integer", v)))?,
        Err(_) => cli.seed,
    };
    let settings = Settings { max_terms: cli.max_terms, exp_cap: cli.exp_cap, precision_bits: cli.precision_bits, seed };
    let started = std::time::Instant::now();
    let mut timings = std::collections::BTreeMap::new();
    let mut subject = |spec: &str| -> hopf_core::Result<Subject> {
        let t = std::time::Instant::now();
        let s = load(spec, settings.clone())?;
        eprintln!("loaded {} (dim {}) in {:.2?}", s.name, s.alg.dim(), t.elapsed());
        timings.insert("load".to_string(), t.elapsed().as_millis());
        Ok(s)
    };
    let finish = |mut timings: std::collections::BTreeMap<String, u128>| {
        timings.insert("total".to_string(), started.elapsed().as_millis());
        cli.timings.then_some(timings)
    };
    match cli.command {
        Command::Catalog => {
            let mut r = RunReport::new("catalog", None, &settings, commands::cmd_catalog());
            r.timings_ms = finish(timings);
            print_json(&r);
        }
        Command::Indicators { algebra, m, k, chi, format } => {
            let s = subject(&algebra)?;
            let rows = commands::cmd_indicators(&s, m, k, chi.as_deref())?;
            match format {
                Format::Csv => print_text(&commands::indicators_csv(&rows)?),
                Format::Json => {
                    let mut r = RunReport::new("indicators", Some(&s), &settings, rows);
                    r.timings_ms = finish(timings);
                    print_json(&r);
                }
            }
        }
        Command::Exponent { algebra, chi } => {
            let s = subject(&algebra)?;
            let out = commands::cmd_exponent(&s, chi.as_deref())?;
            let mut r = RunReport::new("exponent", Some(&s), &settings, out);
            r.timings_ms = finish(timings);
            print_json(&r);
        }
        Command::Order { algebra, chi } => {
            let s = subject(&algebra)?;
            let out = commands::cmd_order(&s, chi.as_deref())?;
            let mut r = RunReport::new("order", Some(&s), &settings, out);
            r.timings_ms = finish(timings);
            print_json(&r);
        }
        Command::Index { algebra, chi, dot } => {
            let s = subject(&algebra)?;
            let results = commands::cmd_index(&s, chi.as_deref())?;
            if let Some(path) = dot {
                let text: String = results.iter().map(|(_, fa)| commands::fusion_dot(&s, fa)).collect();
                std::fs::write(&path, text)
                    .map_err(|e| hopf_core::Error::Domain(format!("cannot write {}: {}", path.display(), e)))?;
                eprintln!("wrote {}", path.display());
            }
            let out: Vec<_> = results.into_iter().map(|(o, _)| o).collect();
            let mut r = RunReport::new("index", Some(&s), &settings, out);
            r.timings_ms = finish(timings);
            print_json(&r);
        }
        Command::Verify { suite, algebra } => {
            let s = subject(&algebra)?;
            let out = commands::cmd_verify(&s, suite);
            for c in &out.failures {
                eprintln!("{} [{:?}] {}: {}", c.suite, c.status, c.name, c.detail);
            }
            let code = out.exit_code();
            let mut r = RunReport::new("verify", Some(&s), &settings, out);
            r.timings_ms = finish(timings);
            print_json(&r);
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
