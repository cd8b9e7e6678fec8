//! Batch front end: instance files in, JSON reports out.
//!
//! Exit codes: 0 = all audits pass, 1 = verdict failure, 2 =
//! unresolved/unverified encountered, 3 = input error.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use formring_core::poly::MonomialOrder;

use formring_cli::commands::{self, Ctx};
use formring_cli::corpus;
use formring_cli::instance::{parse_instance, InstanceFile};
use formring_cli::report::{self, Report};

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Parser)]
#[command(
    name = "formring",
    version,
    about = "Exact commutative-algebra toolkit: graded-ring contraction audits and intersection cycles on cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Term order for basis computations.
    #[arg(long, global = true, value_enum, default_value = "degrevlex")]
    order: OrderArg,
    /// Window bound for symbolic-power and closure audits (default: the
    /// instance file's value, else 3).
    #[arg(long, global = true)]
    nmax: Option<u32>,
    /// Hyperplane seed; repeatable. Falls back to the instance file, the
    /// FORMRING_SEED environment variable, then 1.
    #[arg(long, global = true)]
    seed: Vec<u64>,
    /// Absolute bound for hyperplane coefficients (default 10000).
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Directory for JSON report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the JSON report to stdout instead of the summary line.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in reports (off by default so reports are
    /// byte-identical across runs).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced basis of the instance ideal (ambient + ideal generators).
    Gb { file: PathBuf },
    /// Krull dimension of the quotient by the instance ideal.
    Dim { file: PathBuf },
    /// Minimal primes with certificates.
    Minprimes { file: PathBuf },
    /// Defining kernel of the blowup algebra presentation.
    Rees { file: PathBuf },
    /// Presentation of the associated graded ring with its grading checks.
    Assocgraded { file: PathBuf },
    /// Analytic spread vs local dimension over the candidate primes.
    Spread { file: PathBuf },
    /// Symbolic powers of a monomial ideal up to the window bound.
    Symbolic { file: PathBuf },
    /// Integral closures of powers of a monomial ideal.
    Closure { file: PathBuf },
    /// Full condition audit: contractions, counts, spread, symbolic powers.
    Check { file: PathBuf },
    /// Intersection-cycle run(s) on the instance's cone pair.
    Svcycle { file: PathBuf },
    /// Contractions of the normal cone components with embedded flags.
    Distinguished { file: PathBuf },
    /// Run every bundled instance plus the property suites.
    Corpus {
        /// Optional directory of .ideal files replacing the bundled set.
        dir: Option<PathBuf>,
    },
}

fn load(path: &Path) -> Result<InstanceFile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "instance".to_string());
    parse_instance(&text, &stem)
}

fn emit(report: &Report, code: i32, cli: &Cli) -> Result<()> {
    let value = report.to_value();
    report::validate(&value).context("report failed schema validation")?;
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}-{}.json", report.instance, report.command));
        report::write_atomic(&path, &report.to_json_string())?;
    }
    if cli.json {
        print!("{}", report.to_json_string());
    } else {
        let verdicts: Vec<String> = report
            .verdicts
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!(
            "{} {}: exit {} [{}]",
            report.command,
            report.instance,
            code,
            verdicts.join(", ")
        );
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            3
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32> {
    let ctx = Ctx {
        order: match cli.order {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        },
        nmax: cli.nmax,
        seeds: cli.seed.clone(),
        bound: cli.bound,
        timings: cli.timings,
    };
    let (report, code, subs) = match &cli.command {
        Command::Gb { file } => one(commands::cmd_gb(&load(file)?, &ctx)),
        Command::Dim { file } => one(commands::cmd_dim(&load(file)?, &ctx)),
        Command::Minprimes { file } => one(commands::cmd_minprimes(&load(file)?, &ctx)),
        Command::Rees { file } => one(commands::cmd_rees(&load(file)?, &ctx)),
        Command::Assocgraded { file } => one(commands::cmd_assocgraded(&load(file)?, &ctx)),
        Command::Spread { file } => one(commands::cmd_spread(&load(file)?, &ctx)),
        Command::Symbolic { file } => one(commands::cmd_symbolic(&load(file)?, &ctx)),
        Command::Closure { file } => one(commands::cmd_closure(&load(file)?, &ctx)),
        Command::Check { file } => one(commands::cmd_check(&load(file)?, &ctx)),
        Command::Svcycle { file } => one(commands::cmd_svcycle(&load(file)?, &ctx)),
        Command::Distinguished { file } => one(commands::cmd_distinguished(&load(file)?, &ctx)),
        Command::Corpus { dir } => {
            let files = match dir {
                None => corpus::bundled_instances()?,
                Some(d) => {
                    let mut entries: Vec<PathBuf> = std::fs::read_dir(d)?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.extension().is_some_and(|x| x == "ideal"))
                        .collect();
                    entries.sort();
                    let mut files = Vec::new();
                    for path in entries {
                        files.push(load(&path)?);
                    }
                    files
                }
            };
            corpus::cmd_corpus(&files, &ctx)
        }
    };
    for (name, sub) in &subs {
        let value = sub.to_value();
        report::validate(&value).context("sub-report failed schema validation")?;
        if let Some(dir) = &cli.out {
            std::fs::create_dir_all(dir)?;
            report::write_atomic(&dir.join(format!("{name}.json")), &sub.to_json_string())?;
        }
    }
    emit(&report, code, cli)?;
    Ok(code)
}

fn one((report, code): (Report, i32)) -> (Report, i32, Vec<(String, Report)>) {
    (report, code, vec![])
}
