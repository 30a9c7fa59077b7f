use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fitgroup::fitting::radical;
use fitgroup::harness::{emit_report, Catalog, Config, Format, Overrides};
use fitgroup::injectors::{
    hartley_injectors_constructive, injectors_oracle, iterated_class_injectors, pi_nilpotent_injectors_constructive,
    InjectorReport,
};
use fitgroup::{ClassExpr, Limits, PermGroup, PrimeSet};

#[derive(Parser)]
#[command(
    name = "fitgroup",
    version,
    about = "Fitting classes and injectors of finite permutation groups"
)]
struct Cli {
    /// Flat `key = value` configuration file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Extra group file to add to the catalog (repeatable).
    #[arg(long = "group-file", global = true)]
    group_files: Vec<PathBuf>,
    /// Worker threads (0 uses every core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the group catalog.
    Groups {
        #[command(subcommand)]
        action: GroupsAction,
    },
    /// Validate a group file and print a summary.
    Ingest { path: PathBuf },
    /// Print the radical of a catalog group for a class.
    Radical {
        #[arg(long)]
        group: String,
        #[arg(long)]
        class: ClassExpr,
    },
    /// Compute injectors of a catalog group for a class.
    Injectors {
        #[arg(long)]
        group: String,
        #[arg(long)]
        class: ClassExpr,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
    },
    /// Run verification suites over the catalog.
    Verify {
        /// Suite id, or `all` (repeatable).
        #[arg(long = "suite", required = true)]
        suites: Vec<String>,
        /// Prime set for the test matrix (repeatable).
        #[arg(long)]
        pi: Vec<PrimeSet>,
        /// Class X for the test matrix (repeatable).
        #[arg(long)]
        x: Vec<ClassExpr>,
        /// Primes for the per-prime suites, comma separated.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Iteration counts, comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long = "max-order")]
        max_order: Option<usize>,
        /// Write the JSON report here; `-` writes it to standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupsAction {
    List,
    Show { label: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Construct,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config> {
    let mut config = Config::default();
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = Overrides::parse(&text).with_context(|| format!("in {}", path.display()))?;
        config = config.with(&file);
    }
    config.group_files.extend(cli.group_files.iter().cloned());
    if let Some(t) = cli.threads {
        config.threads = t;
    }
    Ok(config)
}

fn load_catalog(config: &Config) -> Result<Catalog> {
    let mut catalog = Catalog::builtin(Limits::default())?;
    for path in &config.group_files {
        catalog.ingest(path)?;
    }
    Ok(catalog)
}

/// Returns whether the command found no failures.
fn run(cli: Cli) -> Result<bool> {
    let mut config = load_config(&cli)?;
    match cli.command {
        Command::Groups { action } => {
            let catalog = load_catalog(&config)?;
            match action {
                GroupsAction::List => {
                    for e in catalog.entries() {
                        println!("{:<10} {:>4}  {}", e.label, e.expected_order, e.recipe);
                    }
                }
                GroupsAction::Show { label } => show(catalog.require(&label)?),
            }
            Ok(true)
        }
        Command::Ingest { path } => {
            let mut catalog = Catalog::empty(Limits::default());
            show(catalog.ingest(&path)?);
            Ok(true)
        }
        Command::Radical { group, class } => {
            let catalog = load_catalog(&config)?;
            let g = catalog.require(&group)?;
            println!("{:?}", radical(g, &class)?);
            Ok(true)
        }
        Command::Injectors { group, class, method } => {
            let catalog = load_catalog(&config)?;
            let g = catalog.require(&group)?;
            let report = match method {
                MethodArg::Oracle => injectors_oracle(g, &class)?,
                MethodArg::Construct => construct(g, &class)?,
            };
            print!("{report}");
            Ok(report.is_consistent())
        }
        Command::Verify {
            suites,
            pi,
            x,
            primes,
            k,
            max_order,
            json,
        } => {
            let flags = Overrides {
                pis: (!pi.is_empty()).then_some(pi),
                xs: (!x.is_empty()).then_some(x),
                primes: (!primes.is_empty()).then_some(primes),
                ks: (!k.is_empty()).then_some(k),
                max_order,
                ..Overrides::default()
            };
            config = config.with(&flags);
            if config.ks.contains(&0) {
                bail!("k must be at least 1");
            }
            let catalog = load_catalog(&config)?;
            let report = fitgroup::harness::verify(&suites, &catalog, &config)?;
            match json.as_deref() {
                Some(p) if p == Path::new("-") => emit_report(&report, Format::Json, None)?,
                Some(p) => {
                    emit_report(&report, Format::Json, Some(p))?;
                    emit_report(&report, Format::Text, None)?;
                }
                None => emit_report(&report, Format::Text, None)?,
            }
            Ok(report.failure_count() == 0)
        }
    }
}

fn show(g: &PermGroup) {
    println!("{g}");
    for p in g.generators() {
        println!("  gen {p}");
    }
}

/// Picks the constructive builder matching the shape of `class`.
fn construct(g: &PermGroup, class: &ClassExpr) -> Result<InjectorReport> {
    if let Some((pi, k)) = pi_nilpotent_power(class) {
        return Ok(match k {
            1 => pi_nilpotent_injectors_constructive(g, &pi)?,
            _ => iterated_class_injectors(g, &pi, k)?,
        });
    }
    Ok(match class {
        ClassExpr::Nilpotent => pi_nilpotent_injectors_constructive(g, &PrimeSet::all())?,
        ClassExpr::Hartley(x, pi) => hartley_injectors_constructive(g, x, pi)?,
        ClassExpr::Product(x, h) => match &**h {
            ClassExpr::PiNilpotent(pi) => hartley_injectors_constructive(g, x, pi)?,
            _ => bail!("no constructive method for {class}"),
        },
        _ => bail!("no constructive method for {class}"),
    })
}

/// Recognises `PiNil(pi)` multiplied by itself `k` times.
fn pi_nilpotent_power(class: &ClassExpr) -> Option<(PrimeSet, usize)> {
    match class {
        ClassExpr::PiNilpotent(pi) => Some((pi.clone(), 1)),
        ClassExpr::Product(f, h) => match (pi_nilpotent_power(f), &**h) {
            (Some((pi, k)), ClassExpr::PiNilpotent(q)) if *q == pi => Some((pi, k + 1)),
            _ => None,
        },
        _ => None,
    }
}
