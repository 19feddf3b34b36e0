use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mdvrp::error::{exit, CliError};
use mdvrp::io::{parse_instance, write_instance, write_text};
use mdvrp::report::failure_record;
use mdvrp::run::{dump_pool, parse_budget};
use mdvrp::{generate_instance, solve, sweep, GenSpec, RunConfig, SweepConfig};
use mdvrp_core::bounds::{Algorithm, OracleBudget, Regime};
use mdvrp_core::Variant;

#[derive(Parser)]
#[command(name = "mdvrp", version, about = "Approximation algorithms for multidepot capacitated vehicle routing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a certified report.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the feasible-tour pool (depot, subset, weight per line).
        #[arg(long)]
        dump_pool: Option<PathBuf>,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Generate and solve many instances; prints JSON lines and a summary.
    Sweep {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[command(flatten)]
        gen: GenArgs,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Theoretical approximation ratios.
    Ratio {
        #[arg(long)]
        k: Option<u64>,
        /// splittable-general, unsplittable-general, fixed-k or splittable-fixed-k.
        #[arg(long, value_parser = parse_regime)]
        regime: Option<Regime>,
        /// Also report f(eps).
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random Euclidean instance.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 3)]
        k: u64,
        #[arg(long, default_value = "unit", value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an instance file and optionally a solution or report.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Knobs {
    #[arg(long, default_value = "portfolio", value_parser = parse_algo)]
    algo: Algorithm,
    /// Variant override for solve; instance variant for sweep.
    #[arg(long, value_parser = parse_variant)]
    variant: Option<Variant>,
    /// Capacity override for solve; instance capacity for sweep.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// opt=N,tsp=N,pool=N
    #[arg(long, value_parser = parse_oracle_budget)]
    oracle_budget: Option<OracleBudget>,
    #[arg(long, default_value = "on", value_parser = ["on", "off"])]
    derandomize: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long = "demand-min")]
    dmin: Option<u64>,
    #[arg(long = "demand-max")]
    dmax: Option<u64>,
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    Algorithm::parse(s)
        .ok_or_else(|| format!("unknown algorithm {s:?}; expected cycle, tree, lp-tree, lp-cycle or portfolio"))
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    [Variant::Unit, Variant::Splittable, Variant::Unsplittable]
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| format!("unknown variant {s:?}; expected unit, splittable or unsplittable"))
}

fn parse_regime(s: &str) -> Result<Regime, String> {
    Regime::parse(s).ok_or_else(|| format!("unknown regime {s:?}"))
}

fn parse_oracle_budget(s: &str) -> Result<OracleBudget, String> {
    parse_budget(s).map_err(|e| e.to_string())
}

impl Knobs {
    fn config(&self) -> Result<RunConfig, CliError> {
        let config = RunConfig {
            algorithm: self.algo,
            k: self.k,
            variant: self.variant,
            gamma: self.gamma,
            delta: self.delta,
            seed: self.seed,
            derandomize: self.derandomize == "on",
            budget: self.oracle_budget.unwrap_or_default(),
        };
        config.check()?;
        Ok(config)
    }
}

impl GenArgs {
    fn spec(&self, k: u64, variant: Variant, seed: u64) -> GenSpec {
        let base = GenSpec::new(self.n, self.m, k, variant, seed);
        GenSpec { dmin: self.dmin.unwrap_or(base.dmin), dmax: self.dmax.unwrap_or(base.dmax), ..base }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_text(path, &format!("{text}\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve { input, dump_pool: pool_path, knobs } => {
            let config = knobs.config()?;
            let instance = config.apply(parse_instance(&input)?)?;
            if let Some(path) = pool_path {
                write_text(&path, &dump_pool(&instance, config.budget.pool)?)?;
            }
            let report = solve(&instance, &config);
            emit(knobs.out.as_ref(), &report.to_json())?;
            Ok(report.exit_code)
        }
        Command::Sweep { count, gen, knobs } => {
            let run = RunConfig { k: None, variant: None, ..knobs.config()? };
            let spec = gen.spec(knobs.k.unwrap_or(3), knobs.variant.unwrap_or(Variant::Unit), knobs.seed);
            let (lines, summary) = sweep(&SweepConfig { count, spec, run });
            let mut text: Vec<String> = lines.iter().map(|l| l.to_json()).collect();
            text.push(serde_json::json!({ "summary": summary }).to_string());
            emit(knobs.out.as_ref(), &text.join("\n"))?;
            Ok(summary.exit_code)
        }
        Command::Ratio { k, regime, eps, out } => {
            let report = mdvrp::ratio::ratio(k, regime, eps)?;
            emit(out.as_ref(), &serde_json::to_string(&report)?)?;
            Ok(exit::OK)
        }
        Command::Gen { gen, k, variant, seed, out } => {
            let instance = generate_instance(&gen.spec(k, variant, seed))?;
            match out {
                Some(path) => write_instance(&path, &instance)?,
                None => println!("{}", mdvrp::canonical_json(&instance)),
            }
            Ok(exit::OK)
        }
        Command::Validate { input, solution, out } => {
            let read =
                |p: &PathBuf| std::fs::read_to_string(p).map_err(|source| CliError::Read { path: p.clone(), source });
            let instance_text = read(&input)?;
            let solution_text = solution.as_ref().map(read).transpose()?;
            let report = mdvrp::validate::validate(&instance_text, solution_text.as_deref())?;
            emit(out.as_ref(), &serde_json::to_string(&report)?)?;
            Ok(report.exit_code)
        }
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            println!("{}", failure_record(e.kind(), &e.to_string(), e.exit_code()));
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
