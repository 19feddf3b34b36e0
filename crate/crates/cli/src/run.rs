//! Single-instance runs.

use std::time::Instant;

use mdvrp_core::bounds::{portfolio_solve, Algorithm, OracleBudget, SolveOptions};
use mdvrp_core::instance::{preprocess_demands, unitize};
use mdvrp_core::lp::{enumerate_feasible_tours, RoundingMode};
use mdvrp_core::solution::validate_solution;
use mdvrp_core::{approx_le, Instance, Variant};

use crate::error::{core_exit_code, exit, CliError};
use crate::io::{instance_digest, SolutionOut};
use crate::report::{ErrorRecord, Knobs, Report, ReportCertificate, Timing};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    /// Capacity override.
    pub k: Option<u64>,
    pub variant: Option<Variant>,
    pub gamma: Option<f64>,
    pub delta: f64,
    pub seed: u64,
    pub derandomize: bool,
    pub budget: OracleBudget,
}

impl Default for RunConfig {
    fn default() -> Self {
        let options = SolveOptions::default();
        Self {
            algorithm: Algorithm::Portfolio,
            k: None,
            variant: None,
            gamma: None,
            delta: options.delta,
            seed: 0,
            derandomize: true,
            budget: options.budget,
        }
    }
}

impl RunConfig {
    pub fn check(&self) -> Result<(), CliError> {
        if let Some(g) = self.gamma {
            if !(g.is_finite() && g >= 0.0) {
                return Err(CliError::Usage(format!("--gamma must be a finite value >= 0, got {g}")));
            }
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(CliError::Usage(format!("--delta must lie in (0, 1), got {}", self.delta)));
        }
        Ok(())
    }

    pub fn options(&self) -> SolveOptions {
        SolveOptions {
            gamma: self.gamma,
            delta: self.delta,
            mode: if self.derandomize { RoundingMode::Derandomized } else { RoundingMode::Seeded(self.seed) },
            budget: self.budget,
        }
    }

    /// Applies the `k` and variant overrides.
    pub fn apply(&self, instance: Instance) -> Result<Instance, CliError> {
        if self.k.is_none() && self.variant.is_none() {
            return Ok(instance);
        }
        let k = self.k.unwrap_or(instance.capacity());
        let variant = self.variant.unwrap_or(instance.variant());
        Ok(instance.with_parameters(k, variant)?)
    }

    fn knobs(&self, instance: &Instance) -> Knobs {
        Knobs {
            algo: self.algorithm.name().into(),
            k: instance.capacity(),
            variant: instance.variant(),
            gamma: self.gamma,
            delta: self.delta,
            derandomize: self.derandomize,
            oracle_budget: self.budget,
        }
    }
}

/// Parses `opt=12,tsp=16,pool=1000000`; omitted keys keep their defaults.
pub fn parse_budget(text: &str) -> Result<OracleBudget, CliError> {
    let mut budget = OracleBudget::default();
    for part in text.split(',').filter(|p| !p.is_empty()) {
        let bad = || CliError::Usage(format!("bad --oracle-budget entry {part:?}; expected opt=N, tsp=N or pool=N"));
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let value: u64 = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "opt" => budget.opt_customers = value as usize,
            "tsp" => budget.tsp_vertices = value as usize,
            "pool" => budget.pool = value,
            _ => return Err(bad()),
        }
    }
    Ok(budget)
}

/// Runs the configured algorithm and certifies the result.
pub fn solve(instance: &Instance, config: &RunConfig) -> Report {
    let start = Instant::now();
    let out = portfolio_solve(instance, config.algorithm, &config.options());
    let cert = out.certificate;
    let selected = out.best.as_ref().and_then(|(a, _)| cert.candidates.iter().find(|c| c.algorithm == a.name()));
    let cost = out.best.as_ref().map(|(_, s)| s.total_weight);
    let valid = out.best.as_ref().is_some_and(|(_, s)| validate_solution(instance, s).is_feasible());

    let produced = || cert.candidates.iter().filter(|c| c.cost.is_some());
    let opt_holds = match cert.exact_opt {
        Some(opt) => produced().all(|c| approx_le(opt, c.cost.unwrap_or(f64::INFINITY))),
        None => true,
    };
    let chain_holds = cert.chain_holds();
    let holds = chain_holds && opt_holds && produced().all(|c| c.valid && c.holds);

    let (exit_code, error) = match &out.best {
        None => {
            let err = out.first_error.as_ref();
            let code = err.map_or(exit::INVALID_INPUT, core_exit_code);
            let message = err.map_or_else(|| "no algorithm produced a valid solution".to_string(), |e| e.to_string());
            let kind = match code {
                exit::INFEASIBLE => "infeasible",
                exit::BUDGET => "budget",
                _ => "invalid_input",
            };
            (code, Some(ErrorRecord { kind: kind.into(), message }))
        }
        Some(_) if !(valid && holds) => {
            let message = "a certificate inequality or the feasibility check failed".to_string();
            (exit::CERTIFICATE, Some(ErrorRecord { kind: "certificate".into(), message }))
        }
        Some(_) => (exit::OK, None),
    };

    Report {
        instance_digest: instance_digest(instance),
        algorithm: out.best.as_ref().map(|(a, _)| a.name().to_string()),
        cost,
        certificate: ReportCertificate {
            delta_bound: cert.delta_bound,
            mst_bound: cert.mst_bound,
            tsp_exact: cert.tsp_exact,
            exact_opt: cert.exact_opt,
            guarantee_expr: selected.map(|c| c.guarantee_expr.clone()),
            guarantee_value: selected.and_then(|c| c.guarantee_value),
            theoretical_ratio: selected.and_then(|c| c.theoretical_ratio),
            empirical_ratio: match (cost, cert.exact_opt) {
                (Some(c), Some(opt)) if opt > 0.0 => Some(c / opt),
                _ => None,
            },
            chain_holds,
            opt_holds,
            candidates: cert.candidates.clone(),
        },
        valid,
        holds,
        seed: config.seed,
        knobs: config.knobs(instance),
        solution: out.best.as_ref().map(|(_, s)| SolutionOut::from_solution(instance, s)),
        timing: Timing { wall_ms: start.elapsed().as_secs_f64() * 1e3 },
        error,
        exit_code,
    }
}

/// Feasible-tour pool of the preprocessed instance, one tour per line:
/// `depot id <TAB> comma-separated customer ids <TAB> weight`. Splittable
/// instances are unitized first, so customers may appear as `v#j` copies.
pub fn dump_pool(instance: &Instance, budget: u64) -> Result<String, CliError> {
    let pre = preprocess_demands(instance)?;
    let Some(derived) = pre.reduced else {
        return Ok(String::new());
    };
    let work = match derived.instance.variant() {
        Variant::Splittable => unitize(&derived.instance)?.instance,
        _ => derived.instance,
    };
    let pool = enumerate_feasible_tours(&work, budget)?;
    let mut text = String::new();
    for t in &pool.tours {
        let ids: Vec<&str> = t.customers.iter().map(|&c| work.customer_ids()[c].as_str()).collect();
        text.push_str(&format!("{}\t{}\t{}\n", work.depot_ids()[t.depot], ids.join(","), t.weight));
    }
    Ok(text)
}
