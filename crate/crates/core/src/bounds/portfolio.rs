use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ratio::{default_gamma, fixed_k_ratio};
use super::{lower_bounds, Candidate, Certificate, OracleBudget};
use crate::error::{Error, Result};
use crate::instance::{build_super_depot, preprocess_demands, unitize, Instance, Variant};
use crate::lp::{lp_cycle_partition, lp_tree_partition, RoundingMode, DEFAULT_DELTA};
use crate::partition::{cycle_partition_mcvrp, refined_tree_partition};
use crate::solution::{validate_solution, Solution};
use crate::tsp::hamiltonian_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Algorithm {
    Cycle,
    Tree,
    LpTree,
    LpCycle,
    Portfolio,
}

impl Algorithm {
    pub const SINGLE: [Algorithm; 4] = [Algorithm::Cycle, Algorithm::LpCycle, Algorithm::LpTree, Algorithm::Tree];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Cycle => "cycle",
            Algorithm::Tree => "tree",
            Algorithm::LpTree => "lp-tree",
            Algorithm::LpCycle => "lp-cycle",
            Algorithm::Portfolio => "portfolio",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Algorithm::Cycle, Algorithm::Tree, Algorithm::LpTree, Algorithm::LpCycle, Algorithm::Portfolio]
            .into_iter()
            .find(|a| a.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Rounding parameter of the LP tree partition; `None` picks the
    /// fixed-`k` recipe.
    pub gamma: Option<f64>,
    pub delta: f64,
    pub mode: RoundingMode,
    pub budget: OracleBudget,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { gamma: None, delta: DEFAULT_DELTA, mode: RoundingMode::Derandomized, budget: OracleBudget::default() }
    }
}

/// A finished run of one algorithm on the original instance.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmRun {
    pub algorithm: Algorithm,
    pub solution: Solution,
    pub guarantee_expr: String,
    pub guarantee_value: f64,
    pub theoretical_ratio: Option<f64>,
    pub terms: BTreeMap<String, f64>,
}

fn terms(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Runs one algorithm after demand preprocessing and lifts the result back
/// to `instance`. Preassigned trivial tours are added to both the solution
/// and the guarantee.
pub fn run_algorithm(instance: &Instance, algorithm: Algorithm, options: &SolveOptions) -> Result<AlgorithmRun> {
    let pre = preprocess_demands(instance)?;
    let trivial = pre.trivial_cost();
    let Some(derived) = pre.reduced.as_ref() else {
        return Ok(AlgorithmRun {
            algorithm,
            solution: pre.lift(instance, None),
            guarantee_expr: "w(preassigned)".into(),
            guarantee_value: trivial,
            theoretical_ratio: None,
            terms: terms(&[("preassigned", trivial)]),
        });
    };
    let reduced = &derived.instance;
    let view = build_super_depot(reduced);
    let k = reduced.capacity();
    let kf = k as f64;
    let delta_total = view.delta();
    let n = reduced.num_customers();
    let all: Vec<usize> = (0..=n).collect();

    let (solution, expr, value, ratio, mut t) = match algorithm {
        Algorithm::Cycle => {
            let cycle = hamiltonian_cycle(view.weights(), &all)?;
            let out = cycle_partition_mcvrp(reduced, &view, &cycle)?;
            let factor = if reduced.variant() == Variant::Unsplittable { 4.0 } else { 2.0 };
            let expr = if factor == 4.0 { "(4/k)Δ + 2c(C)" } else { "(2/k)Δ + 2c(C)" };
            let ratio = if factor == 4.0 { 5.0 } else { 4.0 };
            let value = factor / kf * delta_total + 2.0 * cycle.cost;
            let t = terms(&[("delta", delta_total), ("cycle", cycle.cost), ("repairs", out.repairs as f64)]);
            (out.solution, expr, value, Some(ratio), t)
        }
        Algorithm::Tree => {
            let out = refined_tree_partition(reduced, &view)?;
            let kappa = 2.0 / ((k / 2) as f64 + 1.0);
            let value = kappa * delta_total + 2.0 * out.tree_cost;
            let t = terms(&[("delta", delta_total), ("tree", out.tree_cost), ("iterations", out.iterations as f64)]);
            (out.solution, "(2/(⌊k/2⌋+1))Δ + 2c(T'*)", value, Some(2.0 + kf / ((k / 2) as f64 + 1.0)), t)
        }
        Algorithm::LpTree => {
            let gamma = options.gamma.unwrap_or_else(|| default_gamma(k));
            let (work, lift) = if reduced.variant() == Variant::Splittable {
                let u = unitize(reduced)?;
                (u.instance.clone(), Some(u))
            } else {
                (reduced.clone(), None)
            };
            let work_view = build_super_depot(&work);
            let out = lp_tree_partition(&work, &work_view, gamma, options.mode, options.budget.pool)?;
            let solution = match &lift {
                Some(u) => u.lift(reduced, &out.solution),
                None => out.solution.clone(),
            };
            let (expr, value) = match options.mode {
                RoundingMode::Derandomized => {
                    ("γ·LP + e^(-γ)(2/(⌊k/2⌋+1))Δ + 2c(T̃'*)", out.expected_bound(delta_total))
                }
                RoundingMode::Seeded(_) => ("w(C1) + (2/(⌊k/2⌋+1))Δ̃ + 2c(T̃'*)", out.realized_bound()),
            };
            let t = terms(&[
                ("gamma", gamma),
                ("lp", out.lp_objective),
                ("delta", delta_total),
                ("chosen_weight", out.rounding.chosen_weight),
                ("residual_delta", out.residual_delta),
                ("residual_tree", out.residual_tree_cost),
                ("pool", out.pool_size as f64),
            ]);
            (solution, expr, value, fixed_k_ratio(k).ok().map(|r| r.0), t)
        }
        Algorithm::LpCycle => {
            let cycle = hamiltonian_cycle(view.weights(), &all)?;
            let out = lp_cycle_partition(reduced, &view, &cycle, options.delta, options.mode, options.budget.pool)?;
            let (expr, value) = match options.mode {
                RoundingMode::Derandomized => ("ln2·LP + (1/(1-δ))(2/k)Δ + 2c(C̃)", out.expected_bound(k)),
                RoundingMode::Seeded(_) => ("w(C1) + (1/(1-δ))((2/k)Δ_s + (4/k)Δ̃_b) + 2c(C̃)", out.realized_bound(k)),
            };
            let t = terms(&[
                ("delta_param", options.delta),
                ("lp", out.lp_objective),
                ("delta", delta_total),
                ("delta_small", out.delta_small),
                ("delta_big", out.delta_big),
                ("residual_delta_big", out.residual_delta_big),
                ("cycle", cycle.cost),
                ("residual_cycle", out.residual_cycle_cost),
                ("chosen_weight", out.rounding.chosen_weight),
            ]);
            let ratio = 3.0 + core::f64::consts::LN_2 + 1.0 / (1.0 - options.delta);
            (out.solution, expr, value, Some(ratio), t)
        }
        Algorithm::Portfolio => {
            return Err(Error::InvalidParameter { name: "algorithm", value: f64::NAN });
        }
    };
    let mut guarantee_expr = String::from(expr);
    let mut guarantee_value = value;
    if !pre.trivial_tours.is_empty() {
        guarantee_expr.push_str(" + w(preassigned)");
        guarantee_value += trivial;
        t.insert("preassigned".into(), trivial);
    }
    Ok(AlgorithmRun {
        algorithm,
        solution: pre.lift(instance, Some(&solution)),
        guarantee_expr,
        guarantee_value,
        theoretical_ratio: ratio,
        terms: t,
    })
}

/// Turns a run (or its failure) into a certificate entry.
pub fn candidate(instance: &Instance, algorithm: Algorithm, run: &Result<AlgorithmRun>) -> Candidate {
    match run {
        Ok(run) => {
            let valid = validate_solution(instance, &run.solution).is_feasible();
            let cost = run.solution.total_weight;
            Candidate {
                algorithm: algorithm.name().into(),
                cost: Some(cost),
                valid,
                guarantee_expr: run.guarantee_expr.clone(),
                guarantee_value: Some(run.guarantee_value),
                holds: crate::approx_le(cost, run.guarantee_value),
                theoretical_ratio: run.theoretical_ratio,
                terms: run.terms.clone(),
                error: None,
            }
        }
        Err(e) => Candidate { algorithm: algorithm.name().into(), error: Some(format!("{e}")), ..Candidate::default() },
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PortfolioOutcome {
    /// Selected algorithm and its solution; `None` when every run failed.
    pub best: Option<(Algorithm, Solution)>,
    pub certificate: Certificate,
    /// First error seen, kept for exit-code classification.
    pub first_error: Option<Error>,
}

/// Algorithms worth attempting on `instance`.
fn applicable(instance: &Instance) -> Vec<Algorithm> {
    let mut out = Vec::new();
    match instance.variant() {
        Variant::Unsplittable => {
            if instance.capacity().is_multiple_of(2) {
                out.push(Algorithm::Cycle);
            }
            out.push(Algorithm::LpCycle);
        }
        _ => out.push(Algorithm::Cycle),
    }
    out.push(Algorithm::LpTree);
    out.push(Algorithm::Tree);
    out.sort();
    out
}

/// Runs `algorithms` (every applicable one for [`Algorithm::Portfolio`]),
/// validates each output and keeps the cheapest valid one, ties going to
/// the lexicographically smallest name.
pub fn portfolio_solve(instance: &Instance, algorithm: Algorithm, options: &SolveOptions) -> PortfolioOutcome {
    let view = build_super_depot(instance);
    let mut certificate = lower_bounds(instance, &view, &options.budget);
    let list = if algorithm == Algorithm::Portfolio { applicable(instance) } else { alloc::vec![algorithm] };
    let mut best: Option<(Algorithm, Solution)> = None;
    let mut first_error = None;
    for algo in list {
        let run = run_algorithm(instance, algo, options);
        let cand = candidate(instance, algo, &run);
        match run {
            Ok(run) if cand.valid => {
                let better = match &best {
                    None => true,
                    Some((a, s)) => {
                        run.solution.total_weight < s.total_weight
                            || (run.solution.total_weight == s.total_weight && algo.name() < a.name())
                    }
                };
                if better {
                    best = Some((algo, run.solution));
                }
            }
            Ok(_) => {}
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
        certificate.candidates.push(cand);
    }
    certificate.candidates.sort_by(|a, b| a.algorithm.cmp(&b.algorithm));
    PortfolioOutcome { best, certificate, first_error }
}
