//! The set-cover LP over enumerated tours, its rounding, and the two
//! LP-based partition algorithms.

mod pool;
mod rounding;
mod simplex;

pub use pool::{
    best_tour, enumerate_big_tours, enumerate_feasible_tours, enumerate_tours_unit, is_big, max_tour_size,
    pool_size_bound, PoolTour, TourPool, BIG_POOL_MAX_SIZE, POOL_BUDGET, UNIT_POOL_MAX_K,
};
pub use rounding::{round_tours, selection_probability, shortcut_duplicates, Estimator, RoundingMode, RoundingOutcome};
pub use simplex::{solve_setcover_lp, FractionalSelection};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::instance::{build_super_depot, Instance, SuperDepotView, Variant};
use crate::partition::{delta_uitp, expand_plan, refined_tree_partition};
use crate::solution::Solution;
use crate::tsp::HamCycle;

/// `Σ d(v) c(o, v)` per customer, the estimator penalty.
pub fn depot_penalties(view: &SuperDepotView) -> Vec<f64> {
    (0..view.num_customers()).map(|v| view.demands()[v] as f64 * view.depot_distance(v)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpTreeOutcome {
    pub solution: Solution,
    pub lp_objective: f64,
    pub rounding: RoundingOutcome,
    pub kappa: f64,
    /// `Δ̃` over the customers left uncovered.
    pub residual_delta: f64,
    /// `c(T̃'*)` of the residual tree partition, zero when nothing is left.
    pub residual_tree_cost: f64,
    pub residual_cost: f64,
    pub pool_size: usize,
}

impl LpTreeOutcome {
    /// `w(𝒞₁) + κΔ̃ + 2c(T̃'*)`, an upper bound on the cost of every run.
    pub fn realized_bound(&self) -> f64 {
        self.rounding.chosen_weight + self.kappa * self.residual_delta + 2.0 * self.residual_tree_cost
    }

    /// `γ·LP + e^{-γ}κΔ + 2c(T̃'*)`, which bounds derandomized runs.
    pub fn expected_bound(&self, delta: f64) -> f64 {
        self.rounding.gamma * self.lp_objective
            + libm::exp(-self.rounding.gamma) * self.kappa * delta
            + 2.0 * self.residual_tree_cost
    }
}

/// LP-based tree partition: round the covering LP over all feasible tours,
/// shortcut duplicates, and serve the uncovered customers with the refined
/// tree partition.
pub fn lp_tree_partition(
    instance: &Instance,
    view: &SuperDepotView,
    gamma: f64,
    mode: RoundingMode,
    budget: u64,
) -> Result<LpTreeOutcome> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::InvalidParameter { name: "gamma", value: gamma });
    }
    let pool = enumerate_feasible_tours(instance, budget)?;
    let lp = solve_setcover_lp(&pool)?;
    let kappa = 2.0 / ((instance.capacity() / 2) as f64 + 1.0);
    let estimator = Estimator { kappa, penalty: depot_penalties(view) };
    let rounding = round_tours(&pool, &lp, gamma, mode, &estimator);
    let mut solution = Solution::new(shortcut_duplicates(instance, &pool, &rounding.chosen));

    let residual_delta = view.delta_of(&rounding.uncovered);
    let (residual_tree_cost, residual_cost) = if rounding.uncovered.is_empty() {
        (0.0, 0.0)
    } else {
        let derived = instance.restrict(&rounding.uncovered)?;
        let sub_view = build_super_depot(&derived.instance);
        let tree = refined_tree_partition(&derived.instance, &sub_view)?;
        let lifted = derived.lift(instance, &tree.solution);
        let cost = lifted.total_weight;
        solution = solution.merge(lifted);
        (tree.tree_cost, cost)
    };
    Ok(LpTreeOutcome {
        solution,
        lp_objective: lp.objective,
        rounding,
        kappa,
        residual_delta,
        residual_tree_cost,
        residual_cost,
        pool_size: pool.tours.len(),
    })
}

/// Default big-customer threshold of [`lp_cycle_partition`].
pub const DEFAULT_DELTA: f64 = 0.25;

#[derive(Debug, Clone, PartialEq)]
pub struct LpCycleOutcome {
    pub solution: Solution,
    pub delta: f64,
    pub lp_objective: f64,
    pub rounding: RoundingOutcome,
    pub kappa: f64,
    /// `Δ_s` and `Δ_b` of the whole instance.
    pub delta_small: f64,
    pub delta_big: f64,
    /// `Δ̃_b`: big customers left for the cycle phase.
    pub residual_delta_big: f64,
    /// `c(C̃)`: the cycle shortcut to the residual customers and `o`.
    pub residual_cycle_cost: f64,
    pub repairs: usize,
}

impl LpCycleOutcome {
    fn scale(&self, k: u64) -> f64 {
        1.0 / ((1.0 - self.delta) * k as f64)
    }

    /// `w(𝒞₁) + (1/(1-δ))(2/k)Δ_s + (1/(1-δ))(4/k)Δ̃_b + 2c(C̃)`.
    pub fn realized_bound(&self, k: u64) -> f64 {
        self.rounding.chosen_weight
            + 2.0 * self.scale(k) * self.delta_small
            + 4.0 * self.scale(k) * self.residual_delta_big
            + 2.0 * self.residual_cycle_cost
    }

    /// `ln2·LP + (1/(1-δ))(2/k)Δ + 2c(C̃)`, which bounds derandomized runs.
    pub fn expected_bound(&self, k: u64) -> f64 {
        core::f64::consts::LN_2 * self.lp_objective
            + 2.0 * self.scale(k) * (self.delta_small + self.delta_big)
            + 2.0 * self.residual_cycle_cost
    }
}

/// LP-based cycle partition for unsplittable demand.
///
/// Big customers (`d(v) ≥ δk`) are covered by rounding the LP over tours of
/// big customers with `γ = ln 2`; everything left is routed by the
/// big-aware unsplittable ITP on `cycle` shortcut to the residual
/// customers, and the resulting walks are closed at a depot.
pub fn lp_cycle_partition(
    instance: &Instance,
    view: &SuperDepotView,
    cycle: &HamCycle,
    delta: f64,
    mode: RoundingMode,
    budget: u64,
) -> Result<LpCycleOutcome> {
    if instance.variant() != Variant::Unsplittable {
        return Err(Error::UnsupportedVariant { operation: "lp_cycle_partition", variant: instance.variant() });
    }
    let k = instance.capacity();
    let pool = enumerate_big_tours(instance, delta, budget)?;
    let lp = solve_setcover_lp(&pool)?;
    let kappa = 4.0 / ((1.0 - delta) * k as f64);
    let penalties = depot_penalties(view);
    let big_penalty: Vec<f64> = (0..instance.num_customers())
        .map(|v| if is_big(instance.demand(v), k, delta) { penalties[v] } else { 0.0 })
        .collect();
    let estimator = Estimator { kappa, penalty: big_penalty };
    let rounding = round_tours(&pool, &lp, core::f64::consts::LN_2, mode, &estimator);
    let mut solution = Solution::new(shortcut_duplicates(instance, &pool, &rounding.chosen));

    let mut covered = alloc::vec![false; instance.num_customers()];
    for t in &solution.tours {
        for v in t.customers() {
            covered[v] = true;
        }
    }
    let o = view.depot();
    let residual = cycle.shortcut_to(view.weights(), |v| v == o || !covered[v]);
    let (delta_small, delta_big) = (0..instance.num_customers()).fold((0.0, 0.0), |(s, b), v| {
        if is_big(instance.demand(v), k, delta) {
            (s, b + penalties[v])
        } else {
            (s + penalties[v], b)
        }
    });
    let residual_delta_big = view.delta_of(&rounding.uncovered);
    let mut repairs = 0;
    if residual.order.len() > 1 {
        let plan = delta_uitp(view, &residual, k, delta)?;
        let (tours, fixed) = expand_plan(instance, view, &plan);
        repairs = fixed;
        solution = solution.merge(tours);
    }
    Ok(LpCycleOutcome {
        solution,
        delta,
        lp_objective: lp.objective,
        rounding,
        kappa,
        delta_small,
        delta_big,
        residual_delta_big,
        residual_cycle_cost: residual.cost,
        repairs,
    })
}
