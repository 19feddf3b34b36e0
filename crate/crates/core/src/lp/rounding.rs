//! Randomized rounding of a fractional tour selection.

use alloc::vec;
use alloc::vec::Vec;

use super::pool::TourPool;
use super::simplex::FractionalSelection;
use crate::instance::Instance;
use crate::rng::CounterRng;
use crate::solution::Tour;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RoundingMode {
    /// Independent coins from the given seed.
    Seeded(u64),
    /// Conditional expectations on the pessimistic estimator.
    Derandomized,
}

/// Penalty side of the estimator: `κ · Σ_v penalty[v] · P[v uncovered]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimator {
    pub kappa: f64,
    /// `d(v) c(o, v)`, indexed by customer.
    pub penalty: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RoundingOutcome {
    /// Pool indices of the selected tours, ascending.
    pub chosen: Vec<usize>,
    /// `w(𝒞₁)`: pool weight of the selected tours before shortcutting.
    pub chosen_weight: f64,
    /// Universe customers covered by no selected tour.
    pub uncovered: Vec<usize>,
    pub gamma: f64,
    pub mode: RoundingMode,
    /// Estimator value before any decision and after each one; filled in
    /// derandomized mode only.
    pub estimator_trace: Vec<f64>,
}

/// `min(γ x, 1)`.
pub fn selection_probability(gamma: f64, x: f64) -> f64 {
    (gamma * x).clamp(0.0, 1.0)
}

struct State<'a> {
    pool: &'a TourPool,
    probs: Vec<f64>,
    /// Pool indices containing each customer.
    holders: Vec<Vec<usize>>,
    decided: Vec<Option<bool>>,
    covered: Vec<bool>,
}

impl State<'_> {
    fn uncovered_probability(&self, v: usize, skip: usize) -> f64 {
        if self.covered[v] {
            return 0.0;
        }
        self.holders[v]
            .iter()
            .filter(|&&c| c != skip && self.decided[c].is_none())
            .map(|&c| 1.0 - self.probs[c])
            .product()
    }
}

/// Selects tours with probability `min(γ x_C, 1)`.
///
/// In derandomized mode tours are decided in pool order, each time taking
/// the option with the smaller estimator
/// `Φ = Σ_decided w(C)[chosen] + Σ_undecided γ x_C w(C) + κ Σ_v penalty(v) P[v uncovered]`
/// (rejecting on ties; a tour with probability one is always taken), so `Φ` never increases and ends at
/// `w(𝒞₁) + κ Σ_{v uncovered} penalty(v)`.
pub fn round_tours(
    pool: &TourPool,
    fractional: &FractionalSelection,
    gamma: f64,
    mode: RoundingMode,
    estimator: &Estimator,
) -> RoundingOutcome {
    let size = estimator.penalty.len().max(pool.universe.iter().map(|&v| v + 1).max().unwrap_or(0));
    let probs: Vec<f64> = fractional.values.iter().map(|&x| selection_probability(gamma, x)).collect();
    let mut holders = vec![Vec::new(); size];
    for (c, tour) in pool.tours.iter().enumerate() {
        for &v in &tour.customers {
            holders[v].push(c);
        }
    }
    let mut state = State { pool, probs, holders, decided: vec![None; pool.tours.len()], covered: vec![false; size] };
    let penalty = |v: usize| estimator.penalty.get(v).copied().unwrap_or(0.0);
    let mut trace = Vec::new();

    match mode {
        RoundingMode::Seeded(seed) => {
            let rng = CounterRng::new(seed);
            for c in 0..pool.tours.len() {
                let chosen = state.probs[c] > 0.0 && rng.uniform(c as u64) < state.probs[c];
                state.decided[c] = Some(chosen);
                if chosen {
                    for &v in &pool.tours[c].customers {
                        state.covered[v] = true;
                    }
                }
            }
        }
        RoundingMode::Derandomized => {
            let mut phi: f64 =
                pool.tours.iter().zip(&fractional.values).map(|(t, &x)| gamma * x * t.weight).sum::<f64>()
                    + estimator.kappa
                        * pool
                            .universe
                            .iter()
                            .map(|&v| penalty(v) * state.uncovered_probability(v, usize::MAX))
                            .sum::<f64>();
            trace.push(phi);
            for c in 0..pool.tours.len() {
                if state.probs[c] <= 0.0 {
                    state.decided[c] = Some(false);
                    continue;
                }
                let tour = &state.pool.tours[c];
                let expected = gamma * fractional.values[c] * tour.weight;
                let mut now = 0.0;
                let mut if_rejected = 0.0;
                for &v in &tour.customers {
                    let rest = state.uncovered_probability(v, c);
                    let here = if state.covered[v] { 0.0 } else { 1.0 - state.probs[c] };
                    now += penalty(v) * rest * here;
                    if_rejected += penalty(v) * rest;
                }
                let phi_yes = phi - expected + tour.weight - estimator.kappa * now;
                let phi_no = phi - expected + estimator.kappa * (if_rejected - now);
                let chosen = state.probs[c] >= 1.0 || phi_yes < phi_no;
                state.decided[c] = Some(chosen);
                if chosen {
                    for &v in &tour.customers {
                        state.covered[v] = true;
                    }
                    phi = phi_yes;
                } else {
                    phi = phi_no;
                }
                trace.push(phi);
            }
        }
    }

    let chosen: Vec<usize> = (0..pool.tours.len()).filter(|&c| state.decided[c] == Some(true)).collect();
    let chosen_weight = chosen.iter().map(|&c| pool.tours[c].weight).sum();
    let uncovered = pool.universe.iter().copied().filter(|&v| !state.covered[v]).collect();
    RoundingOutcome { chosen, chosen_weight, uncovered, gamma, mode, estimator_trace: trace }
}

/// Turns the selected tours into instance tours, keeping every customer in
/// exactly one of them: the one where removing it would save the least
/// (lowest index on ties). Tours left empty are dropped.
pub fn shortcut_duplicates(instance: &Instance, pool: &TourPool, chosen: &[usize]) -> Vec<Tour> {
    let w = instance.weights();
    let mut routes: Vec<(usize, Vec<usize>)> =
        chosen.iter().map(|&c| (pool.tours[c].depot, pool.tours[c].customers.clone())).collect();
    let mut customers: Vec<usize> = routes.iter().flat_map(|(_, r)| r.iter().copied()).collect();
    customers.sort_unstable();
    customers.dedup();
    for v in customers {
        let holding: Vec<usize> = (0..routes.len()).filter(|&i| routes[i].1.contains(&v)).collect();
        if holding.len() < 2 {
            continue;
        }
        let saving = |i: usize| {
            let (depot, route) = &routes[i];
            let node = instance.depot_node(*depot);
            let pos = route.iter().position(|&x| x == v).expect("held");
            let prev = if pos == 0 { node } else { route[pos - 1] };
            let next = if pos + 1 == route.len() { node } else { route[pos + 1] };
            w.get(prev, v) + w.get(v, next) - w.get(prev, next)
        };
        let mut keep = holding[0];
        for &i in &holding[1..] {
            if saving(i) < saving(keep) {
                keep = i;
            }
        }
        for &i in &holding {
            if i != keep {
                routes[i].1.retain(|&x| x != v);
            }
        }
    }
    routes.into_iter().filter(|(_, r)| !r.is_empty()).map(|(depot, r)| Tour::serving(instance, depot, &r)).collect()
}
