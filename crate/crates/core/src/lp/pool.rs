//! Enumerated feasible tours.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::instance::{Instance, Variant};
use crate::tsp::{exact_tsp_small, EXACT_TSP_LIMIT};

/// Default cap on the number of (depot, subset) pairs enumerated.
pub const POOL_BUDGET: u64 = 1_000_000;

/// Largest capacity accepted for unit-demand enumeration.
pub const UNIT_POOL_MAX_K: u64 = 6;

/// Largest subset size in a big-customer pool.
pub const BIG_POOL_MAX_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PoolTour {
    pub depot: usize,
    /// Customers in optimal visiting order.
    pub customers: Vec<usize>,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TourPool {
    pub tours: Vec<PoolTour>,
    /// Customers the pool must cover, ascending.
    pub universe: Vec<usize>,
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// `m · Σ_{1 ≤ i ≤ s} C(n, i)`, saturating.
pub fn pool_size_bound(n: usize, m: usize, max_size: usize) -> u64 {
    let total = (1..=max_size as u64).fold(0u64, |acc, i| acc.saturating_add(binomial(n as u64, i)));
    total.saturating_mul(m as u64)
}

/// Optimal closed walk through `depot` and `customers`.
pub fn best_tour(instance: &Instance, depot: usize, customers: &[usize]) -> Result<PoolTour> {
    let mut vertices = vec![instance.depot_node(depot)];
    vertices.extend_from_slice(customers);
    let cycle = exact_tsp_small(instance.weights(), &vertices)?;
    Ok(PoolTour { depot, customers: cycle.order[1..].to_vec(), weight: cycle.cost })
}

/// Every nonempty subset of `items` of size at most `max_size` accepted by
/// `keep`, in lexicographic order of positions.
fn subsets(items: &[usize], max_size: usize, keep: &dyn Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        start: usize,
        max_size: usize,
        current: &mut Vec<usize>,
        keep: &dyn Fn(&[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        for i in start..items.len() {
            current.push(items[i]);
            if keep(current) {
                out.push(current.clone());
                if current.len() < max_size {
                    rec(items, i + 1, max_size, current, keep, out);
                }
            }
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, max_size, &mut Vec::new(), keep, &mut out);
    out
}

/// Pool over `universe` of all subsets up to `max_size` with total demand
/// at most `k`, at every depot. `keep` is downward closed, so pruning is
/// exact.
fn enumerate(instance: &Instance, universe: Vec<usize>, max_size: usize, budget: u64) -> Result<TourPool> {
    let required = pool_size_bound(universe.len(), instance.num_depots(), max_size);
    if required > budget {
        return Err(Error::BudgetExceeded { what: "tour pool", required, limit: budget });
    }
    if max_size + 1 > EXACT_TSP_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "tour size",
            required: max_size as u64 + 1,
            limit: EXACT_TSP_LIMIT as u64,
        });
    }
    let k = instance.capacity();
    let keep = |s: &[usize]| s.iter().map(|&v| instance.demand(v)).sum::<u64>() <= k;
    let sets = subsets(&universe, max_size, &keep);
    let mut tours = Vec::with_capacity(sets.len() * instance.num_depots());
    for u in 0..instance.num_depots() {
        for s in &sets {
            tours.push(best_tour(instance, u, s)?);
        }
    }
    Ok(TourPool { tours, universe })
}

/// All feasible tours of a unit-demand instance: every subset of at most
/// `k` customers at every depot.
pub fn enumerate_tours_unit(instance: &Instance, budget: u64) -> Result<TourPool> {
    if instance.variant() != Variant::Unit {
        return Err(Error::UnsupportedVariant { operation: "enumerate_tours_unit", variant: instance.variant() });
    }
    let k = instance.capacity();
    if k > UNIT_POOL_MAX_K {
        return Err(Error::BudgetExceeded { what: "unit pool capacity", required: k, limit: UNIT_POOL_MAX_K });
    }
    let n = instance.num_customers();
    enumerate(instance, (0..n).collect(), (k as usize).min(n), budget)
}

/// Largest number of customers whose demands fit together in one tour.
pub fn max_tour_size(demands: &[u64], k: u64) -> usize {
    let mut sorted = demands.to_vec();
    sorted.sort_unstable();
    let mut load = 0;
    sorted
        .iter()
        .take_while(|&&d| {
            load += d;
            load <= k
        })
        .count()
}

/// All feasible tours for unit or unsplittable demand.
pub fn enumerate_feasible_tours(instance: &Instance, budget: u64) -> Result<TourPool> {
    match instance.variant() {
        Variant::Unit => enumerate_tours_unit(instance, budget),
        Variant::Unsplittable => {
            let n = instance.num_customers();
            let size = max_tour_size(instance.demands(), instance.capacity());
            enumerate(instance, (0..n).collect(), size, budget)
        }
        variant => Err(Error::UnsupportedVariant { operation: "enumerate_feasible_tours", variant }),
    }
}

/// Whether a demand counts as big for threshold `δ`.
pub fn is_big(demand: u64, k: u64, delta: f64) -> bool {
    demand as f64 >= delta * k as f64 - crate::EPS
}

/// Feasible tours over the big customers `d(v) ≥ δk` only; each holds at
/// most `⌈1/δ⌉` of them.
pub fn enumerate_big_tours(instance: &Instance, delta: f64, budget: u64) -> Result<TourPool> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter { name: "delta", value: delta });
    }
    let max_size = libm::ceil(1.0 / delta - crate::EPS) as usize;
    if max_size > BIG_POOL_MAX_SIZE {
        return Err(Error::BudgetExceeded {
            what: "big pool subset size",
            required: max_size as u64,
            limit: BIG_POOL_MAX_SIZE as u64,
        });
    }
    let k = instance.capacity();
    let universe: Vec<usize> =
        (0..instance.num_customers()).filter(|&v| is_big(instance.demand(v), k, delta)).collect();
    if universe.is_empty() {
        return Ok(TourPool::default());
    }
    let size = max_size.min(universe.len());
    enumerate(instance, universe, size, budget)
}
