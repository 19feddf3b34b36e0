//! Exact optimum for tiny instances by subset dynamic programming.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::instance::{unitize, Instance, Variant};
use crate::lp::best_tour;
use crate::solution::{Solution, Tour};

/// Default customer cap of [`exact_opt_small`].
pub const EXACT_OPT_LIMIT: usize = 12;

/// Cheapest single tour over every customer subset: per depot a path DP
/// over (subset, last customer), closed back at the depot.
fn block_costs(instance: &Instance) -> (Vec<f64>, Vec<usize>) {
    let n = instance.num_customers();
    let w = instance.weights();
    let full = 1usize << n;
    let mut best = vec![f64::INFINITY; full];
    let mut depot_of = vec![0usize; full];
    let mut path = vec![f64::INFINITY; full * n];
    for u in 0..instance.num_depots() {
        path.iter_mut().for_each(|x| *x = f64::INFINITY);
        let node = instance.depot_node(u);
        for v in 0..n {
            path[(1 << v) * n + v] = w.get(node, v);
        }
        for s in 1..full {
            for last in 0..n {
                let cur = path[s * n + last];
                if s & (1 << last) == 0 || cur == f64::INFINITY {
                    continue;
                }
                let close = cur + w.get(last, node);
                if close < best[s] {
                    best[s] = close;
                    depot_of[s] = u;
                }
                for next in 0..n {
                    if s & (1 << next) == 0 {
                        let t = s | (1 << next);
                        let cand = cur + w.get(last, next);
                        if cand < path[t * n + next] {
                            path[t * n + next] = cand;
                        }
                    }
                }
            }
        }
    }
    (best, depot_of)
}

fn solve_direct(instance: &Instance) -> Result<Solution> {
    let n = instance.num_customers();
    let k = instance.capacity();
    let (block, depot_of) = block_costs(instance);
    let full = 1usize << n;
    let load = |s: usize| (0..n).filter(|&v| s & (1 << v) != 0).map(|v| instance.demand(v)).sum::<u64>();
    let feasible: Vec<bool> = (0..full).map(|s| s != 0 && load(s) <= k).collect();
    let mut opt = vec![f64::INFINITY; full];
    let mut pick = vec![0usize; full];
    opt[0] = 0.0;
    for s in 1..full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // every block containing the lowest customer of s
        let mut sub = rest;
        loop {
            let t = sub | low;
            if feasible[t] {
                let cand = block[t] + opt[s ^ t];
                if cand < opt[s] {
                    opt[s] = cand;
                    pick[s] = t;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut tours = Vec::new();
    let mut s = full - 1;
    while s != 0 {
        let t = pick[s];
        let members: Vec<usize> = (0..n).filter(|&v| t & (1 << v) != 0).collect();
        let best = best_tour(instance, depot_of[t], &members)?;
        tours.push(Tour::serving(instance, best.depot, &best.customers));
        s ^= t;
    }
    Ok(Solution::new(tours))
}

/// An optimal solution. Unit and unsplittable instances are solved
/// directly; splittable ones through their unit-demand copy. The customer
/// count (after unitizing) must not exceed `limit`.
pub fn exact_opt_small(instance: &Instance, limit: usize) -> Result<Solution> {
    let limit = limit.min(16);
    match instance.variant() {
        Variant::Splittable => {
            let derived = unitize(instance)?;
            check_size(derived.instance.num_customers(), limit)?;
            Ok(derived.lift(instance, &solve_direct(&derived.instance)?))
        }
        Variant::Unsplittable => {
            for (customer, &demand) in instance.demands().iter().enumerate() {
                if demand > instance.capacity() {
                    return Err(Error::Infeasible { customer, demand, capacity: instance.capacity() });
                }
            }
            check_size(instance.num_customers(), limit)?;
            solve_direct(instance)
        }
        Variant::Unit => {
            check_size(instance.num_customers(), limit)?;
            solve_direct(instance)
        }
    }
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::BudgetExceeded { what: "exact oracle customers", required: n as u64, limit: limit as u64 });
    }
    Ok(())
}
