use alloc::vec;
use alloc::vec::Vec;

use super::HamCycle;
use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;

/// Largest vertex count accepted by [`exact_tsp_small`].
pub const EXACT_TSP_LIMIT: usize = 16;

/// Optimal Hamiltonian cycle by dynamic programming over
/// (visited subset, last vertex). The returned order starts at
/// `vertices[0]`.
pub fn exact_tsp_small(weights: &DistanceMatrix, vertices: &[usize]) -> Result<HamCycle> {
    let n = vertices.len();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > EXACT_TSP_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "exact TSP vertex count",
            required: n as u64,
            limit: EXACT_TSP_LIMIT as u64,
        });
    }
    if n <= 3 {
        return Ok(HamCycle::new(weights, vertices.to_vec()));
    }
    let start = vertices[0];
    let rest = &vertices[1..];
    let r = rest.len();
    let full = (1usize << r) - 1;
    let mut cost = vec![f64::INFINITY; (full + 1) * r];
    let mut parent = vec![u8::MAX; (full + 1) * r];
    for j in 0..r {
        cost[(1 << j) * r + j] = weights.get(start, rest[j]);
    }
    for mask in 1..=full {
        for last in 0..r {
            if mask & (1 << last) == 0 {
                continue;
            }
            let here = cost[mask * r + last];
            if !here.is_finite() {
                continue;
            }
            for next in 0..r {
                if mask & (1 << next) != 0 {
                    continue;
                }
                let to = mask | (1 << next);
                let candidate = here + weights.get(rest[last], rest[next]);
                if candidate < cost[to * r + next] {
                    cost[to * r + next] = candidate;
                    parent[to * r + next] = last as u8;
                }
            }
        }
    }
    let mut best_last = 0;
    let mut best = f64::INFINITY;
    for last in 0..r {
        let total = cost[full * r + last] + weights.get(rest[last], start);
        if total < best {
            best = total;
            best_last = last;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    let mut last = best_last;
    loop {
        order.push(rest[last]);
        let p = parent[mask * r + last];
        mask &= !(1 << last);
        if p == u8::MAX {
            break;
        }
        last = p as usize;
    }
    order.push(start);
    order.reverse();
    Ok(HamCycle::new(weights, order))
}
