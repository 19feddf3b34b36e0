#![allow(dead_code)]

use mdvrp_core::{DistanceMatrix, Instance, Solution, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn points(rng: &mut ChaCha8Rng, count: usize) -> Vec<(f64, f64)> {
    (0..count).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect()
}

pub fn euclidean(pts: &[(f64, f64)]) -> DistanceMatrix {
    DistanceMatrix::from_fn(pts.len(), |i, j| {
        if i == j {
            0.0
        } else {
            ((pts[i].0 - pts[j].0).powi(2) + (pts[i].1 - pts[j].1).powi(2)).sqrt()
        }
    })
}

pub fn random_matrix(seed: u64, count: usize) -> DistanceMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    euclidean(&points(&mut rng, count))
}

/// Euclidean instance in the unit square; demands uniform in `1..=dmax`
/// (forced to 1 for the unit variant).
pub fn random_instance(seed: u64, n: usize, m: usize, k: u64, variant: Variant, dmax: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = euclidean(&points(&mut rng, n + m));
    let demands = (0..n).map(|_| if variant == Variant::Unit { 1 } else { rng.gen_range(1..=dmax) }).collect();
    Instance::with_default_ids(n, m, w, demands, k, variant).unwrap()
}

/// Closed-walk length of `depot → order → depot` in G.
pub fn tour_length(inst: &Instance, depot: usize, order: &[usize]) -> f64 {
    let w = inst.weights();
    let d = inst.depot_node(depot);
    let mut prev = d;
    let mut total = 0.0;
    for &v in order {
        total += w.get(prev, v);
        prev = v;
    }
    total + w.get(prev, d)
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Cheapest tour through `set` from any depot, by permutation.
pub fn brute_block(inst: &Instance, set: &[usize]) -> f64 {
    let mut best = f64::INFINITY;
    for u in 0..inst.num_depots() {
        for p in permutations(set) {
            best = best.min(tour_length(inst, u, &p));
        }
    }
    best
}

/// Optimum by enumerating every set partition of the customers; blocks
/// must fit the capacity.
pub fn brute_opt(inst: &Instance) -> f64 {
    fn rec(inst: &Instance, next: usize, blocks: &mut Vec<Vec<usize>>, best: &mut f64) {
        let n = inst.num_customers();
        if next == n {
            let cost: f64 = blocks.iter().map(|b| brute_block(inst, b)).sum();
            *best = best.min(cost);
            return;
        }
        let d = inst.demand(next);
        for i in 0..blocks.len() {
            let load: u64 = blocks[i].iter().map(|&v| inst.demand(v)).sum();
            if load + d <= inst.capacity() {
                blocks[i].push(next);
                rec(inst, next + 1, blocks, best);
                blocks[i].pop();
            }
        }
        blocks.push(vec![next]);
        rec(inst, next + 1, blocks, best);
        blocks.pop();
    }
    let mut best = f64::INFINITY;
    rec(inst, 0, &mut Vec::new(), &mut best);
    best
}

pub fn assert_le(a: f64, b: f64, what: &str) {
    assert!(mdvrp_core::approx_le(a, b), "{what}: {a} > {b}");
}

pub fn assert_valid(inst: &Instance, sol: &Solution) {
    let report = mdvrp_core::solution::validate_solution(inst, sol);
    assert!(report.is_feasible(), "{:?}", report.violations);
}
