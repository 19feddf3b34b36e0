mod common;

use common::{permutations, random_matrix};
use mdvrp_core::tsp::{christofides, exact_tsp_small, min_perfect_matching, mst, shortcut};
use mdvrp_core::{DistanceMatrix, Error};
use proptest::prelude::*;

/// Minimum over all labelled spanning trees, decoded from Prüfer sequences.
fn brute_mst(w: &DistanceMatrix, n: usize) -> f64 {
    let mut best = f64::INFINITY;
    let total = n.pow((n - 2) as u32);
    for code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut cost = 0.0;
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            cost += w.get(leaf, s);
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        cost += w.get(rest[0], rest[1]);
        best = best.min(cost);
    }
    best
}

fn brute_matching(w: &DistanceMatrix, vertices: &[usize]) -> f64 {
    if vertices.is_empty() {
        return 0.0;
    }
    let a = vertices[0];
    let mut best = f64::INFINITY;
    for i in 1..vertices.len() {
        let rest: Vec<usize> = vertices[1..].iter().copied().filter(|&x| x != vertices[i]).collect();
        best = best.min(w.get(a, vertices[i]) + brute_matching(w, &rest));
    }
    best
}

fn brute_tsp(w: &DistanceMatrix, n: usize) -> f64 {
    let rest: Vec<usize> = (1..n).collect();
    permutations(&rest)
        .into_iter()
        .map(|p| {
            let mut order = vec![0];
            order.extend(p);
            w.cycle_length(&order)
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn mst_small_cases() {
    let w = DistanceMatrix::from_rows(&[vec![0.0, 5.0], vec![5.0, 0.0]]).unwrap();
    assert_eq!(mst(&w, &[0, 1]).unwrap().cost, 5.0);
    let tri = DistanceMatrix::from_fn(3, |i, j| if i == j { 0.0 } else { 1.0 });
    assert_eq!(mst(&tri, &[0, 1, 2]).unwrap().cost, 2.0);
    assert_eq!(mst(&tri, &[]), Err(Error::EmptyVertexSet));
}

#[test]
fn mst_matches_pruefer_enumeration() {
    for seed in 0..3 {
        let w = random_matrix(seed, 8);
        let all: Vec<usize> = (0..8).collect();
        let tree = mst(&w, &all).unwrap();
        assert_eq!(tree.edges.len(), 7);
        assert!((tree.cost - brute_mst(&w, 8)).abs() < 1e-9);
    }
}

#[test]
fn matching_examples() {
    let w = DistanceMatrix::from_rows(&[vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
    assert_eq!(min_perfect_matching(&w, &[0, 1]).unwrap(), vec![(0, 1)]);
    // a=0 b=1 c=2 d=3: ab and cd cost 1, everything else 10
    let w = DistanceMatrix::from_fn(4, |i, j| {
        if i == j {
            0.0
        } else if (i / 2) == (j / 2) {
            1.0
        } else {
            10.0
        }
    });
    assert_eq!(min_perfect_matching(&w, &[0, 1, 2, 3]).unwrap(), vec![(0, 1), (2, 3)]);
    assert_eq!(min_perfect_matching(&w, &[0, 1, 2]), Err(Error::OddVertexCount { count: 3 }));
}

#[test]
fn matching_matches_all_945_pairings() {
    for seed in 10..15 {
        let w = random_matrix(seed, 10);
        let all: Vec<usize> = (0..10).collect();
        let pairs = min_perfect_matching(&w, &all).unwrap();
        let cost: f64 = pairs.iter().map(|&(a, b)| w.get(a, b)).sum();
        assert!((cost - brute_matching(&w, &all)).abs() < 1e-9);
    }
}

#[test]
fn held_karp_matches_permutations() {
    for seed in 20..24 {
        let w = random_matrix(seed, 9);
        let all: Vec<usize> = (0..9).collect();
        let c = exact_tsp_small(&w, &all).unwrap();
        assert!((c.cost - brute_tsp(&w, 9)).abs() < 1e-9);
        assert!((w.cycle_length(&c.order) - c.cost).abs() < 1e-9);
    }
    let big: Vec<usize> = (0..17).collect();
    assert!(matches!(exact_tsp_small(&random_matrix(0, 17), &big), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn christofides_within_three_halves_on_twelve_points() {
    for seed in 30..40 {
        let w = random_matrix(seed, 12);
        let all: Vec<usize> = (0..12).collect();
        let c = christofides(&w, &all).unwrap();
        let mut sorted = c.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, all);
        let opt = exact_tsp_small(&w, &all).unwrap().cost;
        assert!(c.cost <= 1.5 * opt + 1e-9, "{} > 1.5 × {}", c.cost, opt);
        assert!(mst(&w, &all).unwrap().cost <= opt + 1e-9);
    }
}

#[test]
fn doubled_tree_shortcut_within_twice_mst() {
    for seed in 40..45 {
        let w = random_matrix(seed, 7);
        let all: Vec<usize> = (0..7).collect();
        let tree = mst(&w, &all).unwrap();
        let edges: Vec<(usize, usize)> = tree.edges.iter().flat_map(|&(a, b, _)| [(a, b), (a, b)]).collect();
        let walk = mdvrp_core::tsp::euler_circuit(&edges, 0);
        let cycle = shortcut(&walk, |_| true);
        assert!(w.path_length(&cycle) <= 2.0 * tree.cost + 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shortcut_never_lengthens(seed in 0u64..10_000, len in 2usize..20, keep_mask in 0u32..256) {
        let w = random_matrix(seed, 8);
        let walk: Vec<usize> = (0..len).map(|i| ((seed as usize >> (i % 13)) + i * 5) % 8).collect();
        let mut closed = walk.clone();
        closed.push(walk[0]);
        let keep = |v: usize| v == walk[0] || keep_mask & (1 << v) != 0;
        let out = shortcut(&closed, keep);
        prop_assert!(w.path_length(&out) <= w.path_length(&closed) + 1e-9);
        let mut seen = std::collections::BTreeSet::new();
        for &v in &out[..out.len().saturating_sub(1)] {
            prop_assert!(seen.insert(v));
        }
    }

    #[test]
    fn christofides_bound_random_sizes(seed in 0u64..100_000, n in 3usize..=10) {
        let w = random_matrix(seed, n);
        let all: Vec<usize> = (0..n).collect();
        let c = christofides(&w, &all).unwrap();
        let opt = exact_tsp_small(&w, &all).unwrap().cost;
        prop_assert!(c.cost <= 1.5 * opt + 1e-9);
    }
}
