mod common;

use common::{assert_le, assert_valid, random_instance};
use mdvrp_core::instance::build_super_depot;
use mdvrp_core::partition::{
    all_phases, cycle_partition_mcvrp, delta_uitp, expand_plan, fix_open_walk, greedy_pack, itp_split,
    refined_tree_partition, uitp_split, OpenWalk,
};
use mdvrp_core::solution::Visit;
use mdvrp_core::tsp::{exact_tsp_small, hamiltonian_cycle, mst, HamCycle};
use mdvrp_core::{DistanceMatrix, Instance, SuperDepotView, Variant};
use proptest::prelude::*;

fn full_cycle(view: &SuperDepotView) -> HamCycle {
    let all: Vec<usize> = (0..=view.num_customers()).collect();
    hamiltonian_cycle(view.weights(), &all).unwrap()
}

#[test]
fn itp_single_customer() {
    for k in [1, 2, 5] {
        let inst = random_instance(k, 1, 2, k, Variant::Unit, 1);
        let view = build_super_depot(&inst);
        let plan = itp_split(&view, &full_cycle(&view), k, Variant::Unit).unwrap();
        assert!((plan.total_cost - 2.0 * view.depot_distance(0)).abs() < 1e-12);
    }
}

#[test]
fn itp_picks_the_cheapest_phase() {
    for seed in 0..30 {
        let inst = random_instance(seed, 6, 1, 2, Variant::Unit, 1);
        let view = build_super_depot(&inst);
        let cycle = full_cycle(&view);
        let plan = itp_split(&view, &cycle, 2, Variant::Unit).unwrap();
        // independent phase evaluation: phase p cuts before unit p + 2j
        let order = mdvrp_core::partition::customers_after_depot(&view, &cycle);
        let o = view.depot();
        let mut best = f64::INFINITY;
        for p in 0..2usize {
            let mut cost = 0.0;
            let mut start = 0;
            let mut cuts: Vec<usize> = (0..=6).map(|j| p + 2 * j).filter(|&c| c > 0 && c < 6).collect();
            cuts.push(6);
            for cut in cuts {
                let seg = &order[start..cut];
                cost += view.c(o, seg[0]) + view.c(seg[seg.len() - 1], o);
                cost += seg.windows(2).map(|w| view.c(w[0], w[1])).sum::<f64>();
                start = cut;
            }
            best = best.min(cost);
        }
        assert!((plan.total_cost - best).abs() < 1e-9, "seed {seed}");
        let phases = all_phases(&view, &cycle, 2);
        let min = phases.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        assert!((plan.total_cost - min).abs() < 1e-12);
        assert_le(plan.total_cost, view.delta() + cycle.cost, "itp bound");
    }
}

#[test]
fn uitp_bound_and_loads() {
    for seed in 0..40 {
        let inst = random_instance(seed, 5, 1, 4, Variant::Unsplittable, 3);
        let view = build_super_depot(&inst);
        let cycle = full_cycle(&view);
        let plan = uitp_split(&view, &cycle, 4).unwrap();
        for seg in &plan.segments {
            assert!(seg.iter().map(|v| v.amount).sum::<u64>() <= 4);
        }
        assert_le(plan.total_cost, view.delta() + cycle.cost, "uitp bound");
        let (sol, _) = expand_plan(&inst, &view, &plan);
        assert_valid(&inst, &sol);
    }
}

#[test]
fn delta_uitp_bound_for_any_capacity() {
    for seed in 0..60 {
        let k = 3 + seed % 6;
        let delta = [0.25, 0.3, 0.5, 0.75][seed as usize % 4];
        let inst = random_instance(seed, 7, 2, k, Variant::Unsplittable, k);
        let view = build_super_depot(&inst);
        let cycle = full_cycle(&view);
        let plan = delta_uitp(&view, &cycle, k, delta).unwrap();
        let kf = k as f64;
        let (mut ds, mut db) = (0.0, 0.0);
        for v in 0..7 {
            let p = inst.demand(v) as f64 * view.depot_distance(v);
            if inst.demand(v) as f64 >= delta * kf - 1e-9 {
                db += p;
            } else {
                ds += p;
            }
        }
        let bound = (2.0 * ds + 4.0 * db) / ((1.0 - delta) * kf) + cycle.cost;
        assert_le(plan.total_cost, bound, "delta-uitp bound");
        let (sol, _) = expand_plan(&inst, &view, &plan);
        assert_valid(&inst, &sol);
    }
}

#[test]
fn open_walk_repair() {
    // u1 (node 1), u2 (node 2), customer 0: w(u1,v)=1, w(v,u2)=3
    let rows = vec![vec![0.0, 1.0, 3.0], vec![1.0, 0.0, 2.0], vec![3.0, 2.0, 0.0]];
    let inst =
        Instance::with_default_ids(1, 2, DistanceMatrix::from_rows(&rows).unwrap(), vec![1], 1, Variant::Unit).unwrap();
    let tour = fix_open_walk(&inst, &OpenWalk { start: 0, visits: vec![Visit::new(0, 1)], end: 1 });
    assert_eq!((tour.depot, tour.weight), (0, 2.0));

    for seed in 0..20 {
        let inst = random_instance(seed, 4, 2, 4, Variant::Unit, 1);
        let visits: Vec<Visit> = (0..4).map(|v| Visit::new(v, 1)).collect();
        let walk = OpenWalk { start: 0, visits: visits.clone(), end: 1 };
        let w = inst.weights();
        let inner: f64 = (0..3).map(|i| w.get(i, i + 1)).sum();
        let close_s = inst.depot_distance(0, 0) + inner + inst.depot_distance(0, 3);
        let close_t = inst.depot_distance(1, 0) + inner + inst.depot_distance(1, 3);
        let tour = fix_open_walk(&inst, &walk);
        assert!((tour.weight - close_s.min(close_t)).abs() < 1e-12);
        let bound = inst.depot_distance(0, 0) + 2.0 * inner + inst.depot_distance(1, 3);
        assert_le(tour.weight, bound, "repair bound");
    }
}

#[test]
fn single_depot_cycle_partition_needs_no_repair() {
    for seed in 0..20 {
        let inst = random_instance(seed, 6, 1, 3, Variant::Unit, 1);
        let view = build_super_depot(&inst);
        let cycle = full_cycle(&view);
        let out = cycle_partition_mcvrp(&inst, &view, &cycle).unwrap();
        assert_eq!(out.repairs, 0);
        assert!((out.solution.total_weight - out.plan.total_cost).abs() < 1e-9);
    }
}

#[test]
fn one_customer_two_depots() {
    let inst = random_instance(5, 1, 2, 2, Variant::Unit, 1);
    let view = build_super_depot(&inst);
    let out = cycle_partition_mcvrp(&inst, &view, &full_cycle(&view)).unwrap();
    let nearest = inst.depot_distance(0, 0).min(inst.depot_distance(1, 0));
    assert!((out.solution.total_weight - 2.0 * nearest).abs() < 1e-12);
}

#[test]
fn cycle_partition_certificates() {
    for seed in 0..80 {
        let variant = [Variant::Unit, Variant::Splittable, Variant::Unsplittable][seed as usize % 3];
        let k = [2, 3, 4, 6][seed as usize % 4];
        if variant == Variant::Unsplittable && k % 2 == 1 {
            continue;
        }
        let inst = random_instance(seed, 8, 3, k, variant, k);
        let view = build_super_depot(&inst);
        let cycle = full_cycle(&view);
        let out = cycle_partition_mcvrp(&inst, &view, &cycle).unwrap();
        assert_valid(&inst, &out.solution);
        let factor = if variant == Variant::Unsplittable { 4.0 } else { 2.0 };
        assert_le(out.solution.total_weight, factor / k as f64 * view.delta() + 2.0 * cycle.cost, "cycle certificate");
    }
}

#[test]
fn greedy_pack_examples() {
    let p = greedy_pack(&[3, 3, 2], 4).unwrap();
    assert_eq!((p.full, p.leftover), (vec![vec![0], vec![1]], vec![2]));
    let p = greedy_pack(&[2], 4).unwrap();
    assert!(p.full.is_empty());
    let p = greedy_pack(&[1, 1, 1, 1], 2).unwrap();
    assert_eq!((p.full.len(), p.leftover.len()), (2, 0));
}

#[test]
fn tree_partition_examples() {
    let rows = vec![vec![0.0, 5.0], vec![5.0, 0.0]];
    let inst =
        Instance::with_default_ids(1, 1, DistanceMatrix::from_rows(&rows).unwrap(), vec![1], 3, Variant::Unit).unwrap();
    let out = refined_tree_partition(&inst, &build_super_depot(&inst)).unwrap();
    assert_eq!(out.solution.total_weight, 10.0);

    let inst = random_instance(2, 5, 2, 4, Variant::Unsplittable, 4);
    let big = Instance::with_default_ids(5, 2, inst.weights().clone(), vec![3, 4, 3, 3, 4], 4, Variant::Unsplittable)
        .unwrap();
    let view = build_super_depot(&big);
    let out = refined_tree_partition(&big, &view).unwrap();
    let expected: f64 = (0..5).map(|v| 2.0 * view.depot_distance(v)).sum();
    assert!((out.solution.total_weight - expected).abs() < 1e-9);
}

#[test]
fn tree_partition_certificates() {
    for seed in 0..120 {
        let variant = [Variant::Unit, Variant::Splittable, Variant::Unsplittable][seed as usize % 3];
        let k = [2, 3, 4, 6][seed as usize % 4];
        let n = 7 + seed as usize % 8;
        let inst = random_instance(seed, n, 2, k, variant, k);
        let view = build_super_depot(&inst);
        let out = refined_tree_partition(&inst, &view).unwrap();
        assert_valid(&inst, &out.solution);
        let half = (k / 2) as f64;
        assert_le(out.solution.total_weight, 2.0 / (half + 1.0) * view.delta() + 2.0 * out.tree_cost, "tree");
        assert!(out.iterations <= n);
        for c in &out.partition.components {
            let d: u64 = c.customers.iter().map(|&v| inst.demand(v)).sum();
            assert!(d > k / 2 && d <= k);
        }
        for rest in &out.partition.residual {
            assert!(rest.iter().map(|&v| inst.demand(v)).sum::<u64>() <= k);
        }
    }
}

#[test]
fn tree_cost_below_cycle_costs() {
    for seed in 0..30 {
        let inst = random_instance(seed, 7, 2, 3, Variant::Unit, 1);
        let view = build_super_depot(&inst);
        let all: Vec<usize> = (0..=7).collect();
        let t = refined_tree_partition(&inst, &view).unwrap().tree_cost;
        let exact = exact_tsp_small(view.weights(), &all).unwrap().cost;
        let christofides = full_cycle(&view).cost;
        assert_le(t, christofides, "tree vs christofides");
        assert_le(christofides, 1.5 * exact, "christofides vs optimum");
        assert_le(mst(view.weights(), &all).unwrap().cost, exact, "mst vs optimum");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn greedy_pack_invariants(demands in prop::collection::vec(1u64..=6, 0..12), k in 6u64..=10) {
        let p = greedy_pack(&demands, k).unwrap();
        let half = k / 2;
        let mut seen: Vec<usize> = p.full.iter().flatten().copied().chain(p.leftover.iter().copied()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..demands.len()).collect::<Vec<_>>());
        for set in &p.full {
            let d: u64 = set.iter().map(|&i| demands[i]).sum();
            prop_assert!(d > half && d <= k);
        }
        prop_assert!(p.leftover.iter().map(|&i| demands[i]).sum::<u64>() <= half);
    }

    #[test]
    fn tree_partition_always_feasible(seed in 0u64..1_000_000, n in 1usize..12, m in 1usize..4, k in 1u64..7) {
        let inst = random_instance(seed, n, m, k, Variant::Unsplittable, k);
        let view = build_super_depot(&inst);
        let out = refined_tree_partition(&inst, &view).unwrap();
        let report = mdvrp_core::solution::validate_solution(&inst, &out.solution);
        prop_assert!(report.is_feasible());
        let bound = 2.0 / ((k / 2) as f64 + 1.0) * view.delta() + 2.0 * out.tree_cost;
        prop_assert!(mdvrp_core::approx_le(out.solution.total_weight, bound));
    }
}
