//! The refined tree partition.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::instance::{Instance, SuperDepotView};
use crate::solution::{Solution, Tour};
use crate::tsp::mst;

/// Output of [`greedy_pack`]: closed sets with demand in `(⌊k/2⌋, k]` and
/// the leftover set, whose demand is at most `⌊k/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub full: Vec<Vec<usize>>,
    pub leftover: Vec<usize>,
}

/// Scans the items in order, closing the running set once its demand
/// exceeds `⌊k/2⌋`; an item that does not fit forms a set on its own.
pub fn greedy_pack(demands: &[u64], k: u64) -> Result<Packing> {
    let half = k / 2;
    let mut full = Vec::new();
    let mut current = Vec::new();
    let mut load = 0u64;
    for (i, &d) in demands.iter().enumerate() {
        if d > k {
            return Err(Error::DemandAboveCapacity { customer: i, demand: d, capacity: k });
        }
        if load + d <= k {
            current.push(i);
            load += d;
            if load > half {
                full.push(core::mem::take(&mut current));
                load = 0;
            }
        } else {
            full.push(vec![i]);
        }
    }
    Ok(Packing { full, leftover: current })
}

/// A component carved off a depot tree.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Component {
    pub customers: Vec<usize>,
    /// Depot serving the component.
    pub depot: usize,
    /// `e_S` as (depot, customer), or `None` when the component hangs
    /// directly off its depot.
    pub connection: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ForestPartition {
    pub components: Vec<Component>,
    /// Customers left in each depot's tree, indexed by depot.
    pub residual: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeOutcome {
    pub solution: Solution,
    /// `c(T'*)`: MST in H over the customers with `d(v) ≤ ⌊k/2⌋` and `o`.
    pub tree_cost: f64,
    pub partition: ForestPartition,
    /// Splitting-loop iterations summed over depots.
    pub iterations: usize,
}

struct Forest {
    /// Node ids: customers `0..n`, depots `n..n+m`.
    children: Vec<Vec<usize>>,
    removed: Vec<bool>,
    demand: Vec<u64>,
}

impl Forest {
    fn subtree_demand(&self, v: usize) -> u64 {
        self.demand[v]
            + self.children[v].iter().filter(|&&c| !self.removed[c]).map(|&c| self.subtree_demand(c)).sum::<u64>()
    }

    fn live_children(&self, v: usize) -> Vec<usize> {
        self.children[v].iter().copied().filter(|&c| !self.removed[c]).collect()
    }

    /// Live customers of the subtree at `v` in preorder, `v` included.
    fn preorder(&self, v: usize, out: &mut Vec<usize>) {
        out.push(v);
        for &c in &self.children[v] {
            if !self.removed[c] {
                self.preorder(c, out);
            }
        }
    }
}

/// Refined tree partition.
///
/// Customers with `d(v) > ⌊k/2⌋` get trivial tours. The rest are spanned by
/// an MST in H, mapped to a forest in G with one depot per tree, and each
/// tree heavier than `k` is cut repeatedly at a deepest vertex `v` with
/// `d(T_v) > k`: the child subtrees are packed greedily, every set above
/// `⌊k/2⌋` becomes a tour attached through its cheapest depot edge (routed
/// through `v` and shortcut), and finally each depot serves what is left.
/// Cost is at most `2/(⌊k/2⌋+1) Δ + 2c(T'*)`.
pub fn refined_tree_partition(instance: &Instance, view: &SuperDepotView) -> Result<TreeOutcome> {
    let n = instance.num_customers();
    let m = instance.num_depots();
    let k = instance.capacity();
    let half = k / 2;
    let mut tours = Vec::new();
    let mut small = Vec::new();
    for v in 0..n {
        let d = instance.demand(v);
        if d > k {
            return Err(Error::DemandAboveCapacity { customer: v, demand: d, capacity: k });
        }
        if d > half {
            tours.push(Tour::serving(instance, view.anchor(v), &[v]));
        } else {
            small.push(v);
        }
    }
    let mut partition = ForestPartition { components: Vec::new(), residual: vec![Vec::new(); m] };
    if small.is_empty() {
        return Ok(TreeOutcome { solution: Solution::new(tours), tree_cost: 0.0, partition, iterations: 0 });
    }

    let o = view.depot();
    let mut vertices = small.clone();
    vertices.push(o);
    let tree = mst(view.weights(), &vertices)?;
    let adj = tree.adjacency();

    let mut forest = Forest { children: vec![Vec::new(); n + m], removed: vec![false; n + m], demand: vec![0; n + m] };
    for &v in &small {
        forest.demand[v] = instance.demand(v);
    }
    // root the tree at o; hang each vertex on its G parent
    let mut stack = vec![(o, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        if v != o {
            let g_parent = if parent == o || view.is_dummy(parent, v) { n + view.anchor(v) } else { parent };
            forest.children[g_parent].push(v);
        }
        for &next in adj[v].iter().rev() {
            if next != parent {
                stack.push((next, v));
            }
        }
    }
    for list in &mut forest.children {
        list.sort_unstable();
    }

    let mut chosen = vec![false; n + m];
    let mut iterations = 0;
    for u in 0..m {
        let root = n + u;
        while forest.subtree_demand(root) > k {
            iterations += 1;
            let mut v = root;
            while let Some(next) = forest.live_children(v).into_iter().find(|&c| forest.subtree_demand(c) > k) {
                v = next;
            }
            if chosen[v] {
                return Err(Error::RepeatedSelection { customer: v });
            }
            chosen[v] = true;
            let kids = forest.live_children(v);
            let kid_demand: Vec<u64> = kids.iter().map(|&c| forest.subtree_demand(c)).collect();
            let packing = greedy_pack(&kid_demand, k)?;
            let mut sets = packing.full;
            let leftover: u64 = packing.leftover.iter().map(|&i| kid_demand[i]).sum();
            if leftover > half {
                sets.push(packing.leftover);
            }
            for set in sets {
                let roots: Vec<usize> = set.iter().map(|&i| kids[i]).collect();
                let mut members = Vec::new();
                for &r in &roots {
                    forest.preorder(r, &mut members);
                }
                let (depot, visits, connection) = if v == root {
                    (u, members.clone(), None)
                } else {
                    let (depot, entry) = cheapest_connection(instance, &members);
                    (depot, route_through(&forest, v, &roots, entry), Some((depot, entry)))
                };
                tours.push(Tour::serving(instance, depot, &visits));
                members.sort_unstable();
                partition.components.push(Component { customers: members, depot, connection });
                for r in roots {
                    forest.removed[r] = true;
                }
            }
        }
        let mut rest = Vec::new();
        for c in forest.live_children(root) {
            forest.preorder(c, &mut rest);
        }
        if !rest.is_empty() {
            tours.push(Tour::serving(instance, u, &rest));
        }
        rest.sort_unstable();
        partition.residual[u] = rest;
    }
    Ok(TreeOutcome { solution: Solution::new(tours), tree_cost: tree.cost, partition, iterations })
}

/// Cheapest depot–customer edge into `members`, lowest (depot, customer)
/// on ties.
fn cheapest_connection(instance: &Instance, members: &[usize]) -> (usize, usize) {
    let mut best = (f64::INFINITY, 0, 0);
    for u in 0..instance.num_depots() {
        for &v in members {
            let cost = instance.depot_distance(u, v);
            if cost < best.0 || (cost == best.0 && (u, v) < (best.1, best.2)) {
                best = (cost, u, v);
            }
        }
    }
    (best.1, best.2)
}

/// Preorder from `entry` over the tree formed by `v` and the subtrees at
/// `roots`, with `v` shortcut.
fn route_through(forest: &Forest, v: usize, roots: &[usize], entry: usize) -> Vec<usize> {
    // undirected adjacency restricted to the component
    let mut members = Vec::new();
    for &r in roots {
        forest.preorder(r, &mut members);
    }
    let inside = |x: usize| x == v || members.contains(&x);
    let neighbours = |x: usize| -> Vec<usize> {
        let mut out: Vec<usize> = if x == v {
            roots.to_vec()
        } else {
            forest.children[x].iter().copied().filter(|&c| !forest.removed[c] && inside(c)).collect()
        };
        if roots.contains(&x) {
            out.push(v);
        } else if x != v {
            if let Some(p) = members.iter().copied().find(|&p| forest.children[p].contains(&x)) {
                out.push(p);
            }
        }
        out.sort_unstable();
        out
    };
    let mut order = Vec::new();
    let mut seen = vec![entry];
    let mut stack = vec![entry];
    while let Some(x) = stack.pop() {
        if x != v {
            order.push(x);
        }
        for y in neighbours(x).into_iter().rev() {
            if !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_examples() {
        assert_eq!(greedy_pack(&[3, 3, 2], 4).unwrap(), Packing { full: vec![vec![0], vec![1]], leftover: vec![2] });
        assert_eq!(
            greedy_pack(&[1, 1, 1, 1], 2).unwrap(),
            Packing { full: vec![vec![0, 1], vec![2, 3]], leftover: vec![] }
        );
        assert_eq!(greedy_pack(&[1], 4).unwrap(), Packing { full: vec![], leftover: vec![0] });
        assert!(greedy_pack(&[5], 4).is_err());
    }
}
