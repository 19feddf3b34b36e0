//! Spanning trees, matchings and Hamiltonian cycles on a [`DistanceMatrix`].
//!
//! Every function takes the full matrix plus the subset of vertices to work
//! on; results refer to the original vertex indices.

mod christofides;
mod held_karp;
mod matching;
mod mst;

use alloc::vec::Vec;

use crate::matrix::DistanceMatrix;

pub use christofides::{christofides, euler_circuit, hamiltonian_cycle};
pub use held_karp::{exact_tsp_small, EXACT_TSP_LIMIT};
pub use matching::{min_perfect_matching, MATCHING_LIMIT};
pub use mst::mst;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WeightedTree {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize, f64)>,
    pub cost: f64,
}

impl WeightedTree {
    /// Adjacency lists indexed by vertex id, sized to the largest id.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let size = self.vertices.iter().copied().max().map_or(0, |v| v + 1);
        let mut adj = alloc::vec![Vec::new(); size];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// A Hamiltonian cycle stored as a vertex order without the closing repeat.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HamCycle {
    pub order: Vec<usize>,
    pub cost: f64,
}

impl HamCycle {
    pub fn new(weights: &DistanceMatrix, order: Vec<usize>) -> Self {
        let cost = weights.cycle_length(&order);
        Self { order, cost }
    }

    /// The order rotated to start at `start`, which must be on the cycle.
    pub fn rotated_to(&self, start: usize) -> Vec<usize> {
        let pos = self.order.iter().position(|&v| v == start).expect("vertex on cycle");
        let mut out = Vec::with_capacity(self.order.len());
        out.extend_from_slice(&self.order[pos..]);
        out.extend_from_slice(&self.order[..pos]);
        out
    }

    /// Cycle restricted to `keep`, by shortcutting.
    pub fn shortcut_to(&self, weights: &DistanceMatrix, keep: impl Fn(usize) -> bool) -> Self {
        let order: Vec<usize> = self.order.iter().copied().filter(|&v| keep(v)).collect();
        Self::new(weights, order)
    }
}

/// Keeps the first occurrence of each vertex accepted by `keep`, in walk
/// order. A closed walk (first vertex repeated at the end) stays closed.
pub fn shortcut(walk: &[usize], keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for &v in walk {
        if keep(v) && !out.contains(&v) {
            out.push(v);
        }
    }
    let closed = walk.len() > 1 && walk.first() == walk.last();
    if closed && out.len() > 1 && out.first() == walk.first() {
        out.push(out[0]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn shortcut_drops_repeats() {
        // o a b a o with o = 0, a = 1, b = 2
        assert_eq!(shortcut(&[0, 1, 2, 1, 0], |_| true), vec![0, 1, 2, 0]);
        assert_eq!(shortcut(&[3, 1, 3, 2, 1], |_| true), vec![3, 1, 2]);
        assert_eq!(shortcut(&[0, 1, 2, 1, 0], |v| v != 1), vec![0, 2, 0]);
    }

    #[test]
    fn rotation_and_restriction() {
        let w = DistanceMatrix::from_fn(4, |i, j| (i as f64 - j as f64).abs());
        let c = HamCycle::new(&w, vec![0, 1, 2, 3]);
        assert_eq!(c.cost, 6.0);
        assert_eq!(c.rotated_to(2), vec![2, 3, 0, 1]);
        let sub = c.shortcut_to(&w, |v| v != 1);
        assert_eq!(sub.order, vec![0, 2, 3]);
        assert_eq!(sub.cost, 6.0);
    }
}
