use alloc::vec;
use alloc::vec::Vec;

use super::{matching::min_perfect_matching, mst::mst, shortcut, HamCycle};
use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;

/// Euler circuit of a connected multigraph with all degrees even
/// (Hierholzer). Neighbours are taken in increasing id order.
pub fn euler_circuit(edges: &[(usize, usize)], start: usize) -> Vec<usize> {
    let size = edges.iter().map(|&(a, b)| a.max(b)).max().map_or(start + 1, |v| v.max(start) + 1);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); size];
    for (id, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; size];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while cursor[v] < adj[v].len() {
            let (next, id) = adj[v][cursor[v]];
            cursor[v] += 1;
            if !used[id] {
                used[id] = true;
                stack.push(next);
                advanced = true;
                break;
            }
        }
        if !advanced {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit
}

/// Christofides: minimum spanning tree, exact minimum perfect matching on
/// its odd-degree vertices, Euler circuit from the lowest vertex, then
/// shortcutting. Cost is at most 3/2 of the optimum on a semi-metric.
pub fn christofides(weights: &DistanceMatrix, vertices: &[usize]) -> Result<HamCycle> {
    if vertices.len() < 3 {
        return Err(Error::TooFewVertices { operation: "christofides", min: 3, count: vertices.len() });
    }
    let tree = mst(weights, vertices)?;
    let mut degree = vec![0usize; weights.size()];
    for &(a, b, _) in &tree.edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let odd: Vec<usize> = tree.vertices.iter().copied().filter(|&v| degree[v] % 2 == 1).collect();
    let matching = min_perfect_matching(weights, &odd)?;
    let mut edges: Vec<(usize, usize)> = tree.edges.iter().map(|&(a, b, _)| (a, b)).collect();
    edges.extend(matching);
    let start = tree.vertices[0];
    let circuit = euler_circuit(&edges, start);
    let mut order = shortcut(&circuit, |_| true);
    order.pop();
    Ok(HamCycle::new(weights, order))
}

/// Christofides cycle, or the only cycle there is on one or two vertices.
pub fn hamiltonian_cycle(weights: &DistanceMatrix, vertices: &[usize]) -> Result<HamCycle> {
    match vertices.len() {
        0 => Err(Error::EmptyVertexSet),
        1 | 2 => Ok(HamCycle::new(weights, vertices.to_vec())),
        _ => christofides(weights, vertices),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilateral_triangle() {
        let w = DistanceMatrix::from_fn(3, |i, j| if i == j { 0.0 } else { 1.0 });
        let c = christofides(&w, &[0, 1, 2]).unwrap();
        assert_eq!(c.cost, 3.0);
        assert_eq!(c.order.len(), 3);
    }

    #[test]
    fn unit_square_with_diagonals() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let w = DistanceMatrix::from_fn(4, |i, j| {
            let (a, b) = (pts[i], pts[j]);
            libm::hypot(a.0 - b.0, a.1 - b.1)
        });
        let c = christofides(&w, &[0, 1, 2, 3]).unwrap();
        assert!((c.cost - 4.0).abs() < 1e-12);
    }

    #[test]
    fn too_few_vertices() {
        let w = DistanceMatrix::zeros(2);
        assert!(matches!(christofides(&w, &[0, 1]), Err(Error::TooFewVertices { .. })));
        assert_eq!(hamiltonian_cycle(&w, &[0, 1]).unwrap().order, vec![0, 1]);
    }

    #[test]
    fn euler_circuit_uses_every_edge() {
        // two triangles sharing vertex 0
        let edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];
        let c = euler_circuit(&edges, 0);
        assert_eq!(c.len(), 7);
        assert_eq!(c.first(), Some(&0));
        assert_eq!(c.last(), Some(&0));
    }
}
