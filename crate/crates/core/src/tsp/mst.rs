use alloc::vec::Vec;

use super::WeightedTree;
use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        Self { parent: (0..size).collect(), rank: alloc::vec![0; size] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Minimum spanning tree over `vertices` (Kruskal). Equal weights are
/// broken by the lexicographic order of the vertex pair.
pub fn mst(weights: &DistanceMatrix, vertices: &[usize]) -> Result<WeightedTree> {
    if vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(&v) = vertices.iter().find(|&&v| v >= weights.size()) {
        return Err(Error::VertexOutOfRange { vertex: v });
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let count = sorted.len();
    let mut candidates = Vec::with_capacity(count * (count - 1) / 2);
    for i in 0..count {
        for j in i + 1..count {
            candidates.push((weights.get(sorted[i], sorted[j]), i, j));
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut sets = DisjointSets::new(count);
    let mut edges = Vec::with_capacity(count - 1);
    let mut cost = 0.0;
    for (w, i, j) in candidates {
        if sets.union(i, j) {
            edges.push((sorted[i], sorted[j], w));
            cost += w;
            if edges.len() + 1 == count {
                break;
            }
        }
    }
    Ok(WeightedTree { vertices: sorted, edges, cost })
}
