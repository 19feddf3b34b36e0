use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;

/// Largest vertex count accepted by [`min_perfect_matching`].
pub const MATCHING_LIMIT: usize = 24;

struct Search<'a> {
    w: &'a DistanceMatrix,
    /// Local vertex ids sorted by distance, per local vertex.
    partners: Vec<Vec<usize>>,
    mate: Vec<usize>,
    best_cost: f64,
    best_mate: Vec<usize>,
}

const UNMATCHED: usize = usize::MAX;

impl Search<'_> {
    /// Half the sum, over unmatched vertices, of the cheapest edge to another
    /// unmatched vertex. Every perfect matching of the rest costs at least
    /// this much.
    fn lower_bound(&self) -> f64 {
        let mut total = 0.0;
        for (u, list) in self.partners.iter().enumerate() {
            if self.mate[u] != UNMATCHED {
                continue;
            }
            if let Some(&v) = list.iter().find(|&&v| self.mate[v] == UNMATCHED) {
                total += self.w.get(u, v);
            }
        }
        total / 2.0
    }

    fn dfs(&mut self, cost: f64) {
        let Some(u) = self.mate.iter().position(|&m| m == UNMATCHED) else {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best_mate.clone_from(&self.mate);
            }
            return;
        };
        if cost + self.lower_bound() >= self.best_cost {
            return;
        }
        for i in 0..self.partners[u].len() {
            let v = self.partners[u][i];
            if self.mate[v] != UNMATCHED {
                continue;
            }
            let next = cost + self.w.get(u, v);
            if next >= self.best_cost {
                // partners are sorted, later ones are no cheaper
                break;
            }
            self.mate[u] = v;
            self.mate[v] = u;
            self.dfs(next);
            self.mate[u] = UNMATCHED;
            self.mate[v] = UNMATCHED;
        }
    }
}

/// Exact minimum-weight perfect matching by branch and bound.
///
/// The lowest unmatched vertex is always branched on, trying partners from
/// cheapest to dearest; a greedy matching seeds the incumbent. Pairs are
/// returned as `(a, b)` with `a < b`, sorted.
pub fn min_perfect_matching(weights: &DistanceMatrix, vertices: &[usize]) -> Result<Vec<(usize, usize)>> {
    let n = vertices.len();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount { count: n });
    }
    if n > MATCHING_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "perfect matching vertex count",
            required: n as u64,
            limit: MATCHING_LIMIT as u64,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let local = weights.submatrix(vertices);
    let partners: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut list: Vec<usize> = (0..n).filter(|&v| v != u).collect();
            list.sort_by(|&a, &b| local.get(u, a).total_cmp(&local.get(u, b)).then(a.cmp(&b)));
            list
        })
        .collect();

    // greedy incumbent
    let mut mate = alloc::vec![UNMATCHED; n];
    let mut greedy_cost = 0.0;
    for u in 0..n {
        if mate[u] != UNMATCHED {
            continue;
        }
        let v = partners[u].iter().copied().find(|&v| mate[v] == UNMATCHED).expect("even count");
        mate[u] = v;
        mate[v] = u;
        greedy_cost += local.get(u, v);
    }

    let mut search = Search {
        w: &local,
        partners,
        mate: alloc::vec![UNMATCHED; n],
        // the incumbent only needs to be beaten strictly, so nudge it up to
        // let the search rediscover it when it is optimal
        best_cost: greedy_cost * (1.0 + 1e-12) + 1e-12,
        best_mate: mate,
    };
    search.dfs(0.0);

    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&u| u < search.best_mate[u])
        .map(|u| {
            let (a, b) = (vertices[u], vertices[search.best_mate[u]]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_vertices() {
        let w = DistanceMatrix::from_fn(3, |i, j| (i as f64 - j as f64).abs());
        assert_eq!(min_perfect_matching(&w, &[2, 0]).unwrap(), vec![(0, 2)]);
    }

    #[test]
    fn unique_cheap_pairing() {
        // a b c d = 0 1 2 3; w(a,b) = w(c,d) = 1, others 10
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
    }

    #[test]
    fn odd_and_oversized_inputs() {
        let w = DistanceMatrix::zeros(30);
        assert_eq!(min_perfect_matching(&w, &[0, 1, 2]), Err(Error::OddVertexCount { count: 3 }));
        let all: Vec<usize> = (0..26).collect();
        assert!(matches!(min_perfect_matching(&w, &all), Err(Error::BudgetExceeded { .. })));
        assert_eq!(min_perfect_matching(&w, &[]).unwrap(), vec![]);
    }
}
