//! Dense two-phase simplex for the covering LP
//! `min Σ w(C) x_C  s.t.  Σ_{C ∋ v} x_C ≥ 1,  x ≥ 0`.

use alloc::vec;
use alloc::vec::Vec;

use super::pool::TourPool;
use crate::error::{Error, Result};

const PIVOT_TOL: f64 = 1e-9;
const MAX_PIVOTS: usize = 200_000;
/// Consecutive degenerate pivots before falling back to Bland's rule.
const DEGENERATE_RUN: usize = 50;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FractionalSelection {
    /// `x_C`, indexed like the pool.
    pub values: Vec<f64>,
    pub objective: f64,
    /// Optimal dual prices, indexed like the pool universe.
    pub duals: Vec<f64>,
    pub pivots: usize,
}

impl FractionalSelection {
    /// `Σ_{C ∋ v} x_C` for each universe customer.
    pub fn coverage(&self, pool: &TourPool) -> Vec<f64> {
        pool.universe
            .iter()
            .map(|v| pool.tours.iter().zip(&self.values).filter(|(t, _)| t.customers.contains(v)).map(|(_, x)| x).sum())
            .collect()
    }
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// `rows` constraint rows of `cols + 1` entries (last = rhs).
    a: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * (self.cols + 1) + c]
    }

    /// Pivots on `(r, c)` and updates the reduced costs `red` alongside.
    fn pivot(&mut self, r: usize, c: usize, red: &mut [f64]) {
        let width = self.cols + 1;
        let p = self.at(r, c);
        for j in 0..width {
            self.a[r * width + j] /= p;
        }
        let support: Vec<usize> = (0..width).filter(|&j| self.a[r * width + j] != 0.0).collect();
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let f = self.at(i, c);
            if f != 0.0 {
                for &j in &support {
                    let delta = f * self.a[r * width + j];
                    self.a[i * width + j] -= delta;
                }
            }
        }
        let f = red[c];
        if f != 0.0 {
            for &j in support.iter().filter(|&&j| j < self.cols) {
                red[j] -= f * self.a[r * width + j];
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_B B⁻¹ A_j` for every column.
    fn reduced_costs(&self, cost: &[f64]) -> Vec<f64> {
        let mut red = cost.to_vec();
        for r in 0..self.rows {
            let cb = cost[self.basis[r]];
            if cb != 0.0 {
                for (j, rc) in red.iter_mut().enumerate() {
                    *rc -= cb * self.at(r, j);
                }
            }
        }
        red
    }

    /// Primal simplex over the columns allowed by `enter`. Dantzig pricing,
    /// switching to Bland's rule after a run of degenerate pivots so that
    /// cycling cannot occur.
    fn optimize(&mut self, cost: &[f64], enter: &dyn Fn(usize) -> bool, pivots: &mut usize) -> Result<()> {
        let mut red = self.reduced_costs(cost);
        let mut degenerate = 0;
        loop {
            let candidates = (0..self.cols).filter(|&j| enter(j) && red[j] < -PIVOT_TOL);
            let entering = if degenerate < DEGENERATE_RUN {
                candidates.min_by(|&a, &b| red[a].total_cmp(&red[b]))
            } else {
                candidates.min()
            };
            let Some(c) = entering else {
                return Ok(());
            };
            let mut best: Option<(f64, usize)> = None;
            for r in 0..self.rows {
                let a = self.at(r, c);
                if a > PIVOT_TOL {
                    let ratio = self.at(r, self.cols) / a;
                    best = match best {
                        Some((b, row))
                            if ratio > b + PIVOT_TOL || (ratio > b - PIVOT_TOL && self.basis[row] < self.basis[r]) =>
                        {
                            Some((b, row))
                        }
                        _ => Some((ratio, r)),
                    };
                }
            }
            let Some((step, r)) = best else {
                return Err(Error::LpUnbounded);
            };
            degenerate = if step <= PIVOT_TOL { degenerate + 1 } else { 0 };
            self.pivot(r, c, &mut red);
            *pivots += 1;
            if *pivots > MAX_PIVOTS {
                return Err(Error::LpIterationLimit { iterations: *pivots });
            }
        }
    }
}

/// Solves the covering LP of `pool` to optimality.
pub fn solve_setcover_lp(pool: &TourPool) -> Result<FractionalSelection> {
    let rows = pool.universe.len();
    let t = pool.tours.len();
    if rows == 0 {
        return Ok(FractionalSelection { values: vec![0.0; t], objective: 0.0, duals: Vec::new(), pivots: 0 });
    }
    let row_of = |v: usize| pool.universe.binary_search(&v).ok();
    for &v in &pool.universe {
        if !pool.tours.iter().any(|tour| tour.customers.contains(&v)) {
            return Err(Error::Uncoverable { customer: v });
        }
    }
    // columns: tours, surplus, artificial
    let cols = t + 2 * rows;
    let width = cols + 1;
    let mut a = vec![0.0; rows * width];
    for (j, tour) in pool.tours.iter().enumerate() {
        for &v in &tour.customers {
            if let Some(r) = row_of(v) {
                a[r * width + j] = 1.0;
            }
        }
    }
    for r in 0..rows {
        a[r * width + t + r] = -1.0;
        a[r * width + t + rows + r] = 1.0;
        a[r * width + cols] = 1.0;
    }
    let mut tab = Tableau { rows, cols, a, basis: (t + rows..t + 2 * rows).collect() };
    let mut pivots = 0;

    let mut phase1 = vec![0.0; cols];
    for c in phase1.iter_mut().skip(t + rows) {
        *c = 1.0;
    }
    tab.optimize(&phase1, &|_| true, &mut pivots)?;
    // drive zero-level artificials out of the basis
    for r in 0..rows {
        if tab.basis[r] >= t + rows {
            if let Some(c) = (0..t + rows).find(|&j| tab.at(r, j).abs() > PIVOT_TOL) {
                tab.pivot(r, c, &mut vec![0.0; cols]);
                pivots += 1;
            }
        }
    }

    let mut cost = vec![0.0; cols];
    for (j, tour) in pool.tours.iter().enumerate() {
        cost[j] = tour.weight;
    }
    tab.optimize(&cost, &|j| j < t + rows, &mut pivots)?;

    let mut values = vec![0.0; t];
    for r in 0..rows {
        let b = tab.basis[r];
        if b < t {
            values[b] = tab.at(r, cols).max(0.0);
        }
    }
    let red = tab.reduced_costs(&cost);
    let duals = (0..rows).map(|r| -red[t + rows + r]).collect();
    let objective = values.iter().zip(&pool.tours).map(|(x, tour)| x * tour.weight).sum();
    Ok(FractionalSelection { values, objective, duals, pivots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::pool::PoolTour;

    fn tour(customers: &[usize], weight: f64) -> PoolTour {
        PoolTour { depot: 0, customers: customers.to_vec(), weight }
    }

    #[test]
    fn single_tour() {
        let pool = TourPool { tours: vec![tour(&[0], 4.0)], universe: vec![0] };
        let lp = solve_setcover_lp(&pool).unwrap();
        assert_eq!(lp.values, vec![1.0]);
        assert_eq!(lp.objective, 4.0);
    }

    #[test]
    fn cheaper_duplicate_wins() {
        let pool = TourPool { tours: vec![tour(&[0, 1], 5.0), tour(&[0, 1], 3.0)], universe: vec![0, 1] };
        let lp = solve_setcover_lp(&pool).unwrap();
        assert!((lp.objective - 3.0).abs() < 1e-9);
        assert!(lp.values[0].abs() < 1e-9);
    }

    #[test]
    fn fractional_triangle() {
        // pairs of a triangle cost 1 each, singletons 1: optimum 1.5
        let pool = TourPool {
            tours: vec![tour(&[0, 1], 1.0), tour(&[1, 2], 1.0), tour(&[0, 2], 1.0), tour(&[0], 1.0)],
            universe: vec![0, 1, 2],
        };
        let lp = solve_setcover_lp(&pool).unwrap();
        assert!((lp.objective - 1.5).abs() < 1e-9);
        let dual: f64 = lp.duals.iter().sum();
        assert!((dual - 1.5).abs() < 1e-9);
    }

    #[test]
    fn uncoverable_customer() {
        let pool = TourPool { tours: vec![tour(&[0], 1.0)], universe: vec![0, 1] };
        assert_eq!(solve_setcover_lp(&pool), Err(Error::Uncoverable { customer: 1 }));
    }
}
