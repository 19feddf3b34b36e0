//! Lower bounds, the exact oracle, theoretical ratios and the portfolio.

mod exact;
mod portfolio;
mod ratio;

pub use exact::{exact_opt_small, EXACT_OPT_LIMIT};
pub use portfolio::{
    candidate, portfolio_solve, run_algorithm, Algorithm, AlgorithmRun, PortfolioOutcome, SolveOptions,
};
pub use ratio::{
    default_gamma, fixed_k_ratio, g, g_prime, harmonic, harmonic_table, ratio_f_eps, tradeoff_ratio, x0, FEps,
    RatioReport, Regime, Witness, UNSPLITTABLE_DELTA,
};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::instance::{Instance, SuperDepotView};
use crate::lp::POOL_BUDGET;
use crate::tsp::{exact_tsp_small, mst, EXACT_TSP_LIMIT};

/// Size caps for the exact oracles and the tour pools.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OracleBudget {
    /// Largest vertex count for exact TSP in H (customers plus `o`).
    pub tsp_vertices: usize,
    /// Largest customer count (after unitizing) for the exact optimum.
    pub opt_customers: usize,
    /// Largest enumerated pool.
    pub pool: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { tsp_vertices: EXACT_TSP_LIMIT, opt_customers: EXACT_OPT_LIMIT, pool: POOL_BUDGET }
    }
}

/// One algorithm's entry in a certificate.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Candidate {
    pub algorithm: String,
    pub cost: Option<f64>,
    pub valid: bool,
    pub guarantee_expr: String,
    pub guarantee_value: Option<f64>,
    /// `cost ≤ guarantee_value` up to tolerance.
    pub holds: bool,
    /// A-priori worst-case ratio of the algorithm.
    pub theoretical_ratio: Option<f64>,
    /// Named quantities entering the guarantee.
    pub terms: BTreeMap<String, f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    /// `(2/k)Δ`.
    pub delta_bound: f64,
    /// `c(T*)` over all customers and `o`.
    pub mst_bound: f64,
    /// `c(C*)` in H when small enough.
    pub tsp_exact: Option<f64>,
    pub exact_opt: Option<f64>,
    pub candidates: Vec<Candidate>,
}

impl Certificate {
    /// Whether the lower bounds are mutually consistent.
    pub fn chain_holds(&self) -> bool {
        let le = crate::approx_le;
        let mut ok = true;
        if let Some(opt) = self.exact_opt {
            ok &= le(self.delta_bound, opt) && le(self.mst_bound, opt);
        }
        if let Some(tsp) = self.tsp_exact {
            ok &= le(self.mst_bound, tsp);
            if let Some(opt) = self.exact_opt {
                ok &= le(tsp, opt);
            }
        }
        ok
    }
}

/// `(2/k)Δ`, `c(T*)`, and `c(C*)` / OPT when the budget allows.
pub fn lower_bounds(instance: &Instance, view: &SuperDepotView, budget: &OracleBudget) -> Certificate {
    let n = view.num_customers();
    let all: Vec<usize> = (0..=n).collect();
    let mst_bound = mst(view.weights(), &all).map_or(0.0, |t| t.cost);
    let tsp_exact = if n < budget.tsp_vertices.min(EXACT_TSP_LIMIT) {
        exact_tsp_small(view.weights(), &all).ok().map(|c| c.cost)
    } else {
        None
    };
    let exact_opt = exact_opt_small(instance, budget.opt_customers).ok().map(|s| s.total_weight);
    Certificate {
        delta_bound: 2.0 / instance.capacity() as f64 * view.delta(),
        mst_bound,
        tsp_exact,
        exact_opt,
        candidates: Vec::new(),
    }
}
