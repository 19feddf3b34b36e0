//! Approximation algorithms for the multidepot capacitated vehicle routing
//! problem (k-MCVRP) on metric graphs.
//!
//! The crate covers the three demand variants (unit, splittable,
//! unsplittable) and is organised bottom-up:
//!
//!  - [`instance`]: instances, metric validation, the super-depot reduction
//!    and the demand-normalising preprocessing steps.
//!  - [`solution`]: tours, solutions and feasibility checking.
//!  - [`tsp`]: spanning trees, exact perfect matching, Christofides cycles,
//!    Held–Karp for small vertex sets and shortcutting.
//!  - [`partition`]: iterated tour partitioning (ITP/UITP), the multidepot
//!    cycle partition with open-walk repair, and the refined tree partition.
//!  - [`lp`]: tour pools, a dense simplex for the set-cover LP, randomized
//!    rounding with conditional-expectation derandomization, and the two
//!    LP-based partition algorithms.
//!  - [`bounds`]: lower bounds, the exact small-instance oracle, the
//!    approximation-ratio calculator and the best-of portfolio.
//!
//! Every algorithm returns, next to its solution, the quantities needed to
//! evaluate its cost guarantee on the instance at hand, so each run can be
//! checked against a numeric certificate.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod instance;
pub mod lp;
pub mod matrix;
pub mod partition;
pub mod rng;
pub mod solution;
pub mod tsp;

pub use error::{Error, Result};
pub use instance::{Instance, SuperDepotView, Variant};
pub use matrix::DistanceMatrix;
pub use solution::{Solution, Tour, Visit};

/// Absolute tolerance used for every floating-point comparison, scaled by
/// `1 + magnitude` at the call site.
pub const EPS: f64 = 1e-9;

/// `a <= b` up to [`EPS`] scaled by the magnitude of the operands.
#[inline]
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + EPS * (1.0 + libm::fabs(a).max(libm::fabs(b)))
}
