//! Instances, the super-depot reduction, and demand preprocessing.
//!
//! Vertex numbering in the input graph G: customers occupy `0..n`, depots
//! occupy `n..n + m`. In the reduced single-depot graph H, customers keep
//! their indices and the super depot `o` is vertex `n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;
use crate::solution::{Solution, Tour, Visit};
use crate::EPS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Variant {
    Unit,
    Splittable,
    Unsplittable,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Unit => "unit",
            Variant::Splittable => "splittable",
            Variant::Unsplittable => "unsplittable",
        }
    }
}

/// `w(from, to) > w(from, via) + w(via, to)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TriangleViolation {
    pub from: usize,
    pub via: usize,
    pub to: usize,
    pub direct: f64,
    pub detour: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricReport {
    pub asymmetric: Vec<(usize, usize)>,
    pub nonzero_diagonal: Vec<usize>,
    pub triangle: Vec<TriangleViolation>,
}

impl MetricReport {
    pub fn is_valid(&self) -> bool {
        self.asymmetric.is_empty() && self.nonzero_diagonal.is_empty() && self.triangle.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.asymmetric.len() + self.nonzero_diagonal.len() + self.triangle.len()
    }

    fn first(&self) -> String {
        if let Some(&(i, j)) = self.asymmetric.first() {
            format!("asymmetric pair ({i}, {j})")
        } else if let Some(i) = self.nonzero_diagonal.first() {
            format!("nonzero diagonal at {i}")
        } else if let Some(t) = self.triangle.first() {
            format!("triangle ({}, {}, {}): {} > {}", t.from, t.via, t.to, t.direct, t.detour)
        } else {
            String::new()
        }
    }
}

fn tol(x: f64) -> f64 {
    EPS * (1.0 + x)
}

/// Checks symmetry, zero diagonal and every triangle inequality.
///
/// Negative or non-finite entries are rejected earlier, when the
/// [`DistanceMatrix`] is built, so they surface as structural errors rather
/// than as metric violations.
pub fn validate_metric(weights: &DistanceMatrix) -> MetricReport {
    let n = weights.size();
    let mut report = MetricReport::default();
    for i in 0..n {
        if weights.get(i, i) > tol(0.0) {
            report.nonzero_diagonal.push(i);
        }
        for j in i + 1..n {
            let (a, b) = (weights.get(i, j), weights.get(j, i));
            if (a - b).abs() > tol(a.max(b)) {
                report.asymmetric.push((i, j));
            }
        }
    }
    for from in 0..n {
        for to in from + 1..n {
            let direct = weights.get(from, to);
            for via in 0..n {
                if via == from || via == to {
                    continue;
                }
                let detour = weights.get(from, via) + weights.get(via, to);
                if direct > detour + tol(direct) {
                    report.triangle.push(TriangleViolation { from, via, to, direct, detour });
                }
            }
        }
    }
    report
}

/// A validated k-MCVRP instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    customer_ids: Vec<String>,
    depot_ids: Vec<String>,
    weights: DistanceMatrix,
    demands: Vec<u64>,
    capacity: u64,
    variant: Variant,
}

impl Instance {
    /// Builds and validates an instance. `weights` covers customers first,
    /// then depots, in the order of the id lists.
    pub fn new(
        customer_ids: Vec<String>,
        depot_ids: Vec<String>,
        weights: DistanceMatrix,
        demands: Vec<u64>,
        capacity: u64,
        variant: Variant,
    ) -> Result<Self> {
        let instance = Self::new_unchecked(customer_ids, depot_ids, weights, demands, capacity, variant)?;
        let report = validate_metric(&instance.weights);
        if !report.is_valid() {
            return Err(Error::NotMetric { count: report.violation_count(), first: report.first() });
        }
        Ok(instance)
    }

    /// Like [`Instance::new`] but skips the cubic metric check. Used for
    /// instances derived from an already validated one.
    fn new_unchecked(
        customer_ids: Vec<String>,
        depot_ids: Vec<String>,
        weights: DistanceMatrix,
        demands: Vec<u64>,
        capacity: u64,
        variant: Variant,
    ) -> Result<Self> {
        let n = customer_ids.len();
        let m = depot_ids.len();
        if n == 0 {
            return Err(Error::NoCustomers);
        }
        if m == 0 {
            return Err(Error::NoDepots);
        }
        if capacity == 0 {
            return Err(Error::ZeroCapacity);
        }
        if weights.size() != n + m {
            return Err(Error::WrongDimension { expected: n + m, actual: weights.size() });
        }
        if demands.len() != n {
            return Err(Error::WrongDimension { expected: n, actual: demands.len() });
        }
        for (customer, &demand) in demands.iter().enumerate() {
            if demand == 0 {
                return Err(Error::ZeroDemand { customer });
            }
            if variant == Variant::Unit && demand != 1 {
                return Err(Error::VariantMismatch { customer, demand });
            }
        }
        Ok(Self { customer_ids, depot_ids, weights, demands, capacity, variant })
    }

    /// Instance with default ids `v0..`, `u0..`.
    pub fn with_default_ids(
        n: usize,
        m: usize,
        weights: DistanceMatrix,
        demands: Vec<u64>,
        capacity: u64,
        variant: Variant,
    ) -> Result<Self> {
        Self::new(
            (0..n).map(|i| format!("v{i}")).collect(),
            (0..m).map(|i| format!("u{i}")).collect(),
            weights,
            demands,
            capacity,
            variant,
        )
    }

    pub fn num_customers(&self) -> usize {
        self.customer_ids.len()
    }

    pub fn num_depots(&self) -> usize {
        self.depot_ids.len()
    }

    pub fn customer_ids(&self) -> &[String] {
        &self.customer_ids
    }

    pub fn depot_ids(&self) -> &[String] {
        &self.depot_ids
    }

    pub fn weights(&self) -> &DistanceMatrix {
        &self.weights
    }

    pub fn demands(&self) -> &[u64] {
        &self.demands
    }

    pub fn demand(&self, customer: usize) -> u64 {
        self.demands[customer]
    }

    pub fn total_demand(&self) -> u64 {
        self.demands.iter().sum()
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Vertex index of depot `depot` in G.
    #[inline]
    pub fn depot_node(&self, depot: usize) -> usize {
        self.customer_ids.len() + depot
    }

    /// Distance between customer `v` and depot `u`.
    #[inline]
    pub fn depot_distance(&self, depot: usize, customer: usize) -> f64 {
        self.weights.get(self.depot_node(depot), customer)
    }

    /// Nearest depot to `customer`, lowest index on ties.
    pub fn nearest_depot(&self, customer: usize) -> (usize, f64) {
        let mut best = (0, self.depot_distance(0, customer));
        for u in 1..self.num_depots() {
            let d = self.depot_distance(u, customer);
            if d < best.1 {
                best = (u, d);
            }
        }
        best
    }

    /// Same instance with a different capacity and/or variant, revalidated.
    pub fn with_parameters(&self, capacity: u64, variant: Variant) -> Result<Self> {
        Self::new_unchecked(
            self.customer_ids.clone(),
            self.depot_ids.clone(),
            self.weights.clone(),
            self.demands.clone(),
            capacity,
            variant,
        )
    }

    /// Sub-instance on the listed customers (in that order) with all depots.
    pub fn restrict(&self, customers: &[usize]) -> Result<Derived> {
        let mut nodes: Vec<usize> = customers.to_vec();
        nodes.extend(self.num_customers()..self.num_customers() + self.num_depots());
        let instance = Self::new_unchecked(
            customers.iter().map(|&v| self.customer_ids[v].clone()).collect(),
            self.depot_ids.clone(),
            self.weights.submatrix(&nodes),
            customers.iter().map(|&v| self.demands[v]).collect(),
            self.capacity,
            self.variant,
        )?;
        Ok(Derived { instance, origin: customers.to_vec() })
    }

    /// Replaces customer `v` by `parts.len()` co-located copies with the
    /// given demands: zero distance between copies, identical distances to
    /// every other vertex.
    fn split_customers(&self, parts: &[Vec<u64>], variant: Variant) -> Result<Derived> {
        let mut origin = Vec::new();
        let mut demands = Vec::new();
        let mut ids = Vec::new();
        for (v, pieces) in parts.iter().enumerate() {
            for (j, &d) in pieces.iter().enumerate() {
                origin.push(v);
                demands.push(d);
                ids.push(if pieces.len() == 1 {
                    self.customer_ids[v].clone()
                } else {
                    format!("{}#{}", self.customer_ids[v], j)
                });
            }
        }
        let n = self.num_customers();
        let new_n = origin.len();
        let node = |i: usize| if i < new_n { origin[i] } else { n + (i - new_n) };
        let weights = DistanceMatrix::from_fn(new_n + self.num_depots(), |i, j| {
            if i == j {
                0.0
            } else {
                self.weights.get(node(i), node(j))
            }
        });
        let instance = Self::new_unchecked(ids, self.depot_ids.clone(), weights, demands, self.capacity, variant)?;
        Ok(Derived { instance, origin })
    }
}

/// An instance derived from another one by selecting, splitting or
/// duplicating customers; `origin[i]` is the original customer behind
/// customer `i` of the derived instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Derived {
    pub instance: Instance,
    pub origin: Vec<usize>,
}

impl Derived {
    /// Maps a solution of the derived instance back onto `original`.
    /// Repeated visits to the same original customer inside one tour are
    /// merged into the first one (a shortcut, so the weight cannot grow).
    pub fn lift(&self, original: &Instance, solution: &Solution) -> Solution {
        let tours = solution
            .tours
            .iter()
            .map(|tour| {
                let mut visits: Vec<Visit> = Vec::with_capacity(tour.visits.len());
                for visit in &tour.visits {
                    let customer = self.origin[visit.customer];
                    match visits.iter_mut().find(|v| v.customer == customer) {
                        Some(existing) => existing.amount += visit.amount,
                        None => visits.push(Visit { customer, amount: visit.amount }),
                    }
                }
                Tour::new(original, tour.depot, visits)
            })
            .collect();
        Solution::new(tours)
    }
}

/// The single-depot graph H obtained by merging all depots into `o`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperDepotView {
    reduced: DistanceMatrix,
    anchor: Vec<usize>,
    dummy: Vec<bool>,
    dummy_edges: Vec<(usize, usize)>,
    delta: f64,
    demands: Vec<u64>,
    capacity: u64,
}

impl SuperDepotView {
    pub fn num_customers(&self) -> usize {
        self.anchor.len()
    }

    /// Index of `o` in H.
    pub fn depot(&self) -> usize {
        self.anchor.len()
    }

    /// The reduced weights `c` on customers plus `o`.
    pub fn weights(&self) -> &DistanceMatrix {
        &self.reduced
    }

    pub fn c(&self, a: usize, b: usize) -> f64 {
        self.reduced.get(a, b)
    }

    /// `c(o, v)`.
    pub fn depot_distance(&self, customer: usize) -> f64 {
        self.reduced.get(self.depot(), customer)
    }

    /// Depot realising `c(o, v)`, lowest index on ties.
    pub fn anchor(&self, customer: usize) -> usize {
        self.anchor[customer]
    }

    pub fn is_dummy(&self, a: usize, b: usize) -> bool {
        let n = self.num_customers();
        a < n && b < n && self.dummy[a * n + b]
    }

    /// Customer pairs routed through the depot, `(a, b)` with `a < b`.
    pub fn dummy_edges(&self) -> &[(usize, usize)] {
        &self.dummy_edges
    }

    /// `Δ = Σ_v d(v) c(o, v)`.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `Σ d(v) c(o, v)` over the listed customers.
    pub fn delta_of(&self, customers: &[usize]) -> f64 {
        customers.iter().map(|&v| self.demands[v] as f64 * self.depot_distance(v)).sum()
    }

    pub fn demands(&self) -> &[u64] {
        &self.demands
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }
}

pub fn build_super_depot(instance: &Instance) -> SuperDepotView {
    let n = instance.num_customers();
    let w = instance.weights();
    let mut anchor = Vec::with_capacity(n);
    let mut reduced = DistanceMatrix::zeros(n + 1);
    for v in 0..n {
        let (u, d) = instance.nearest_depot(v);
        anchor.push(u);
        reduced.set_sym(n, v, d);
    }
    let mut dummy = vec![false; n * n];
    let mut dummy_edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let direct = w.get(a, b);
            let detour = reduced.get(n, a) + reduced.get(n, b);
            if detour < direct - tol(direct) {
                dummy[a * n + b] = true;
                dummy[b * n + a] = true;
                dummy_edges.push((a, b));
                reduced.set_sym(a, b, detour);
            } else {
                reduced.set_sym(a, b, direct);
            }
        }
    }
    let delta = (0..n).map(|v| instance.demand(v) as f64 * reduced.get(n, v)).sum();
    SuperDepotView {
        reduced,
        anchor,
        dummy,
        dummy_edges,
        delta,
        demands: instance.demands().to_vec(),
        capacity: instance.capacity(),
    }
}

/// Output of [`preprocess_demands`].
#[derive(Debug, Clone, PartialEq)]
pub struct Preprocessed {
    /// Remaining instance with every demand at most `k`; `None` when the
    /// trivial tours already serve all demand.
    pub reduced: Option<Derived>,
    /// Tours fixed by the reduction, on the original customer indices.
    pub trivial_tours: Vec<Tour>,
}

impl Preprocessed {
    pub fn trivial_cost(&self) -> f64 {
        self.trivial_tours.iter().map(|t| t.weight).sum()
    }

    /// Combines a solution of the reduced instance with the trivial tours.
    pub fn lift(&self, original: &Instance, solution: Option<&Solution>) -> Solution {
        let mut out = match (&self.reduced, solution) {
            (Some(derived), Some(sol)) => derived.lift(original, sol),
            _ => Solution::default(),
        };
        out.extend(self.trivial_tours.iter().cloned());
        out
    }
}

/// Brings every demand down to at most `k`.
///
/// Unsplittable instances are only checked. For splittable ones, a customer
/// with `d(v) > m(n-1)(k-1)` first receives `⌈(d(v) - m(n-1)(k-1)) / k⌉`
/// full trivial tours from its nearest depot (the last one possibly
/// partial), and any residual demand above `k` is then spread over
/// co-located copies of demand at most `k`.
pub fn preprocess_demands(instance: &Instance) -> Result<Preprocessed> {
    let k = instance.capacity();
    let n = instance.num_customers();
    match instance.variant() {
        Variant::Unit => {
            let derived = instance.restrict(&(0..n).collect::<Vec<_>>())?;
            return Ok(Preprocessed { reduced: Some(derived), trivial_tours: Vec::new() });
        }
        Variant::Unsplittable => {
            for (customer, &demand) in instance.demands().iter().enumerate() {
                if demand > k {
                    return Err(Error::Infeasible { customer, demand, capacity: k });
                }
            }
            let derived = instance.restrict(&(0..n).collect::<Vec<_>>())?;
            return Ok(Preprocessed { reduced: Some(derived), trivial_tours: Vec::new() });
        }
        Variant::Splittable => {}
    }
    let m = instance.num_depots() as u64;
    let threshold = m * (n as u64 - 1) * (k - 1);
    let mut trivial_tours = Vec::new();
    let mut parts: Vec<Vec<u64>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut residual = instance.demand(v);
        if residual > threshold {
            let count = (residual - threshold).div_ceil(k);
            let (depot, _) = instance.nearest_depot(v);
            for _ in 0..count {
                let amount = residual.min(k);
                residual -= amount;
                trivial_tours.push(Tour::new(instance, depot, vec![Visit { customer: v, amount }]));
            }
        }
        let mut pieces = Vec::new();
        while residual > 0 {
            let amount = residual.min(k);
            pieces.push(amount);
            residual -= amount;
        }
        parts.push(pieces);
    }
    let reduced = if parts.iter().all(|p| p.is_empty()) {
        None
    } else {
        Some(instance.split_customers(&parts, Variant::Splittable)?)
    };
    Ok(Preprocessed { reduced, trivial_tours })
}

/// Replaces every customer by `d(v)` co-located unit-demand customers.
///
/// Meant for splittable instances with small fixed `k` after
/// [`preprocess_demands`]; any positive demand is accepted.
pub fn unitize(instance: &Instance) -> Result<Derived> {
    let parts: Vec<Vec<u64>> = instance.demands().iter().map(|&d| vec![1; d as usize]).collect();
    instance.split_customers(&parts, Variant::Unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn two_depot_example() -> Instance {
        // customers v1, v2 then depots u1, u2
        let mut w = DistanceMatrix::zeros(4);
        w.set_sym(2, 0, 1.0);
        w.set_sym(3, 0, 4.0);
        w.set_sym(2, 1, 6.0);
        w.set_sym(3, 1, 2.0);
        // 7.0 would break the triangle v1 u2 v2 (4 + 2); 6.0 keeps the
        // same reduced weights
        w.set_sym(0, 1, 6.0);
        w.set_sym(2, 3, 5.0);
        Instance::with_default_ids(2, 2, w, vec![1, 1], 2, Variant::Unit).unwrap()
    }

    #[test]
    fn two_points_are_metric() {
        let w = DistanceMatrix::from_rows(&[vec![0.0, 5.0], vec![5.0, 0.0]]).unwrap();
        assert!(validate_metric(&w).is_valid());
    }

    #[test]
    fn reports_violated_triple() {
        // a = 0, b = 1, c = 2
        let w = DistanceMatrix::from_rows(&[vec![0.0, 5.0, 2.0], vec![5.0, 0.0, 2.0], vec![2.0, 2.0, 0.0]]).unwrap();
        let report = validate_metric(&w);
        assert_eq!(report.triangle.len(), 1);
        let t = report.triangle[0];
        assert_eq!((t.from, t.via, t.to), (0, 2, 1));
        assert_eq!(t.direct, 5.0);
        assert_eq!(t.detour, 4.0);
    }

    #[test]
    fn structural_errors_are_not_metric_violations() {
        assert!(matches!(DistanceMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0]]), Err(Error::NotSquare { .. })));
        assert!(matches!(DistanceMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]), Err(Error::BadWeight { .. })));
    }

    #[test]
    fn asymmetry_and_diagonal_are_reported() {
        let w = DistanceMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 0.0]]).unwrap();
        let report = validate_metric(&w);
        assert_eq!(report.nonzero_diagonal, vec![0]);
        assert_eq!(report.asymmetric, vec![(0, 1)]);
    }

    #[test]
    fn super_depot_worked_example() {
        let inst = two_depot_example();
        let view = build_super_depot(&inst);
        assert_eq!(view.depot_distance(0), 1.0);
        assert_eq!(view.depot_distance(1), 2.0);
        assert_eq!(view.c(0, 1), 3.0);
        assert_eq!(view.dummy_edges(), &[(0, 1)]);
        assert_eq!(view.delta(), 3.0);
        assert_eq!(view.anchor(0), 0);
        assert_eq!(view.anchor(1), 1);
    }

    #[test]
    fn single_depot_has_no_dummy_edges() {
        // collinear points make the triangle inequality tight
        let xs: [f64; 4] = [0.0, 1.0, 3.0, 2.0];
        let w = DistanceMatrix::from_fn(4, |i, j| (xs[i] - xs[j]).abs());
        let inst = Instance::with_default_ids(3, 1, w, vec![1, 1, 1], 2, Variant::Unit).unwrap();
        let view = build_super_depot(&inst);
        assert!(view.dummy_edges().is_empty());
        for v in 0..3 {
            assert_eq!(view.depot_distance(v), inst.depot_distance(0, v));
        }
    }

    #[test]
    fn anchor_ties_pick_lowest_depot() {
        let w = DistanceMatrix::from_rows(&[vec![0.0, 1.0, 1.0], vec![1.0, 0.0, 2.0], vec![1.0, 2.0, 0.0]]).unwrap();
        let inst = Instance::with_default_ids(1, 2, w, vec![1], 1, Variant::Unit).unwrap();
        assert_eq!(build_super_depot(&inst).anchor(0), 0);
    }

    #[test]
    fn instance_construction_errors() {
        let w = DistanceMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(
            Instance::with_default_ids(1, 1, w.clone(), vec![2], 3, Variant::Unit),
            Err(Error::VariantMismatch { customer: 0, demand: 2 })
        );
        assert_eq!(Instance::with_default_ids(1, 1, w.clone(), vec![1], 0, Variant::Unit), Err(Error::ZeroCapacity));
        assert_eq!(
            Instance::with_default_ids(1, 1, w, vec![0], 1, Variant::Splittable),
            Err(Error::ZeroDemand { customer: 0 })
        );
    }

    #[test]
    fn preprocess_identity_when_demands_fit() {
        let inst = two_depot_example().with_parameters(2, Variant::Splittable).unwrap();
        let pre = preprocess_demands(&inst).unwrap();
        assert!(pre.trivial_tours.is_empty());
        let reduced = pre.reduced.unwrap();
        assert_eq!(reduced.instance.demands(), inst.demands());
        assert_eq!(reduced.origin, vec![0, 1]);
    }

    #[test]
    fn preprocess_splittable_large_demand() {
        // m = 1, n = 2, k = 3, d(v0) = 9, nearest depot at distance 2
        let w = DistanceMatrix::from_rows(&[vec![0.0, 3.0, 2.0], vec![3.0, 0.0, 1.5], vec![2.0, 1.5, 0.0]]).unwrap();
        let inst = Instance::with_default_ids(2, 1, w, vec![9, 1], 3, Variant::Splittable).unwrap();
        let pre = preprocess_demands(&inst).unwrap();
        assert_eq!(pre.trivial_tours.len(), 3);
        let delivered: u64 = pre.trivial_tours.iter().map(|t| t.load()).sum();
        assert_eq!(delivered, 9);
        for t in &pre.trivial_tours {
            assert_eq!(t.weight, 4.0);
        }
        let reduced = pre.reduced.unwrap();
        assert_eq!(reduced.instance.num_customers(), 1);
        assert_eq!(reduced.origin, vec![1]);
    }

    #[test]
    fn preprocess_splits_residual_above_capacity() {
        // m = 2, n = 2, k = 2: threshold 2*1*1 = 2, d = 5 -> 2 trivial tours
        // (ceil(3/2)), residual 1
        let inst = two_depot_example();
        let inst = Instance::new(
            inst.customer_ids().to_vec(),
            inst.depot_ids().to_vec(),
            inst.weights().clone(),
            vec![5, 2],
            2,
            Variant::Splittable,
        )
        .unwrap();
        let pre = preprocess_demands(&inst).unwrap();
        assert_eq!(pre.trivial_tours.len(), 2);
        let reduced = pre.reduced.unwrap();
        assert_eq!(reduced.instance.demands(), &[1, 2]);

        // threshold 0 when k = 1: everything becomes trivial tours
        let k1 = inst.with_parameters(1, Variant::Splittable).unwrap();
        let pre = preprocess_demands(&k1).unwrap();
        assert!(pre.reduced.is_none());
        assert_eq!(pre.trivial_tours.len(), 7);
    }

    #[test]
    fn preprocess_unsplittable_infeasible() {
        let inst = two_depot_example();
        let inst = Instance::new(
            inst.customer_ids().to_vec(),
            inst.depot_ids().to_vec(),
            inst.weights().clone(),
            vec![3, 1],
            2,
            Variant::Unsplittable,
        )
        .unwrap();
        assert_eq!(preprocess_demands(&inst), Err(Error::Infeasible { customer: 0, demand: 3, capacity: 2 }));
    }

    #[test]
    fn unitize_creates_colocated_copies() {
        let inst = two_depot_example();
        let inst = Instance::new(
            inst.customer_ids().to_vec(),
            inst.depot_ids().to_vec(),
            inst.weights().clone(),
            vec![3, 1],
            3,
            Variant::Splittable,
        )
        .unwrap();
        let unit = unitize(&inst).unwrap();
        assert_eq!(unit.instance.num_customers(), 4);
        assert_eq!(unit.origin, vec![0, 0, 0, 1]);
        assert_eq!(unit.instance.variant(), Variant::Unit);
        let w = unit.instance.weights();
        assert_eq!(w.get(0, 1), 0.0);
        assert_eq!(w.get(1, 2), 0.0);
        for c in 0..3 {
            assert_eq!(w.get(c, 4), 1.0);
            assert_eq!(w.get(c, 5), 4.0);
            assert_eq!(w.get(c, 3), 6.0);
        }
        assert!(validate_metric(w).is_valid());
    }

    #[test]
    fn unitize_is_identity_on_unit_demands() {
        let inst = two_depot_example();
        let unit = unitize(&inst).unwrap();
        assert_eq!(unit.instance.weights(), inst.weights());
        assert_eq!(unit.origin, vec![0, 1]);
    }
}
