//! Tours, solutions and the feasibility check.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::instance::{Instance, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Visit {
    pub customer: usize,
    pub amount: u64,
}

impl Visit {
    pub fn new(customer: usize, amount: u64) -> Self {
        Self { customer, amount }
    }
}

/// A closed walk `depot → visits → depot` delivering `amount` to each
/// visited customer.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tour {
    pub depot: usize,
    pub visits: Vec<Visit>,
    pub weight: f64,
}

impl Tour {
    /// Builds a tour and computes its weight in `instance`.
    pub fn new(instance: &Instance, depot: usize, visits: Vec<Visit>) -> Self {
        let weight = walk_weight(instance, depot, &visits);
        Self { depot, visits, weight }
    }

    /// Tour delivering the full demand of each listed customer.
    pub fn serving(instance: &Instance, depot: usize, customers: &[usize]) -> Self {
        let visits = customers.iter().map(|&v| Visit::new(v, instance.demand(v))).collect();
        Self::new(instance, depot, visits)
    }

    pub fn load(&self) -> u64 {
        self.visits.iter().map(|v| v.amount).sum()
    }

    pub fn customers(&self) -> impl Iterator<Item = usize> + '_ {
        self.visits.iter().map(|v| v.customer)
    }

    /// Vertex sequence in G, depot at both ends.
    pub fn nodes(&self, instance: &Instance) -> Vec<usize> {
        let depot = instance.depot_node(self.depot);
        let mut nodes = vec![depot];
        nodes.extend(self.customers());
        nodes.push(depot);
        nodes
    }
}

fn walk_weight(instance: &Instance, depot: usize, visits: &[Visit]) -> f64 {
    let w = instance.weights();
    let d = instance.depot_node(depot);
    let mut prev = d;
    let mut total = 0.0;
    for v in visits {
        total += w.get(prev, v.customer);
        prev = v.customer;
    }
    if prev != d {
        total += w.get(prev, d);
    }
    total
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Solution {
    pub tours: Vec<Tour>,
    pub total_weight: f64,
}

impl Solution {
    pub fn new(tours: Vec<Tour>) -> Self {
        let total_weight = tours.iter().map(|t| t.weight).sum();
        Self { tours, total_weight }
    }

    pub fn extend(&mut self, tours: impl IntoIterator<Item = Tour>) {
        for t in tours {
            self.total_weight += t.weight;
            self.tours.push(t);
        }
    }

    pub fn merge(mut self, other: Solution) -> Self {
        self.extend(other.tours);
        self
    }

    /// Number of tours with at least one visit.
    pub fn len(&self) -> usize {
        self.tours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tours.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum Violation {
    Capacity { tour: usize, load: u64, capacity: u64 },
    Coverage { customer: usize, delivered: u64, demand: u64 },
    ZeroDelivery { tour: usize, customer: usize },
    UnknownCustomer { tour: usize, customer: usize },
    SplitDelivery { customer: usize, tours: Vec<usize> },
    UnknownDepot { tour: usize, depot: usize },
    EmptyTour { tour: usize },
    WeightMismatch { tour: usize, stated: f64, recomputed: f64 },
    TotalMismatch { stated: f64, recomputed: f64 },
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FeasibilityReport {
    pub violations: Vec<Violation>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

fn weight_matches(stated: f64, recomputed: f64) -> bool {
    (stated - recomputed).abs() <= crate::EPS * (1.0 + recomputed.abs())
}

/// Checks every feasibility condition and lists all violations found.
pub fn validate_solution(instance: &Instance, solution: &Solution) -> FeasibilityReport {
    let n = instance.num_customers();
    let k = instance.capacity();
    let mut violations = Vec::new();
    let mut delivered = vec![0u64; n];
    let mut tours_of: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut total = 0.0;

    for (index, tour) in solution.tours.iter().enumerate() {
        if tour.depot >= instance.num_depots() {
            violations.push(Violation::UnknownDepot { tour: index, depot: tour.depot });
            continue;
        }
        if tour.visits.is_empty() {
            violations.push(Violation::EmptyTour { tour: index });
        }
        let load = tour.load();
        if load > k {
            violations.push(Violation::Capacity { tour: index, load, capacity: k });
        }
        let mut known = true;
        for visit in &tour.visits {
            if visit.customer >= n {
                violations.push(Violation::UnknownCustomer { tour: index, customer: visit.customer });
                known = false;
                continue;
            }
            if visit.amount == 0 {
                violations.push(Violation::ZeroDelivery { tour: index, customer: visit.customer });
            }
            delivered[visit.customer] += visit.amount;
            let list = tours_of.entry(visit.customer).or_default();
            if list.last() != Some(&index) {
                list.push(index);
            }
        }
        if known {
            let recomputed = walk_weight(instance, tour.depot, &tour.visits);
            if !weight_matches(tour.weight, recomputed) {
                violations.push(Violation::WeightMismatch { tour: index, stated: tour.weight, recomputed });
            }
        }
        total += tour.weight;
    }

    for (customer, &got) in delivered.iter().enumerate() {
        let demand = instance.demand(customer);
        if got != demand {
            violations.push(Violation::Coverage { customer, delivered: got, demand });
        }
    }
    if instance.variant() == Variant::Unsplittable {
        for (&customer, tours) in &tours_of {
            if tours.len() > 1 {
                violations.push(Violation::SplitDelivery { customer, tours: tours.clone() });
            }
        }
    }
    if !weight_matches(solution.total_weight, total) {
        violations.push(Violation::TotalMismatch { stated: solution.total_weight, recomputed: total });
    }
    FeasibilityReport { violations }
}
