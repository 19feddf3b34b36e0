//! Instance and solution files.
//!
//! Instance schema:
//!
//! ```json
//! {
//!   "customers": ["v0", "v1"],
//!   "depots": ["u0"],
//!   "weights": [[0, 1, 2], [1, 0, 2], [2, 2, 0]],
//!   "demands": {"v0": 1, "v1": 2},
//!   "capacity": 3,
//!   "variant": "unsplittable"
//! }
//! ```
//!
//! `weights` is the full symmetric matrix over customers then depots, in
//! list order. `variant` is one of `unit`, `splittable`, `unsplittable`.

use std::collections::BTreeMap;
use std::path::Path;

use mdvrp_core::{DistanceMatrix, Instance, Solution, Tour, Variant, Visit};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub customers: Vec<String>,
    pub depots: Vec<String>,
    pub weights: Vec<Vec<f64>>,
    pub demands: BTreeMap<String, u64>,
    pub capacity: u64,
    pub variant: Variant,
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        Self {
            customers: instance.customer_ids().to_vec(),
            depots: instance.depot_ids().to_vec(),
            weights: instance.weights().rows(),
            demands: instance.customer_ids().iter().cloned().zip(instance.demands().iter().copied()).collect(),
            capacity: instance.capacity(),
            variant: instance.variant(),
        }
    }

    pub fn into_instance(self) -> Result<Instance, CliError> {
        let mut demands = Vec::with_capacity(self.customers.len());
        for id in &self.customers {
            match self.demands.get(id) {
                Some(&d) => demands.push(d),
                None => return Err(CliError::Schema(format!("no demand for customer {id:?}"))),
            }
        }
        if let Some(extra) = self.demands.keys().find(|k| !self.customers.contains(k)) {
            return Err(CliError::Schema(format!("demand given for unknown customer {extra:?}")));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = self.customers.iter().chain(&self.depots).find(|id| !seen.insert(id.as_str())) {
            return Err(CliError::Schema(format!("duplicate id {dup:?}")));
        }
        let weights = DistanceMatrix::from_rows(&self.weights)?;
        Ok(Instance::new(self.customers, self.depots, weights, demands, self.capacity, self.variant)?)
    }
}

pub fn parse_instance_str(text: &str) -> Result<Instance, CliError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    file.into_instance()
}

pub fn parse_instance(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse_instance_str(&text)
}

/// Compact JSON with a fixed field order; the basis of the digest.
pub fn canonical_json(instance: &Instance) -> String {
    serde_json::to_string(&InstanceFile::from_instance(instance)).expect("instance serializes")
}

pub fn instance_digest(instance: &Instance) -> String {
    hex::encode(Sha256::digest(canonical_json(instance).as_bytes()))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source })
}

pub fn write_instance(path: &Path, instance: &Instance) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&InstanceFile::from_instance(instance))?;
    write_text(path, &(text + "\n"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VisitOut {
    pub customer: String,
    pub amount: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TourOut {
    pub depot: String,
    pub visits: Vec<VisitOut>,
    pub weight: f64,
}

/// A solution with ids instead of indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionOut {
    pub tours: Vec<TourOut>,
    pub total_weight: f64,
}

impl SolutionOut {
    pub fn from_solution(instance: &Instance, solution: &Solution) -> Self {
        let tours = solution
            .tours
            .iter()
            .map(|t| TourOut {
                depot: instance.depot_ids()[t.depot].clone(),
                visits: t
                    .visits
                    .iter()
                    .map(|v| VisitOut { customer: instance.customer_ids()[v.customer].clone(), amount: v.amount })
                    .collect(),
                weight: t.weight,
            })
            .collect();
        Self { tours, total_weight: solution.total_weight }
    }

    /// Resolves ids against `instance`; weights are kept as stated so
    /// validation can compare them.
    pub fn to_solution(&self, instance: &Instance) -> Result<Solution, CliError> {
        let depot = |id: &str| {
            instance
                .depot_ids()
                .iter()
                .position(|d| d == id)
                .ok_or_else(|| CliError::Schema(format!("unknown depot {id:?}")))
        };
        let customer = |id: &str| {
            instance
                .customer_ids()
                .iter()
                .position(|c| c == id)
                .ok_or_else(|| CliError::Schema(format!("unknown customer {id:?}")))
        };
        let mut tours = Vec::with_capacity(self.tours.len());
        for t in &self.tours {
            let visits = t
                .visits
                .iter()
                .map(|v| Ok(Visit::new(customer(&v.customer)?, v.amount)))
                .collect::<Result<_, CliError>>()?;
            tours.push(Tour { depot: depot(&t.depot)?, visits, weight: t.weight });
        }
        Ok(Solution { tours, total_weight: self.total_weight })
    }
}
