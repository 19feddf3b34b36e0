//! Run reports. Field order is fixed so that two runs with the same seed
//! and knobs serialize byte-identically once `timing` is dropped.

use mdvrp_core::bounds::{Candidate, OracleBudget};
use mdvrp_core::Variant;
use serde::{Deserialize, Serialize};

use crate::io::SolutionOut;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Knobs {
    pub algo: String,
    pub k: u64,
    pub variant: Variant,
    pub gamma: Option<f64>,
    pub delta: f64,
    pub derandomize: bool,
    pub oracle_budget: OracleBudget,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportCertificate {
    pub delta_bound: f64,
    pub mst_bound: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tsp_exact: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_opt: Option<f64>,
    /// Guarantee of the selected algorithm.
    pub guarantee_expr: Option<String>,
    pub guarantee_value: Option<f64>,
    pub theoretical_ratio: Option<f64>,
    /// `cost / exact_opt` when the optimum is known.
    pub empirical_ratio: Option<f64>,
    /// Lower bounds consistent with each other and with OPT.
    pub chain_holds: bool,
    /// Every produced cost is at least OPT (vacuous without OPT).
    pub opt_holds: bool,
    pub candidates: Vec<Candidate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance_digest: String,
    pub algorithm: Option<String>,
    pub cost: Option<f64>,
    pub certificate: ReportCertificate,
    /// Selected solution passes the feasibility check.
    pub valid: bool,
    /// Every certificate inequality of every produced candidate holds.
    pub holds: bool,
    pub seed: u64,
    pub knobs: Knobs,
    pub solution: Option<SolutionOut>,
    pub timing: Timing,
    pub error: Option<ErrorRecord>,
    pub exit_code: i32,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// JSON with the timing fields removed.
    pub fn to_json_untimed(&self) -> String {
        strip_timing(&self.to_json())
    }
}

/// Drops every `timing` member from a JSON document (top level or one
/// report per line).
pub fn strip_timing(text: &str) -> String {
    text.lines()
        .map(|line| match serde_json::from_str::<serde_json::Value>(line) {
            Ok(mut v) => {
                remove_timing(&mut v);
                v.to_string()
            }
            Err(_) => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn remove_timing(v: &mut serde_json::Value) {
    if let Some(map) = v.as_object_mut() {
        map.remove("timing");
        map.values_mut().for_each(remove_timing);
    }
}

/// Failure record for errors raised before a report can be built.
pub fn failure_record(kind: &str, message: &str, exit_code: i32) -> String {
    serde_json::json!({ "error": { "kind": kind, "message": message }, "exit_code": exit_code }).to_string()
}
