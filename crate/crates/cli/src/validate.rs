//! The `validate` subcommand: metric check of an instance file and,
//! optionally, feasibility of a solution against it.

use mdvrp_core::instance::{validate_metric, MetricReport};
use mdvrp_core::solution::{validate_solution, FeasibilityReport};
use mdvrp_core::DistanceMatrix;
use serde::Serialize;

use crate::error::{exit, CliError};
use crate::io::{instance_digest, InstanceFile, SolutionOut};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub instance_digest: Option<String>,
    pub metric: MetricReport,
    pub feasibility: Option<FeasibilityReport>,
    pub valid: bool,
    pub error: Option<String>,
    pub exit_code: i32,
}

/// `solution` may be a bare solution or a whole run report.
pub fn validate(instance_text: &str, solution_text: Option<&str>) -> Result<ValidationReport, CliError> {
    let file: InstanceFile = serde_json::from_str(instance_text)?;
    let metric = validate_metric(&DistanceMatrix::from_rows(&file.weights)?);
    if !metric.is_valid() {
        return Ok(ValidationReport {
            instance_digest: None,
            error: Some(format!("{} metric violation(s)", metric.violation_count())),
            metric,
            feasibility: None,
            valid: false,
            exit_code: exit::INVALID_INPUT,
        });
    }
    let instance = file.into_instance()?;
    let feasibility = match solution_text {
        None => None,
        Some(text) => {
            let mut value: serde_json::Value = serde_json::from_str(text)?;
            if let Some(inner) = value.get_mut("solution") {
                value = inner.take();
            }
            let out: SolutionOut = serde_json::from_value(value)?;
            Some(validate_solution(&instance, &out.to_solution(&instance)?))
        }
    };
    let valid = feasibility.as_ref().is_none_or(|f| f.is_feasible());
    Ok(ValidationReport {
        instance_digest: Some(instance_digest(&instance)),
        metric,
        feasibility,
        valid,
        error: (!valid).then(|| "solution is infeasible".to_string()),
        exit_code: if valid { exit::OK } else { exit::INFEASIBLE },
    })
}
