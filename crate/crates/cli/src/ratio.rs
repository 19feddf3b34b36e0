//! The `ratio` subcommand.

use mdvrp_core::bounds::{ratio_f_eps, tradeoff_ratio, FEps, RatioReport, Regime};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioOutput {
    #[serde(flatten)]
    pub report: RatioReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_eps: Option<FEps>,
}

/// Regime defaults to `fixed-k` when `k` is given and to
/// `splittable-general` otherwise.
pub fn ratio(k: Option<u64>, regime: Option<Regime>, eps: Option<f64>) -> Result<RatioOutput, CliError> {
    let regime = regime.unwrap_or(if k.is_some() { Regime::FixedK } else { Regime::SplittableGeneral });
    let report = tradeoff_ratio(k, regime)?;
    let f_eps = eps.map(ratio_f_eps).transpose()?;
    Ok(RatioOutput { report, f_eps })
}
