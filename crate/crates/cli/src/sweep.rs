//! Parallel sweeps over generated instances.

use mdvrp_core::rng::CounterRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::exit;
use crate::generate::{generate_instance, GenSpec};
use crate::report::{failure_record, Report};
use crate::run::{solve, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub count: usize,
    /// `spec.seed` is the base seed; instance `i` uses `split(i)` of it.
    pub spec: GenSpec,
    pub run: RunConfig,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub count: usize,
    pub solved: usize,
    pub valid: usize,
    pub holds: usize,
    pub with_opt: usize,
    pub max_empirical_ratio: Option<f64>,
    pub mean_empirical_ratio: Option<f64>,
    pub max_theoretical_ratio: Option<f64>,
    pub exit_code: i32,
}

/// One sweep entry: a report, or a failure record if generation failed.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepLine {
    Report(Box<Report>),
    Failed { line: String, exit_code: i32 },
}

impl SweepLine {
    pub fn to_json(&self) -> String {
        match self {
            SweepLine::Report(r) => r.to_json(),
            SweepLine::Failed { line, .. } => line.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            SweepLine::Report(r) => r.exit_code,
            SweepLine::Failed { exit_code, .. } => *exit_code,
        }
    }
}

pub fn instance_seed(base: u64, index: usize) -> u64 {
    CounterRng::new(base).split(index as u64)
}

/// Runs every instance in parallel; results come back in index order.
pub fn sweep(config: &SweepConfig) -> (Vec<SweepLine>, SweepSummary) {
    let lines: Vec<SweepLine> = (0..config.count)
        .into_par_iter()
        .map(|i| {
            let seed = instance_seed(config.spec.seed, i);
            let spec = GenSpec { seed, ..config.spec };
            match generate_instance(&spec).and_then(|inst| config.run.apply(inst)) {
                Ok(inst) => SweepLine::Report(Box::new(solve(&inst, &RunConfig { seed, ..config.run }))),
                Err(e) => SweepLine::Failed {
                    line: failure_record(e.kind(), &e.to_string(), e.exit_code()),
                    exit_code: e.exit_code(),
                },
            }
        })
        .collect();
    let summary = summarize(&lines);
    (lines, summary)
}

fn summarize(lines: &[SweepLine]) -> SweepSummary {
    let mut s = SweepSummary { count: lines.len(), ..SweepSummary::default() };
    let mut ratios = Vec::new();
    for line in lines {
        if s.exit_code == exit::OK {
            s.exit_code = line.exit_code();
        }
        let SweepLine::Report(r) = line else { continue };
        s.solved += usize::from(r.cost.is_some());
        s.valid += usize::from(r.valid);
        s.holds += usize::from(r.valid && r.holds);
        if let Some(x) = r.certificate.empirical_ratio {
            ratios.push(x);
        }
        if let Some(t) = r.certificate.theoretical_ratio {
            s.max_theoretical_ratio = Some(s.max_theoretical_ratio.map_or(t, |m: f64| m.max(t)));
        }
    }
    s.with_opt = ratios.len();
    s.max_empirical_ratio = ratios.iter().copied().reduce(f64::max);
    if !ratios.is_empty() {
        s.mean_empirical_ratio = Some(ratios.iter().sum::<f64>() / ratios.len() as f64);
    }
    s
}
