//! File formats, instance generation, reports and sweeps for the `mdvrp`
//! binary.

pub mod error;
pub mod generate;
pub mod io;
pub mod ratio;
pub mod report;
pub mod run;
pub mod sweep;
pub mod validate;

pub use error::CliError;
pub use generate::{generate_instance, GenSpec};
pub use io::{canonical_json, instance_digest, parse_instance, parse_instance_str};
pub use report::Report;
pub use run::{solve, RunConfig};
pub use sweep::{sweep, SweepConfig, SweepSummary};
