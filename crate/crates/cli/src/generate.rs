//! Random Euclidean instances in the unit square.

use mdvrp_core::{DistanceMatrix, Instance, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub k: u64,
    pub variant: Variant,
    /// Inclusive demand range.
    pub dmin: u64,
    pub dmax: u64,
    pub seed: u64,
}

impl GenSpec {
    /// Spec with the widest demand range the variant allows.
    pub fn new(n: usize, m: usize, k: u64, variant: Variant, seed: u64) -> Self {
        let dmax = match variant {
            Variant::Unit => 1,
            Variant::Unsplittable => k,
            Variant::Splittable => 2 * k,
        };
        Self { n, m, k, variant, dmin: 1, dmax, seed }
    }

    fn check(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Usage(format!("impossible generator spec: {msg}")));
        if self.n == 0 || self.m == 0 {
            return bad(format!("need n, m >= 1, got n = {}, m = {}", self.n, self.m));
        }
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.dmin == 0 || self.dmin > self.dmax {
            return bad(format!("demand range [{}, {}] is empty or contains 0", self.dmin, self.dmax));
        }
        match self.variant {
            Variant::Unit if self.dmax != 1 => bad("unit variant needs demand range [1, 1]".into()),
            Variant::Unsplittable if self.dmax > self.k => {
                bad(format!("unsplittable demands must be <= k = {}, got {}", self.k, self.dmax))
            }
            _ => Ok(()),
        }
    }
}

/// Deterministic in `spec.seed`. Customers come first, then depots; ids are
/// `v0..` and `u0..`.
pub fn generate_instance(spec: &GenSpec) -> Result<Instance, CliError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let size = spec.n + spec.m;
    let points: Vec<(f64, f64)> = (0..size).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    let demands = (0..spec.n).map(|_| rng.gen_range(spec.dmin..=spec.dmax)).collect();
    let weights = DistanceMatrix::from_fn(size, |i, j| {
        let (a, b) = (points[i], points[j]);
        (a.0 - b.0).hypot(a.1 - b.1)
    });
    Ok(Instance::with_default_ids(spec.n, spec.m, weights, demands, spec.k, spec.variant)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mdvrp_core::instance::validate_metric;

    #[test]
    fn deterministic() {
        let spec = GenSpec::new(7, 2, 3, Variant::Unsplittable, 11);
        assert_eq!(generate_instance(&spec).unwrap(), generate_instance(&spec).unwrap());
        let other = GenSpec { seed: 12, ..spec };
        assert_ne!(generate_instance(&spec).unwrap(), generate_instance(&other).unwrap());
    }

    #[test]
    fn impossible_specs() {
        for spec in [
            GenSpec::new(0, 1, 3, Variant::Unit, 0),
            GenSpec::new(3, 0, 3, Variant::Unit, 0),
            GenSpec { dmax: 4, ..GenSpec::new(3, 1, 3, Variant::Unsplittable, 0) },
            GenSpec { dmax: 2, ..GenSpec::new(3, 1, 3, Variant::Unit, 0) },
            GenSpec { dmin: 0, ..GenSpec::new(3, 1, 3, Variant::Splittable, 0) },
        ] {
            assert!(generate_instance(&spec).is_err(), "{spec:?}");
        }
    }

    #[test]
    fn hundred_instances_are_metric() {
        for seed in 0..100 {
            let variant = [Variant::Unit, Variant::Splittable, Variant::Unsplittable][seed as usize % 3];
            let inst =
                generate_instance(&GenSpec::new(1 + seed as usize % 12, 1 + seed as usize % 4, 4, variant, seed))
                    .unwrap();
            assert!(validate_metric(inst.weights()).is_valid());
        }
    }
}
