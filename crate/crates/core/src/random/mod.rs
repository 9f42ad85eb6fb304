//! Random scalar quota complexes.
//!
//! A deterministic vertex of weight `m` is joined by independent vertices
//! `X_1..X_N` with compactly supported densities on `[m, inf)`. The expected
//! reduced Betti number in degree `j-1` at quota `q` is
//! `sum_{|J|=j} P(sum_{i in J} X_i in [q-m, q))`.

mod density;
mod expect;
mod grid;
mod monte;

pub use density::{Density, DensityKind, DensitySpec};
pub use expect::{
    expected_euler, expected_euler_by_subsets, expected_homology, expected_homology_all,
    expected_homology_by_subsets, logprime_mertens_identity, ExpectationCurve, LogPrimeIdentity,
};
pub use grid::{convolve, DensityGrid};
pub use monte::{monte_carlo, MonteCarloResult, Estimate};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default lattice step as a fraction of `m`.
pub const DEFAULT_STEP_FRACTION: f64 = 1e-3;

/// A random quota system and the run parameters read from a spec file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct RandomQuotaSpec {
    m: f64,
    densities: Vec<Density>,
    pub q_grid: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawSpec {
    m: f64,
    densities: Vec<DensitySpec>,
    #[serde(default)]
    q_grid: Vec<f64>,
    #[serde(default = "default_trials")]
    trials: u64,
    #[serde(default)]
    seed: u64,
}

fn default_trials() -> u64 {
    10_000
}

impl TryFrom<RawSpec> for RandomQuotaSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let densities = raw
            .densities
            .iter()
            .map(Density::from_spec)
            .collect::<Result<Vec<_>>>()?;
        let mut spec = RandomQuotaSpec::new(raw.m, densities)?;
        if raw.q_grid.iter().any(|q| !q.is_finite()) {
            return Err(Error::input("q_grid entries must be finite"));
        }
        spec.q_grid = raw.q_grid;
        spec.trials = raw.trials;
        spec.seed = raw.seed;
        Ok(spec)
    }
}

impl From<RandomQuotaSpec> for RawSpec {
    fn from(s: RandomQuotaSpec) -> Self {
        RawSpec {
            m: s.m,
            densities: s.densities.iter().map(Density::to_spec).collect(),
            q_grid: s.q_grid,
            trials: s.trials,
            seed: s.seed,
        }
    }
}

impl RandomQuotaSpec {
    pub fn new(m: f64, densities: Vec<Density>) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::input(format!("m = {m} must be a positive real")));
        }
        for (i, d) in densities.iter().enumerate() {
            if d.support().0 < m - 1e-12 {
                return Err(Error::input(format!(
                    "density {} starts at {} below m = {m}",
                    i + 1,
                    d.support().0
                )));
            }
        }
        Ok(RandomQuotaSpec {
            m,
            densities,
            q_grid: Vec::new(),
            trials: default_trials(),
            seed: 0,
        })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn densities(&self) -> &[Density] {
        &self.densities
    }

    pub fn len(&self) -> usize {
        self.densities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.densities.is_empty()
    }

    pub fn default_step(&self) -> f64 {
        self.m * DEFAULT_STEP_FRACTION
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}
