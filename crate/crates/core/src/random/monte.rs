use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::RandomQuotaSpec;
use crate::error::{Error, Result};
use crate::quota::QuotaSweep;

/// Sampled weights are rounded to multiples of `2^-32`.
const TICKS_PER_UNIT: f64 = 4_294_967_296.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    /// Standard error of the mean.
    pub stderr: f64,
}

impl Estimate {
    fn from_sums(sum: i128, sum_sq: u128, n: u64) -> Self {
        let nf = n as f64;
        let mean = sum as f64 / nf;
        let var = if n > 1 {
            ((sum_sq as f64 - sum as f64 * mean) / (nf - 1.0)).max(0.0)
        } else {
            0.0
        };
        Estimate { mean, stderr: (var / nf).sqrt() }
    }

    /// Whether `x` lies within `k` standard errors of the mean.
    pub fn covers(&self, x: f64, k: f64) -> bool {
        (x - self.mean).abs() <= k * self.stderr + 1e-12
    }
}

#[derive(Debug, Clone)]
pub struct MonteCarloResult {
    pub q_grid: Vec<f64>,
    pub trials: u64,
    /// `homology[j-1][k]` estimates `dim H_{j-1}` at `q_grid[k]`.
    pub homology: Vec<Vec<Estimate>>,
    pub euler: Vec<Estimate>,
    /// Largest face dimension seen at each quota, `None` if always empty.
    pub max_dimension: Vec<Option<usize>>,
}

#[derive(Clone)]
struct Sums {
    betti: Vec<Vec<(i128, u128)>>,
    chi: Vec<(i128, u128)>,
    max_dim: Vec<Option<usize>>,
}

impl Sums {
    fn new(n: usize, qs: usize) -> Self {
        Sums {
            betti: vec![vec![(0, 0); qs]; n],
            chi: vec![(0, 0); qs],
            max_dim: vec![None; qs],
        }
    }

    fn merge(mut self, other: Sums) -> Sums {
        for (a, b) in self.betti.iter_mut().zip(other.betti) {
            for (x, y) in a.iter_mut().zip(b) {
                x.0 += y.0;
                x.1 += y.1;
            }
        }
        for (x, y) in self.chi.iter_mut().zip(other.chi) {
            x.0 += y.0;
            x.1 += y.1;
        }
        for (x, y) in self.max_dim.iter_mut().zip(other.max_dim) {
            *x = (*x).max(y);
        }
        self
    }
}

fn ticks(x: f64) -> u64 {
    (x * TICKS_PER_UNIT).round() as u64
}

/// Samples `trials` complexes and estimates `E[dim H_{j-1}]` and `E[chi]`
/// at each quota. Trial `t` draws from its own ChaCha8 stream `t` under the
/// given seed, so results do not depend on thread count.
pub fn monte_carlo(spec: &RandomQuotaSpec, q_grid: &[f64], trials: u64, seed: u64) -> Result<MonteCarloResult> {
    if trials == 0 {
        return Err(Error::input("at least one trial is required"));
    }
    if q_grid.is_empty() {
        return Err(Error::input("the quota grid is empty"));
    }
    if q_grid.iter().any(|q| !(q.is_finite() && *q > 0.0 && *q < 1e9)) {
        return Err(Error::input("quotas must lie in (0, 1e9)"));
    }
    let n = spec.len();
    let qs: Vec<u64> = q_grid.iter().map(|&q| ticks(q)).collect();
    let bound = *qs.iter().max().expect("nonempty grid");
    let m = ticks(spec.m());

    let one_trial = |trial: u64| -> Result<Sums> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut weights = Vec::with_capacity(n + 1);
        weights.push(m);
        for d in spec.densities() {
            weights.push(ticks(d.inverse_cdf(rng.random::<f64>())));
        }
        let sweep = QuotaSweep::with_min_vertex(&weights, &bound, 0)?;
        let mut sorted = weights[1..].to_vec();
        sorted.sort_unstable();
        let mut sums = Sums::new(n, qs.len());
        for (k, q) in qs.iter().enumerate() {
            let t = sweep.homotopy_type(q)?;
            let chi: i128 = t.euler_characteristic().try_into().expect("small chi");
            sums.chi[k] = (chi, (chi * chi) as u128);
            if let Some(sig) = t.signature() {
                for (dim, count) in sig.iter() {
                    let c: u128 = count.try_into().expect("small count");
                    sums.betti[dim][k] = (c as i128, c * c);
                }
                // faces are vertex sets below q, so the largest uses the lightest vertices
                let mut acc = m;
                let dim = sorted.iter().take_while(|&&w| {
                    acc += w;
                    acc < *q
                }).count();
                sums.max_dim[k] = Some(dim);
            }
        }
        Ok(sums)
    };

    let total = (0..trials)
        .into_par_iter()
        .map(one_trial)
        .try_reduce(|| Sums::new(n, qs.len()), |a, b| Ok(a.merge(b)))?;

    Ok(MonteCarloResult {
        q_grid: q_grid.to_vec(),
        trials,
        homology: total
            .betti
            .iter()
            .map(|row| row.iter().map(|&(s, s2)| Estimate::from_sums(s, s2, trials)).collect())
            .collect(),
        euler: total.chi.iter().map(|&(s, s2)| Estimate::from_sums(s, s2, trials)).collect(),
        max_dimension: total.max_dim,
    })
}
