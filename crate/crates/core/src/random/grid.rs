use super::Density;
use crate::error::{Error, Result};

/// A piecewise-constant (possibly signed) density on the lattice `k * step`.
///
/// Cell `start + k` covers `[(start+k) step, (start+k+1) step)` and holds
/// density `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityGrid {
    step: f64,
    start: i64,
    values: Vec<f64>,
}

impl DensityGrid {
    pub fn new(step: f64, start: i64, values: Vec<f64>) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::input(format!("grid step {step} must be positive")));
        }
        Ok(DensityGrid { step, start, values })
    }

    /// Exact cell masses of `d` on the lattice of the given step.
    pub fn discretize(d: &Density, step: f64) -> Result<Self> {
        let (lo, hi) = d.support();
        let first = (lo / step).floor() as i64;
        let last = (hi / step).ceil() as i64;
        let values = (first..last.max(first + 1))
            .map(|k| (d.cdf((k + 1) as f64 * step) - d.cdf(k as f64 * step)) / step)
            .collect();
        DensityGrid::new(step, first, values)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn origin(&self) -> f64 {
        self.start as f64 * self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.step
    }

    pub fn end(&self) -> f64 {
        (self.start + self.values.len() as i64) as f64 * self.step
    }

    /// Density value, interpolated linearly between cell centres.
    pub fn value_at(&self, x: f64) -> f64 {
        let pos = x / self.step - self.start as f64 - 0.5;
        let k = pos.floor();
        let t = pos - k;
        let get = |i: f64| -> f64 {
            if i < 0.0 || i >= self.values.len() as f64 {
                0.0
            } else {
                self.values[i as usize]
            }
        };
        if x < self.origin() || x > self.end() {
            return 0.0;
        }
        get(k) * (1.0 - t) + get(k + 1.0) * t
    }

    /// Integral of the density from the left edge up to `x`.
    pub fn cumulative(&self, x: f64) -> f64 {
        let pos = x / self.step - self.start as f64;
        if pos <= 0.0 {
            return 0.0;
        }
        let full = (pos.floor() as usize).min(self.values.len());
        let mut acc: f64 = self.values[..full].iter().sum();
        if full < self.values.len() {
            acc += self.values[full] * (pos - full as f64);
        }
        acc * self.step
    }

    /// Integral over `[lo, hi)`.
    pub fn mass_between(&self, lo: f64, hi: f64) -> f64 {
        if hi <= lo {
            return 0.0;
        }
        self.cumulative(hi) - self.cumulative(lo)
    }

    pub fn scaled(&self, c: f64) -> Self {
        DensityGrid {
            step: self.step,
            start: self.start,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Pointwise sum on the common lattice.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_steps(self, other)?;
        if self.values.is_empty() {
            return Ok(other.clone());
        }
        if other.values.is_empty() {
            return Ok(self.clone());
        }
        let start = self.start.min(other.start);
        let end = (self.start + self.values.len() as i64).max(other.start + other.values.len() as i64);
        let mut values = vec![0.0; (end - start) as usize];
        for g in [self, other] {
            let off = (g.start - start) as usize;
            for (k, v) in g.values.iter().enumerate() {
                values[off + k] += v;
            }
        }
        Ok(DensityGrid { step: self.step, start, values })
    }
}

fn check_steps(a: &DensityGrid, b: &DensityGrid) -> Result<()> {
    if (a.step - b.step).abs() > 1e-12 * a.step.max(b.step) {
        return Err(Error::input(format!(
            "grid steps differ: {} vs {}",
            a.step, b.step
        )));
    }
    Ok(())
}

/// `(a * b)(x) = integral a(x - y) b(y) dy` on the lattice.
///
/// Cell pair `(i, j)` spreads its mass as a triangle over cells `i+j` and
/// `i+j+1`, which is exact for densities that are constant on cells.
pub fn convolve(a: &DensityGrid, b: &DensityGrid) -> Result<DensityGrid> {
    check_steps(a, b)?;
    let h = a.step;
    if a.values.is_empty() || b.values.is_empty() {
        return DensityGrid::new(h, a.start + b.start, Vec::new());
    }
    let mut pair = vec![0.0; a.values.len() + b.values.len() - 1];
    for (i, x) in a.values.iter().enumerate() {
        if *x == 0.0 {
            continue;
        }
        for (j, y) in b.values.iter().enumerate() {
            pair[i + j] += x * y;
        }
    }
    // masses are value * h, and the result is a mass over h again
    let mut values = vec![0.0; pair.len() + 1];
    for (k, p) in pair.iter().enumerate() {
        let half = 0.5 * p * h;
        values[k] += half;
        values[k + 1] += half;
    }
    DensityGrid::new(h, a.start + b.start, values)
}
