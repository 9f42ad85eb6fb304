use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    Uniform,
    Triangular,
    PiecewiseLinear,
}

/// Spec-file form: `uniform [a, b]`, `triangular [a, mode, b]`,
/// `piecewise-linear [x0, y0, x1, y1, ...]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensitySpec {
    pub kind: DensityKind,
    pub params: Vec<f64>,
}

/// A density that is linear between knots and zero outside `[x_0, x_n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Density {
    kind: DensityKind,
    params: Vec<f64>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Cumulative mass at each knot.
    cum: Vec<f64>,
}

const MASS_TOLERANCE: f64 = 1e-9;

impl Density {
    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::input(format!("uniform needs a < b, got [{a}, {b}]")));
        }
        let h = 1.0 / (b - a);
        Self::build(DensityKind::Uniform, vec![a, b], vec![a, b], vec![h, h])
    }

    pub fn triangular(a: f64, mode: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b && a <= mode && mode <= b) {
            return Err(Error::input(format!(
                "triangular needs a <= mode <= b and a < b, got ({a}, {mode}, {b})"
            )));
        }
        let peak = 2.0 / (b - a);
        let (xs, ys) = if mode == a {
            (vec![a, b], vec![peak, 0.0])
        } else if mode == b {
            (vec![a, b], vec![0.0, peak])
        } else {
            (vec![a, mode, b], vec![0.0, peak, 0.0])
        };
        Self::build(DensityKind::Triangular, vec![a, mode, b], xs, ys)
    }

    pub fn piecewise_linear(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() < 2 || xs.len() != ys.len() {
            return Err(Error::input("piecewise-linear needs at least two (x, y) knots"));
        }
        if xs.windows(2).any(|w| !(w[0] < w[1])) || xs.iter().any(|x| !x.is_finite()) {
            return Err(Error::input("knot positions must be finite and strictly increasing"));
        }
        if ys.iter().any(|y| !(y.is_finite() && *y >= 0.0)) {
            return Err(Error::input("density values must be finite and nonnegative"));
        }
        let params = xs.iter().zip(&ys).flat_map(|(x, y)| [*x, *y]).collect();
        Self::build(DensityKind::PiecewiseLinear, params, xs, ys)
    }

    pub fn from_spec(spec: &DensitySpec) -> Result<Self> {
        let p = &spec.params;
        match spec.kind {
            DensityKind::Uniform if p.len() == 2 => Self::uniform(p[0], p[1]),
            DensityKind::Triangular if p.len() == 3 => Self::triangular(p[0], p[1], p[2]),
            DensityKind::PiecewiseLinear if p.len() >= 4 && p.len() % 2 == 0 => {
                let xs = p.iter().step_by(2).copied().collect();
                let ys = p.iter().skip(1).step_by(2).copied().collect();
                Self::piecewise_linear(xs, ys)
            }
            kind => Err(Error::input(format!(
                "wrong number of parameters ({}) for a {kind:?} density",
                p.len()
            ))),
        }
    }

    pub fn to_spec(&self) -> DensitySpec {
        DensitySpec { kind: self.kind, params: self.params.clone() }
    }

    fn build(kind: DensityKind, params: Vec<f64>, xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let mut cum = vec![0.0; xs.len()];
        for k in 1..xs.len() {
            cum[k] = cum[k - 1] + 0.5 * (ys[k - 1] + ys[k]) * (xs[k] - xs[k - 1]);
        }
        let total = cum[cum.len() - 1];
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::input(format!("density integrates to {total}, not 1")));
        }
        Ok(Density { kind, params, xs, ys, cum })
    }

    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    pub fn support(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        if x < lo || x > hi {
            return 0.0;
        }
        let k = self.segment(x);
        let t = (x - self.xs[k]) / (self.xs[k + 1] - self.xs[k]);
        self.ys[k] + t * (self.ys[k + 1] - self.ys[k])
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        if x <= lo {
            return 0.0;
        }
        if x >= hi {
            return 1.0;
        }
        let k = self.segment(x);
        let w = self.xs[k + 1] - self.xs[k];
        let t = x - self.xs[k];
        let slope = (self.ys[k + 1] - self.ys[k]) / w;
        (self.cum[k] + self.ys[k] * t + 0.5 * slope * t * t).min(1.0)
    }

    /// Smallest `x` with `cdf(x) = u`, for `u` in `[0, 1)`.
    pub fn inverse_cdf(&self, u: f64) -> f64 {
        let total = self.cum[self.cum.len() - 1];
        let target = u.clamp(0.0, 1.0) * total;
        let k = match self.cum.partition_point(|&c| c <= target) {
            0 => 0,
            i => (i - 1).min(self.xs.len() - 2),
        };
        let w = self.xs[k + 1] - self.xs[k];
        let r = (target - self.cum[k]).max(0.0);
        let y = self.ys[k];
        let slope = (self.ys[k + 1] - y) / w;
        let disc = (y * y + 2.0 * slope * r).max(0.0);
        let denom = y + disc.sqrt();
        let t = if denom > 0.0 { 2.0 * r / denom } else { 0.0 };
        (self.xs[k] + t.min(w)).min(self.xs[k + 1])
    }

    fn segment(&self, x: f64) -> usize {
        let i = self.xs.partition_point(|&k| k <= x);
        i.saturating_sub(1).min(self.xs.len() - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_inverse_round_trip() {
        let ds = [
            Density::uniform(1.0, 2.0).unwrap(),
            Density::triangular(1.0, 1.2, 3.0).unwrap(),
            Density::triangular(1.0, 1.0, 2.0).unwrap(),
            Density::piecewise_linear(vec![1.0, 2.0, 4.0], vec![0.5, 0.5, 0.0]).unwrap(),
        ];
        for d in &ds {
            for k in 0..=100 {
                let u = k as f64 / 100.0;
                let x = d.inverse_cdf(u);
                assert!((d.cdf(x) - u).abs() < 1e-12, "{d:?} u={u}");
            }
        }
        assert!((ds[0].cdf(1.5) - 0.5).abs() < 1e-15);
        assert!((ds[1].pdf(1.2) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_densities() {
        assert!(Density::uniform(2.0, 1.0).is_err());
        assert!(Density::piecewise_linear(vec![1.0, 2.0], vec![1.0, 0.5]).is_err());
        assert!(Density::triangular(1.0, 4.0, 3.0).is_err());
        let spec = DensitySpec { kind: DensityKind::Uniform, params: vec![1.0] };
        assert!(Density::from_spec(&spec).is_err());
    }
}
