use std::f64::consts::LN_2;

use super::{SequenceKind, SequenceSpec};
use crate::error::{Error, Result};

/// A smooth increasing stand-in for the counting function of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interpolant {
    /// `x / ln x` on `[3, inf)`
    PrimeCounting,
    /// `sqrt(x)` on `[1, inf)`
    SquareRoot,
    /// `cbrt(x)` on `[1, inf)`
    CubeRoot,
}

impl Interpolant {
    pub fn for_kind(kind: SequenceKind) -> Result<Self> {
        match kind {
            SequenceKind::Primes => Ok(Interpolant::PrimeCounting),
            SequenceKind::Squares => Ok(Interpolant::SquareRoot),
            SequenceKind::Cubes => Ok(Interpolant::CubeRoot),
            SequenceKind::Custom => Err(Error::input(
                "no interpolating function is defined for a custom sequence",
            )),
        }
    }

    /// Left end `kappa` of the domain.
    pub fn kappa(self) -> f64 {
        match self {
            Interpolant::PrimeCounting => 3.0,
            _ => 1.0,
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Interpolant::PrimeCounting => x / x.ln(),
            Interpolant::SquareRoot => x.sqrt(),
            Interpolant::CubeRoot => x.cbrt(),
        }
    }

    /// Smallest positive integer `k'` with `f(kappa) <= k'`.
    pub fn k_prime(self) -> usize {
        (self.eval(self.kappa()).ceil() as usize).max(1)
    }

    /// The `x >= kappa` with `f(x) = j`.
    pub fn level(self, j: f64) -> Result<f64> {
        let mut lo = self.kappa();
        if self.eval(lo) > j {
            return Err(Error::Numeric(format!(
                "level {j} lies below f(kappa) = {}",
                self.eval(lo)
            )));
        }
        match self {
            Interpolant::SquareRoot => return Ok(j * j),
            Interpolant::CubeRoot => return Ok(j * j * j),
            Interpolant::PrimeCounting => {}
        }
        let mut hi = lo * 2.0;
        while self.eval(hi) < j {
            lo = hi;
            hi *= 2.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid) < j {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-13 * hi {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// `S^_i(x) = C(f(x), i+1) / 2^f(x)` with the real-argument binomial.
    pub fn s_hat(self, i: usize, x: f64) -> f64 {
        let y = self.eval(x);
        let mut c = 1.0;
        for t in 0..=i {
            c *= (y - t as f64) / (t + 1) as f64;
        }
        c / y.exp2()
    }

    /// `sum_{j<=i} 1/(f(x)-j) - ln 2`, the sign of `S^_i'` past `x_i`.
    fn slope_sign(self, i: usize, x: f64) -> f64 {
        let y = self.eval(x);
        (0..=i).map(|j| 1.0 / (y - j as f64)).sum::<f64>() - LN_2
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub i: usize,
    pub x_i: f64,
    pub x_lower: f64,
    pub m: f64,
    pub x_upper: f64,
    pub s_hat_at_m: f64,
}

#[derive(Debug, Clone)]
pub struct HeuristicProfile {
    pub interpolant: Interpolant,
    pub kappa: f64,
    pub k_prime: usize,
    pub points: Vec<CriticalPoint>,
}

impl HeuristicProfile {
    pub fn point(&self, i: usize) -> Option<&CriticalPoint> {
        self.points.iter().find(|p| p.i == i)
    }
}

/// Locates the maximum `m_i` of `S^_i` for `k' <= i <= i_max` by bisection
/// on `[x_{2i+1}, x_{2i+2}]`.
pub fn heuristic_profile(spec: &SequenceSpec, i_max: usize) -> Result<HeuristicProfile> {
    let f = Interpolant::for_kind(spec.kind())?;
    let k_prime = f.k_prime();
    let mut points = Vec::new();
    for i in k_prime..=i_max {
        let x_i = f.level(i as f64)?;
        let x_lower = f.level((2 * i + 1) as f64)?;
        let x_upper = f.level((2 * i + 2) as f64)?;
        let (mut lo, mut hi) = (x_lower, x_upper);
        let (g_lo, g_hi) = (f.slope_sign(i, lo), f.slope_sign(i, hi));
        if !(g_lo > 0.0 && g_hi < 0.0) {
            return Err(Error::Numeric(format!(
                "critical point of S^_{i} not bracketed on [{lo}, {hi}]: \
                 derivative factor {g_lo} and {g_hi}"
            )));
        }
        while hi - lo > 1e-9 {
            let mid = 0.5 * (lo + hi);
            if f.slope_sign(i, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let m = 0.5 * (lo + hi);
        points.push(CriticalPoint {
            i,
            x_i,
            x_lower,
            m,
            x_upper,
            s_hat_at_m: f.s_hat(i, m),
        });
    }
    Ok(HeuristicProfile { interpolant: f, kappa: f.kappa(), k_prime, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_profile() {
        let spec = SequenceSpec::first(SequenceKind::Primes, 10).unwrap();
        let p = heuristic_profile(&spec, 12).unwrap();
        assert_eq!(p.k_prime, 3);
        assert_eq!(p.points.len(), 10);
        let mut last = f64::INFINITY;
        for c in &p.points {
            assert!(c.x_lower < c.m && c.m < c.x_upper);
            assert!(p.interpolant.s_hat(c.i, c.x_i).abs() < 1e-9);
            assert!(c.s_hat_at_m < last);
            last = c.s_hat_at_m;
        }
    }

    #[test]
    fn square_and_cube_profiles() {
        for kind in [SequenceKind::Squares, SequenceKind::Cubes] {
            let spec = SequenceSpec::first(kind, 5).unwrap();
            let p = heuristic_profile(&spec, 8).unwrap();
            assert_eq!(p.k_prime, 1);
            assert!(p.points.iter().all(|c| c.x_lower < c.m && c.m < c.x_upper));
        }
        assert!(Interpolant::PrimeCounting.level(1.0).is_err());
    }
}
