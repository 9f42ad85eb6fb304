use num_traits::ToPrimitive;

use super::FaceCountTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitTransform {
    /// `s_i(q)^(1/(i+1)) * ln q`
    PrimeLog,
    /// `s_i(q)^(2/(i+1))`
    SquareRoot,
    /// `s_i(q)^(3/(i+1))`
    CubeRoot,
}

impl FitTransform {
    pub fn apply(self, s: f64, i: usize, q: u64) -> f64 {
        let k = (i + 1) as f64;
        match self {
            FitTransform::PrimeLog => s.powf(1.0 / k) * (q as f64).ln(),
            FitTransform::SquareRoot => s.powf(2.0 / k),
            FitTransform::CubeRoot => s.powf(3.0 / k),
        }
    }
}

impl std::str::FromStr for FitTransform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prime" | "primes" => Ok(FitTransform::PrimeLog),
            "square" | "squares" => Ok(FitTransform::SquareRoot),
            "cube" | "cubes" => Ok(FitTransform::CubeRoot),
            other => Err(Error::input(format!("unknown fit transform {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square of the residuals.
    pub residual: f64,
    pub points: usize,
}

/// Ordinary least squares of the transformed `s_i` against `q`, over every
/// `q` with `s_i(q) > 0`.
pub fn slope_fit(t: &FaceCountTable, i: usize, transform: FitTransform) -> Result<LinearFit> {
    if i > t.i_max() {
        return Err(Error::input(format!("i = {i} exceeds the table's i_max {}", t.i_max())));
    }
    let points: Vec<(f64, f64)> = (1..=t.q_max())
        .filter_map(|q| {
            let s = t.s_ref(i, q).to_f64()?;
            (s > 0.0).then(|| (q as f64, transform.apply(s, i, q)))
        })
        .collect();
    least_squares(&points)
}

pub(crate) fn least_squares(points: &[(f64, f64)]) -> Result<LinearFit> {
    let n = points.len();
    if n < 2 {
        return Err(Error::input(format!("a line fit needs at least 2 points, got {n}")));
    }
    let nf = n as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = points.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::input("all fit points share one abscissa"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss: f64 = points
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    Ok(LinearFit { slope, intercept, residual: (ss / nf).sqrt(), points: n })
}

#[cfg(test)]
mod tests {
    use super::super::{count_table, SequenceKind, SequenceSpec};
    use super::*;

    #[test]
    fn exact_line() {
        let f = least_squares(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
        assert!(f.residual < 1e-12);
        assert!(least_squares(&[(1.0, 1.0)]).is_err());
    }

    #[test]
    fn prime_slopes() {
        let spec = SequenceSpec::below(SequenceKind::Primes, 551).unwrap();
        let t = count_table(&spec, 550, 6).unwrap();
        let expected = [0.632374, 0.404613, 0.284124, 0.211868, 0.164796, 0.132366];
        for (k, want) in expected.iter().enumerate() {
            let fit = slope_fit(&t, k + 1, FitTransform::PrimeLog).unwrap();
            assert!((fit.slope - want).abs() < 0.02, "i={} slope={}", k + 1, fit.slope);
        }
        assert!(slope_fit(&t, 7, FitTransform::PrimeLog).is_err());
    }
}
