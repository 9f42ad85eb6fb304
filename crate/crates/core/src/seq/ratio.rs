use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{FaceCountTable, HomologyTable};
use crate::error::{Error, Result};
use crate::weight::Rational;

/// `S_i(q)`, `H_i(q)` and their running averages.
///
/// Ratios are exact; `None` marks a zero denominator.
#[derive(Debug, Clone)]
pub struct RatioSeries {
    q_max: u64,
    s: Vec<Vec<Option<Rational>>>,
    h: Vec<Vec<Option<Rational>>>,
    s_ave: Vec<Vec<f64>>,
    h_ave: Vec<Vec<f64>>,
}

impl RatioSeries {
    pub fn q_max(&self) -> u64 {
        self.q_max
    }

    pub fn i_max(&self) -> usize {
        self.s.len() - 1
    }

    pub fn s_ratio(&self, i: usize, q: u64) -> Option<&Rational> {
        self.s.get(i)?.get(q as usize)?.as_ref()
    }

    pub fn h_ratio(&self, i: usize, q: u64) -> Option<&Rational> {
        self.h.get(i)?.get(q as usize)?.as_ref()
    }

    /// `(1/q) sum_{k=1}^{q} S_i(k)`, undefined terms counting as zero.
    pub fn s_average(&self, i: usize, q: u64) -> f64 {
        self.s_ave[i][q as usize]
    }

    pub fn h_average(&self, i: usize, q: u64) -> f64 {
        self.h_ave[i][q as usize]
    }
}

pub fn ratio_series(s: &FaceCountTable, h: &HomologyTable) -> Result<RatioSeries> {
    if s.q_max() != h.q_max() || s.i_max() != h.i_max() || s.v1() != h.v1() {
        return Err(Error::input("face-count and homology tables are not aligned"));
    }
    let q_max = s.q_max();
    let rows = s.i_max() + 1;
    let mut sr = vec![Vec::with_capacity(q_max as usize + 1); rows];
    let mut hr = vec![Vec::with_capacity(q_max as usize + 1); rows];
    for q in 0..=q_max {
        let sd = BigInt::from(s.total(q as i64));
        let hd = BigInt::from(h.total(q).clone());
        for i in 0..rows {
            sr[i].push(ratio(BigInt::from(s.s(i, q as i64)), &sd));
            hr[i].push(ratio(BigInt::from(h.h(i, q)?.clone()), &hd));
        }
    }
    let s_ave = sr.iter().map(|row| running_average(row)).collect();
    let h_ave = hr.iter().map(|row| running_average(row)).collect();
    Ok(RatioSeries { q_max, s: sr, h: hr, s_ave, h_ave })
}

fn ratio(num: BigInt, den: &BigInt) -> Option<Rational> {
    (!den.is_zero()).then(|| Rational::new(num, den.clone()))
}

fn running_average(row: &[Option<Rational>]) -> Vec<f64> {
    let mut out = vec![0.0; row.len()];
    let mut acc = 0.0;
    for q in 1..row.len() {
        acc += row[q].as_ref().and_then(|r| r.to_f64()).unwrap_or(0.0);
        out[q] = acc / q as f64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{count_table, homology_table, SequenceKind, SequenceSpec};
    use super::*;
    use num_traits::One;

    #[test]
    fn normalization_and_prime_example() {
        let spec = SequenceSpec::below(SequenceKind::Primes, 200).unwrap();
        let t = count_table(&spec, 200, 10).unwrap();
        let h = homology_table(&t, 2).unwrap();
        let r = ratio_series(&t, &h).unwrap();
        assert!(r.h_ratio(0, 8).unwrap().is_one());
        assert!(r.s_ratio(0, 6).unwrap().is_one());
        assert!(r.s_ratio(0, 3).is_none());
        for q in 0..=200 {
            let sum: Option<Rational> = (0..=10).map(|i| r.s_ratio(i, q).cloned()).sum();
            if let Some(sum) = sum {
                assert!(sum.is_one(), "q={q}");
            }
        }
        let ave = r.s_average(0, 200);
        assert!(ave > 0.0 && ave < 1.0);
    }
}
