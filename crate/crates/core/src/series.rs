//! Truncated integer power series and the Euler-characteristic generating
//! function
//!
//! ```text
//! sum_{j >= nu_1} chi[j+1] x^j = (1 - prod_i (1 - x^{nu_i})) / (1 - x)
//! ```
//!
//! where `chi[q]` is the Euler characteristic of the quota complex with
//! weights `nu` and quota `q`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes;
use crate::zeta;

/// Coefficients `c_0..=c_D` of a power series truncated at degree `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPowerSeries {
    coeffs: Vec<BigInt>,
}

impl IntPowerSeries {
    pub fn zero(degree_cap: usize) -> Self {
        IntPowerSeries { coeffs: vec![BigInt::zero(); degree_cap + 1] }
    }

    pub fn one(degree_cap: usize) -> Self {
        let mut s = Self::zero(degree_cap);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Coefficients past `degree_cap` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, degree_cap: usize) -> Self {
        coeffs.resize(degree_cap + 1, BigInt::zero());
        IntPowerSeries { coeffs }
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or_else(|| {
            Error::input(format!("degree {k} is beyond the cap {}", self.degree_cap()))
        })
    }

    /// Multiplies in place by `(1 - x^k)`.
    pub fn mul_one_minus_xk(&mut self, k: usize) {
        if k == 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        for d in (k..self.coeffs.len()).rev() {
            if !self.coeffs[d - k].is_zero() {
                let t = self.coeffs[d - k].clone();
                self.coeffs[d] -= t;
            }
        }
    }

    /// Divides in place by `(1 - x^k)`, i.e. multiplies by `sum x^{jk}`.
    pub fn div_one_minus_xk(&mut self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::input("1 - x^0 is not invertible"));
        }
        for d in k..self.coeffs.len() {
            if !self.coeffs[d - k].is_zero() {
                let t = self.coeffs[d - k].clone();
                self.coeffs[d] += t;
            }
        }
        Ok(())
    }

    /// Truncated product at the smaller of the two caps.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.degree_cap().min(other.degree_cap());
        let mut out = Self::zero(cap);
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `1 / self`, defined when the constant term is `+1` or `-1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::input(format!(
                "constant term {c0} is not a unit, so no integer reciprocal exists"
            )));
        }
        let cap = self.degree_cap();
        let mut inv = Self::zero(cap);
        inv.coeffs[0] = c0.clone();
        for n in 1..=cap {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv.coeffs[n - k].is_zero() {
                    acc += &self.coeffs[k] * &inv.coeffs[n - k];
                }
            }
            // c0 is its own inverse
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }
}

/// Nondecreasing positive integers listing every `nu_i <= valid_through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    nu: Vec<u64>,
    valid_through: u64,
}

impl WeightMultiset {
    pub fn new(mut nu: Vec<u64>, valid_through: u64) -> Result<Self> {
        nu.sort_unstable();
        if nu.first() == Some(&0) {
            return Err(Error::input("weights must be positive"));
        }
        Ok(WeightMultiset { nu, valid_through })
    }

    /// `copies` copies of every positive integer up to `bound`.
    pub fn counting(copies: usize, bound: u64) -> Self {
        let nu = (1..=bound)
            .flat_map(|n| std::iter::repeat(n).take(copies))
            .collect();
        WeightMultiset { nu, valid_through: bound }
    }

    /// The primes up to `bound`.
    pub fn primes(bound: u64) -> Self {
        WeightMultiset {
            nu: primes::primes_below(bound + 1),
            valid_through: bound,
        }
    }

    pub fn nu(&self) -> &[u64] {
        &self.nu
    }

    pub fn valid_through(&self) -> u64 {
        self.valid_through
    }
}

/// `prod (1 - x^{nu_i})` truncated at degree `d`.
pub fn product_series(nu: &WeightMultiset, d: usize) -> Result<IntPowerSeries> {
    if (d as u64) > nu.valid_through {
        return Err(Error::input(format!(
            "weights are only known through {}, degree {d} needs every weight <= {d}",
            nu.valid_through
        )));
    }
    let mut s = IntPowerSeries::one(d);
    for &v in nu.nu.iter().take_while(|&&v| v as usize <= d) {
        s.mul_one_minus_xk(v as usize);
    }
    Ok(s)
}

/// `chi[q]` for `1 <= q <= q_max`, indexed by `q` (entry 0 is unused and zero).
pub fn chi_from_product(nu: &WeightMultiset, q_max: usize) -> Result<Vec<BigInt>> {
    let d = q_max.saturating_sub(1);
    let p = product_series(nu, d)?;
    Ok(chi_from_series(&p))
}

/// `chi[j+1] = -(c_1 + ... + c_j)` for the coefficients `c` of the product.
pub fn chi_from_series(p: &IntPowerSeries) -> Vec<BigInt> {
    let mut chi = vec![BigInt::zero(); p.degree_cap() + 2];
    let mut acc = BigInt::zero();
    for j in 1..=p.degree_cap() {
        acc -= &p.coeffs[j];
        chi[j + 1] = acc.clone();
    }
    chi
}

/// `1 - (1 - x) sum_j chi[j+1] x^j`, the product recovered from `chi[1..]`.
pub fn product_from_chi(chi: &[BigInt]) -> Result<IntPowerSeries> {
    if chi.len() < 2 {
        return Err(Error::input("need chi[q] for at least q = 1"));
    }
    let d = chi.len() - 2;
    let mut s = IntPowerSeries::one(d);
    for j in 1..=d {
        s.coeffs[j] = &chi[j] - &chi[j + 1];
    }
    s.coeffs[0] = BigInt::one() - &chi[1];
    Ok(s)
}

/// Recovers the weights from `chi[1..=D+1]` (entry 0 ignored). The result
/// lists every weight `<= D`.
pub fn recover_weights(chi: &[BigInt]) -> Result<WeightMultiset> {
    let mut s = product_from_chi(chi)?;
    if !s.coeffs[0].is_one() {
        return Err(Error::input("chi[1] must be 0 (the complex at quota 1 is empty)"));
    }
    let d = s.degree_cap();
    let mut nu = Vec::new();
    for k in 1..=d {
        let c = s.coeffs[k].clone();
        if c.is_positive() {
            return Err(Error::input(format!(
                "coefficient {c} at degree {k} cannot come from a product of (1 - x^nu)"
            )));
        }
        let m = (-c).to_usize().ok_or_else(|| Error::capacity("weight multiplicity too large"))?;
        for _ in 0..m {
            s.div_one_minus_xk(k)?;
            nu.push(k as u64);
        }
    }
    WeightMultiset::new(nu, d as u64)
}

/// `p(0..=d)` as the reciprocal of `prod_{n>=1} (1 - x^n)`.
pub fn partition_numbers(d: usize) -> Result<Vec<BigInt>> {
    if d == 0 {
        return Err(Error::input("degree must be at least 1"));
    }
    let phi = product_series(&WeightMultiset::counting(1, d as u64), d)?;
    Ok(phi.reciprocal()?.coeffs)
}

/// Ramanujan's `tau(1..=n_max)` from `prod (1 - x^n)^24 = sum tau(n+1) x^n`.
pub fn ramanujan_tau(n_max: usize) -> Result<Vec<BigInt>> {
    if n_max == 0 {
        return Err(Error::input("n_max must be at least 1"));
    }
    let d = n_max - 1;
    let p = product_series(&WeightMultiset::counting(24, d as u64), d)?;
    Ok(p.coeffs)
}

#[derive(Debug, Clone)]
pub struct LehmerReport {
    /// `tau[n-1]` is `tau(n)` for `1 <= n <= q_max`.
    pub tau: Vec<BigInt>,
    /// `chi[q]` of the complex with 24 vertices of each weight `1, 2, ...`.
    pub chi: Vec<BigInt>,
    /// `m` with `chi[m] = chi[m+1]`.
    pub equal_pairs: Vec<usize>,
}

pub fn lehmer_check(q_max: usize) -> Result<LehmerReport> {
    if q_max < 3 {
        return Err(Error::input("q_max must be at least 3"));
    }
    let tau = ramanujan_tau(q_max)?;
    let p = IntPowerSeries::from_coeffs(tau.clone(), q_max - 1);
    let chi = chi_from_series(&p);
    let equal_pairs = (1..q_max).filter(|&m| chi[m] == chi[m + 1]).collect();
    Ok(LehmerReport { tau, chi, equal_pairs })
}

/// `prod_{p < primes_below} (1 - p^{-s})` and `sum_{n <= terms} mu(n) n^{-s}`.
pub fn euler_product_partial(primes_below: u64, s: Complex64, terms: usize) -> Result<(Complex64, Complex64)> {
    if s.re <= 1.0 {
        return Err(Error::input(format!("Re(s) = {} must exceed 1", s.re)));
    }
    let product = primes::primes_below(primes_below)
        .into_iter()
        .fold(Complex64::new(1.0, 0.0), |acc, p| {
            acc * (Complex64::new(1.0, 0.0) - Complex64::new(p as f64, 0.0).powc(-s))
        });
    let sieve = zeta::mobius_sieve(terms.max(1))?;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=terms {
        let mu = sieve.mu(n)?;
        if mu != 0 {
            sum += Complex64::new(n as f64, 0.0).powc(-s) * mu as f64;
        }
    }
    Ok((product, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quota::ScalarQuotaSystem;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pentagonal_and_single_factor() {
        let p = product_series(&WeightMultiset::counting(1, 6), 6).unwrap();
        assert_eq!(p.coeffs(), ints(&[1, -1, -1, 0, 0, 1, 0]).as_slice());
        let q = product_series(&WeightMultiset::new(vec![3], 10).unwrap(), 5).unwrap();
        assert_eq!(q.coeffs(), ints(&[1, 0, 0, -1, 0, 0]).as_slice());
        assert!(product_series(&WeightMultiset::new(vec![3], 4).unwrap(), 5).is_err());
        assert!(q.coeff(6).is_err());
    }

    #[test]
    fn tau_and_partitions() {
        let t = ramanujan_tau(4).unwrap();
        assert_eq!(t, ints(&[1, -24, 252, -1472]));
        let p = partition_numbers(10).unwrap();
        assert_eq!(&p[1..6], ints(&[1, 2, 3, 5, 7]).as_slice());
        assert_eq!(p[10], BigInt::from(42));
        let phi = product_series(&WeightMultiset::counting(1, 10), 10).unwrap();
        assert_eq!(phi.mul(&phi.reciprocal().unwrap()), IntPowerSeries::one(10));
        assert!(IntPowerSeries::from_coeffs(ints(&[2, 1]), 3).reciprocal().is_err());
    }

    #[test]
    fn chi_matches_direct_counts() {
        let nu = WeightMultiset::counting(1, 30);
        let chi = chi_from_product(&nu, 30).unwrap();
        for q in 1..=30u64 {
            let sys = ScalarQuotaSystem::new((1..=30u64).collect(), q).unwrap();
            assert_eq!(chi[q as usize], sys.euler_characteristic(), "q={q}");
        }
        let late = WeightMultiset::new(vec![5, 7], 10).unwrap();
        let chi = chi_from_product(&late, 5).unwrap();
        assert!(chi.iter().all(Zero::is_zero));
    }

    #[test]
    fn lehmer_small() {
        let r = lehmer_check(50).unwrap();
        assert!(r.tau[0].is_one());
        assert!(r.equal_pairs.is_empty());
        for m in 1..50 {
            assert_eq!(&r.chi[m + 1] - &r.chi[m], -&r.tau[m]);
        }
        assert!(lehmer_check(2).is_err());
    }

    #[test]
    fn recover_round_trip() {
        let nu = WeightMultiset::new(vec![2, 2, 3, 7, 7, 7, 11], 20).unwrap();
        let chi = chi_from_product(&nu, 21).unwrap();
        let back = recover_weights(&chi).unwrap();
        assert_eq!(back.nu(), nu.nu());
        assert_eq!(back.valid_through(), 20);
    }

    #[test]
    fn euler_product_examples() {
        let (p, _) = euler_product_partial(3, Complex64::new(2.0, 0.0), 1).unwrap();
        assert!((p.re - 0.75).abs() < 1e-15);
        let target = 6.0 / std::f64::consts::PI.powi(2);
        let (p, m) = euler_product_partial(10_000, Complex64::new(2.0, 0.0), 100_000).unwrap();
        assert!((p.re - target).abs() < 1e-3 && (m.re - target).abs() < 1e-3);
        let (p, m) = euler_product_partial(10_000, Complex64::new(3.0, 0.0), 100_000).unwrap();
        assert!((p - m).norm() < 1e-6);
        assert!(euler_product_partial(10, Complex64::new(1.0, 0.0), 10).is_err());
    }
}
