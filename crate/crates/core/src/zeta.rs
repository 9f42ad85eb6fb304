//! Möbius and Mertens functions, and Euler characteristics of prime complexes.
//!
//! `chi(Prime(q)) = -sum_{n>=2} mu(n) L_q(n)` where `L_q(n) = 1` exactly when
//! `n` is square-free with prime divisors summing below `q`. With weights
//! `ln p` the faces are the square-free `n < e^q`, so
//! `chi(LogPrime(q)) = 1 - M(N)` for `N = ceil(e^q) - 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::count::{self, SignedCounter};
use crate::error::{Error, Result};
use crate::primes;

/// Default sieve size, enough for `q <= ln(10^6)`.
pub const DEFAULT_SIEVE_LIMIT: usize = 1_000_001;
/// Sieve size reaching `q = 16.5554`.
pub const FULL_SIEVE_LIMIT: usize = 15_540_000;

/// Relative distance within which `e^q` is taken to be an integer.
const SNAP_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct MobiusSieve {
    mu: Vec<i8>,
    mertens: Vec<i64>,
}

/// Linear sieve for `mu(1..=n_max)`.
pub fn mobius_sieve(n_max: usize) -> Result<MobiusSieve> {
    if n_max == 0 {
        return Err(Error::input("the Möbius sieve needs n_max >= 1"));
    }
    let mut mu = vec![0i8; n_max + 1];
    let mut composite = vec![false; n_max + 1];
    let mut ps: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..=n_max {
        if !composite[i] {
            ps.push(i);
            mu[i] = -1;
        }
        for &p in &ps {
            let ip = i * p;
            if ip > n_max {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    let mut mertens = vec![0i64; n_max + 1];
    for n in 1..=n_max {
        mertens[n] = mertens[n - 1] + mu[n] as i64;
    }
    Ok(MobiusSieve { mu, mertens })
}

impl MobiusSieve {
    pub fn n_max(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn mu(&self, n: usize) -> Result<i8> {
        self.check(n)?;
        Ok(self.mu[n])
    }

    /// `M(N)`, with `M(0) = 0`.
    pub fn mertens(&self, n: usize) -> Result<i64> {
        self.check(n)?;
        Ok(self.mertens[n])
    }

    pub fn mertens_series(&self) -> &[i64] {
        &self.mertens
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::capacity(format!(
                "{n} is beyond the sieve limit {}",
                self.n_max()
            )));
        }
        Ok(())
    }
}

/// `chi(Prime(q))` by a signed subset-sum table over the primes below `q`.
pub fn chi_prime(q: u64) -> BigInt {
    let ps = primes::primes_below(q);
    count::with_fallback(
        || signed_subset_chi::<i128>(&ps, q),
        || signed_subset_chi::<BigInt>(&ps, q),
    )
}

fn signed_subset_chi<C: SignedCounter>(elements: &[u64], q: u64) -> Option<BigInt> {
    let width = q as usize;
    if width == 0 {
        return Some(BigInt::zero());
    }
    // c[sigma] = sum over subsets with sum sigma of (-1)^|U|
    let mut c = vec![C::zero(); width];
    c[0] = C::one();
    for &p in elements {
        let p = p as usize;
        for sigma in (p..width).rev() {
            if !c[sigma - p].is_zero() {
                c[sigma] = c[sigma].checked_sub(&c[sigma - p])?;
            }
        }
    }
    let mut total = C::zero();
    for v in c {
        total = total.checked_add(&v)?;
    }
    // drop the empty set, then chi = -sum (-1)^|U|
    Some(BigInt::one() - total.into_big())
}

/// `chi(Prime(q)) = -sum mu(n) L_q(n)`, enumerating square-free products
/// of primes below `q` whose prime sum is below `q`. `mu` is read from the
/// sieve where the product is in range.
pub fn chi_prime_mobius(q: u64, sieve: &MobiusSieve) -> BigInt {
    let ps = primes::primes_below(q);
    let mut total = 0i128;
    let mut stack: Vec<(usize, u64, Option<u128>, usize)> = vec![(0, 0, Some(1), 0)];
    while let Some((start, sum, product, k)) = stack.pop() {
        for (idx, &p) in ps.iter().enumerate().skip(start) {
            let s = sum + p;
            if s >= q {
                break;
            }
            let n = product.and_then(|m| m.checked_mul(p as u128));
            let mu = match n {
                Some(n) if n <= sieve.n_max() as u128 => sieve.mu[n as usize] as i128,
                _ => if (k + 1) % 2 == 0 { 1 } else { -1 },
            };
            total -= mu;
            stack.push((idx + 1, s, n, k + 1));
        }
    }
    BigInt::from(total)
}

/// Largest `N` with `N < e^q`; `e^q` within a relative `1e-9` of an integer
/// counts as that integer.
pub fn logprime_cutoff(q: f64) -> Result<u64> {
    if !q.is_finite() {
        return Err(Error::input(format!("quota {q} is not finite")));
    }
    let e = q.exp();
    if !e.is_finite() || e > 1.8e19 {
        return Err(Error::capacity(format!("e^{q} is too large")));
    }
    let nearest = e.round();
    let n = if nearest >= 1.0 && (e - nearest).abs() <= SNAP_TOLERANCE * nearest {
        nearest as u64 - 1
    } else {
        e.ceil() as u64 - 1
    };
    Ok(n)
}

/// `chi(LogPrime(q)) = 1 - M(N)` with `N = logprime_cutoff(q)`.
pub fn chi_logprime(q: f64, sieve: &MobiusSieve) -> Result<i64> {
    let n = logprime_cutoff(q)?;
    chi_logprime_at(n, sieve)
}

/// `chi(LogPrime(ln(n + 1)))`.
pub fn chi_logprime_at(n: u64, sieve: &MobiusSieve) -> Result<i64> {
    if n == 0 {
        return Ok(0);
    }
    let n = usize::try_from(n).map_err(|_| Error::capacity("cutoff exceeds address space"))?;
    Ok(1 - sieve.mertens(n)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhSample {
    pub q: f64,
    pub n: u64,
    pub chi: i64,
    pub ln_abs_chi: f64,
}

#[derive(Debug, Clone)]
pub struct RhDiagnostic {
    pub samples: Vec<RhSample>,
    /// Sampled quotas where `chi = 0`.
    pub zero_count: usize,
    pub slope: f64,
    /// Intercept of the reference line `ln|chi| = slope * q + intercept`,
    /// anchored at the first sample.
    pub intercept: f64,
    pub fraction_below: f64,
    /// Smallest `c` with `ln|chi| <= slope * ln N + c` over the first third
    /// of the quota range.
    pub fitted_c: f64,
    /// Fraction of all samples with `ln|chi| <= slope * ln N + fitted_c`.
    pub fraction_within_envelope: f64,
}

pub const RH_SLOPE: f64 = 0.55;

/// Samples `ln |chi(LogPrime(q))|` at `samples` evenly spaced quotas.
pub fn rh_diagnostic(sieve: &MobiusSieve, q_lo: f64, q_hi: f64, samples: usize) -> Result<RhDiagnostic> {
    if !(q_lo < q_hi) || samples < 2 {
        return Err(Error::input("need q_lo < q_hi and at least 2 samples"));
    }
    let top = logprime_cutoff(q_hi)?;
    if top > sieve.n_max() as u64 {
        return Err(Error::capacity(format!(
            "q_hi = {q_hi} needs a sieve through {top}, have {}",
            sieve.n_max()
        )));
    }
    let mut points = Vec::with_capacity(samples);
    let mut zero_count = 0;
    for k in 0..samples {
        let q = q_lo + (q_hi - q_lo) * k as f64 / (samples - 1) as f64;
        let n = logprime_cutoff(q)?;
        let chi = chi_logprime_at(n, sieve)?;
        if chi == 0 {
            zero_count += 1;
            continue;
        }
        points.push(RhSample { q, n, chi, ln_abs_chi: (chi.unsigned_abs() as f64).ln() });
    }
    let excess = |p: &RhSample| p.ln_abs_chi - RH_SLOPE * (p.n as f64).ln();
    let fraction = |pred: &dyn Fn(&RhSample) -> bool| {
        points.iter().filter(|p| pred(p)).count() as f64 / points.len() as f64
    };
    let (intercept, fraction_below, fitted_c, fraction_within_envelope) = match points.first() {
        Some(first) => {
            let intercept = first.ln_abs_chi - RH_SLOPE * first.q;
            let below = fraction(&|p| p.ln_abs_chi <= RH_SLOPE * p.q + intercept);
            let calibration_end = q_lo + (q_hi - q_lo) / 3.0;
            let c = points
                .iter()
                .filter(|p| p.q <= calibration_end)
                .map(excess)
                .fold(f64::NEG_INFINITY, f64::max);
            (intercept, below, c, fraction(&|p| excess(p) <= c))
        }
        None => (f64::NAN, f64::NAN, f64::NAN, f64::NAN),
    };
    Ok(RhDiagnostic {
        samples: points,
        zero_count,
        slope: RH_SLOPE,
        intercept,
        fraction_below,
        fitted_c,
        fraction_within_envelope,
    })
}

/// `sum_{n<=terms} (M(n) - M(n-1)) / n^s` as an exact rational.
pub fn mertens_dirichlet_partial(sieve: &MobiusSieve, s: u32, terms: usize) -> Result<crate::Rational> {
    sieve.check(terms)?;
    Ok((1..=terms)
        .map(|n| {
            let num = BigInt::from(sieve.mertens[n] - sieve.mertens[n - 1]);
            crate::Rational::new(num, BigInt::from(n).pow(s))
        })
        .sum())
}

/// `sum_{n<=terms} mu(n) / n^s` as an exact rational.
pub fn mobius_dirichlet_partial(sieve: &MobiusSieve, s: u32, terms: usize) -> Result<crate::Rational> {
    sieve.check(terms)?;
    Ok((1..=terms)
        .map(|n| crate::Rational::new(BigInt::from(sieve.mu[n]), BigInt::from(n).pow(s)))
        .sum())
}
