//! Divisor complexes `Div(n)`: proper divisors of `n` weighted by value with
//! quota `n`.
//!
//! The minimal vertex is `1`, so the shell faces are exactly the sets of
//! distinct non-unit proper divisors summing to `n - 1`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::count::{self, Counter};
use crate::error::{Error, Result};
use crate::quota::{BouquetSignature, ScalarQuotaSystem};

/// Largest cardinality-by-sum table built for one profile.
const MAX_TABLE_ENTRIES: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Deficient,
    Perfect,
    Abundant,
}

impl Classification {
    pub fn of(n: u64, sigma_proper: u64) -> Self {
        use std::cmp::Ordering::*;
        match sigma_proper.cmp(&n) {
            Less => Classification::Deficient,
            Equal => Classification::Perfect,
            Greater => Classification::Abundant,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Deficient => "deficient",
            Classification::Perfect => "perfect",
            Classification::Abundant => "abundant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    /// Number of positive divisors, `n` included.
    pub tau: u64,
    pub sigma_proper: u64,
    pub classification: Classification,
    pub signature: BouquetSignature,
}

impl DivisorProfile {
    /// Largest sphere dimension, `None` when contractible.
    pub fn top_dim(&self) -> Option<usize> {
        self.signature.top_dimension()
    }

    /// `tau(n) - 3 - top_dim`; zero exactly for perfect numbers.
    pub fn perfect_gap(&self) -> Option<i64> {
        self.top_dim().map(|d| self.tau as i64 - 3 - d as i64)
    }

    pub fn is_contractible(&self) -> bool {
        self.signature.is_contractible()
    }
}

/// Proper divisors of `n` in increasing order, by trial division.
pub fn proper_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.pop();
    small
}

/// The quota system on the proper divisors of `n` with quota `n`.
pub fn divisor_system(n: u64) -> Result<ScalarQuotaSystem<u64>> {
    if n < 2 {
        return Err(Error::input(format!("n = {n} must be at least 2")));
    }
    ScalarQuotaSystem::new(proper_divisors(n), n)
}

pub fn divisor_profile(n: u64) -> Result<DivisorProfile> {
    if n < 2 {
        return Err(Error::input(format!("n = {n} must be at least 2")));
    }
    let divs = proper_divisors(n);
    profile_from_divisors(n, &divs)
}

fn profile_from_divisors(n: u64, divs: &[u64]) -> Result<DivisorProfile> {
    let sigma_proper: u64 = divs.iter().sum();
    let tau = divs.len() as u64 + 1;
    let classification = Classification::of(n, sigma_proper);
    let non_unit = &divs[1..];
    let signature = if sigma_proper < n {
        BouquetSignature::point()
    } else {
        shell_signature(non_unit, n - 1)?
    };
    Ok(DivisorProfile { n, tau, sigma_proper, classification, signature })
}

/// Spheres from subsets of `elements` summing exactly to `target`.
fn shell_signature(elements: &[u64], target: u64) -> Result<BouquetSignature> {
    let total: u64 = elements.iter().sum();
    if total < target {
        return Ok(BouquetSignature::point());
    }
    // count complements when their target is smaller
    let complement = total - target < target;
    let t = if complement { total - target } else { target } as usize;
    let usable: Vec<u64> = elements.iter().copied().filter(|&d| d as usize <= t).collect();
    let mut max_k = 0usize;
    let mut acc = 0u64;
    for &d in &usable {
        acc += d;
        if acc > t as u64 {
            break;
        }
        max_k += 1;
    }
    if (max_k + 1).saturating_mul(t + 1) > MAX_TABLE_ENTRIES {
        return Err(Error::capacity(format!(
            "a {}x{} subset table exceeds the limit of {MAX_TABLE_ENTRIES} entries",
            max_k + 1,
            t + 1
        )));
    }
    let by_k = count::with_fallback(
        || exact_target::<u128>(&usable, max_k, t),
        || exact_target::<BigUint>(&usable, max_k, t),
    );
    let mut counts = BTreeMap::new();
    for (k, c) in by_k.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let size = if complement { elements.len() - k } else { k };
        if size == 0 {
            continue;
        }
        counts.insert(size - 1, c);
    }
    Ok(BouquetSignature::from_counts(counts))
}

/// Number of `k`-subsets summing exactly to `t`, for `k <= max_k`.
fn exact_target<C: Counter>(elements: &[u64], max_k: usize, t: usize) -> Option<Vec<BigUint>> {
    let mut table = vec![vec![C::zero(); t + 1]; max_k + 1];
    table[0][0] = C::one();
    for &v in elements {
        let v = v as usize;
        for k in (1..=max_k).rev() {
            let (lo, hi) = table.split_at_mut(k);
            for s in (v..=t).rev() {
                if !lo[k - 1][s - v].is_zero() {
                    hi[0][s] = count::add(&hi[0][s], &lo[k - 1][s - v])?;
                }
            }
        }
    }
    Some(table.into_iter().map(|row| row[t].clone().into_big()).collect())
}

/// Whether some subset of `elements` sums exactly to `target`.
fn has_subset_sum(elements: &[u64], target: u64) -> bool {
    let total: u64 = elements.iter().sum();
    if total < target {
        return false;
    }
    let t = target.min(total - target) as usize;
    let words = t / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for &d in elements {
        let d = d as usize;
        if d > t {
            continue;
        }
        let (ws, bs) = (d / 64, d % 64);
        for w in (ws..words).rev() {
            let mut moved = reach[w - ws] << bs;
            if bs > 0 && w > ws {
                moved |= reach[w - ws - 1] >> (64 - bs);
            }
            reach[w] |= moved;
        }
        if reach[t / 64] >> (t % 64) & 1 == 1 {
            return true;
        }
    }
    reach[t / 64] >> (t % 64) & 1 == 1
}

/// `sigma(n) - n` for `0 <= n <= n_max` (entries 0 and 1 are 0).
pub fn proper_divisor_sums(n_max: u64) -> Vec<u64> {
    let n_max = n_max as usize;
    let mut s = vec![0u64; n_max + 1];
    for d in 1..=n_max / 2 {
        for m in (2 * d..=n_max).step_by(d) {
            s[m] += d as u64;
        }
    }
    s
}

/// Profiles of every `n` in `[n_lo, n_hi)` with non-contractible `Div(n)`.
pub fn perfect_scan(n_lo: u64, n_hi: u64) -> Result<Vec<DivisorProfile>> {
    non_contractible(n_lo, n_hi, false)?
        .par_iter()
        .map(|&n| divisor_profile(n))
        .collect()
}

/// `n` in `[n_lo, n_hi)` with non-contractible `Div(n)`, optionally odd only.
/// Only existence of a shell face is decided, so this scales to large ranges.
pub fn non_contractible(n_lo: u64, n_hi: u64, odd_only: bool) -> Result<Vec<u64>> {
    if n_lo < 2 {
        return Err(Error::input(format!("n_lo = {n_lo} must be at least 2")));
    }
    if n_hi <= n_lo {
        return Ok(Vec::new());
    }
    let sums = proper_divisor_sums(n_hi - 1);
    let candidates: Vec<u64> = (n_lo..n_hi)
        .filter(|&n| (!odd_only || n % 2 == 1) && sums[n as usize] >= n)
        .collect();
    Ok(candidates
        .into_par_iter()
        .filter(|&n| {
            let divs = proper_divisors(n);
            has_subset_sum(&divs[1..], n - 1)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_profiles() {
        let p6 = divisor_profile(6).unwrap();
        assert_eq!(p6.classification, Classification::Perfect);
        assert_eq!(p6.signature.to_json(), r#"{"1":1}"#);
        assert_eq!(p6.top_dim(), Some(1));
        assert_eq!(p6.perfect_gap(), Some(0));
        let p8 = divisor_profile(8).unwrap();
        assert_eq!(p8.classification, Classification::Deficient);
        assert!(p8.is_contractible());
        let p12 = divisor_profile(12).unwrap();
        assert_eq!(p12.classification, Classification::Abundant);
        assert_eq!(p12.signature.to_json(), r#"{"2":1}"#);
        assert!(divisor_profile(1).is_err());
        assert!(divisor_profile(2).unwrap().is_contractible());
    }

    #[test]
    fn matches_core_engine() {
        for n in 2..=400u64 {
            let p = divisor_profile(n).unwrap();
            let core = divisor_system(n).unwrap().homotopy_type();
            assert_eq!(core.signature(), Some(&p.signature), "n={n}");
        }
    }

    #[test]
    fn complement_and_existence_agree() {
        for n in 2..=3000u64 {
            let divs = proper_divisors(n);
            let exists = has_subset_sum(&divs[1..], n - 1);
            let p = divisor_profile(n).unwrap();
            assert_eq!(exists, !p.is_contractible(), "n={n}");
        }
    }

    #[test]
    fn sieve_matches_trial_division() {
        let s = proper_divisor_sums(500);
        for n in 2..=500u64 {
            assert_eq!(s[n as usize], proper_divisors(n).iter().sum::<u64>());
        }
    }

    #[test]
    fn scans_agree() {
        let listed = non_contractible(2, 3000, false).unwrap();
        let profiled: Vec<u64> = perfect_scan(2, 3000).unwrap().iter().map(|p| p.n).collect();
        assert_eq!(listed, profiled);
        assert_eq!(non_contractible(2, 1000, true).unwrap(), vec![945]);
    }

    #[test]
    fn odd_example() {
        let p = divisor_profile(12285).unwrap();
        assert_eq!(p.perfect_gap(), Some(2));
        assert_eq!(p.classification, Classification::Abundant);
    }
}
