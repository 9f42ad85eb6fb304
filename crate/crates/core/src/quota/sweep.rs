//! Shell-face counting for every quota at once.
//!
//! The subset sums of `V \ {v_min}` below the largest quota of interest are
//! tabulated by sum and cardinality. The bouquet at quota `q` then reads off
//! the subsets whose sum lies in `[q - w(v_min), q)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::signature::{BouquetSignature, HomotopyType};
use crate::count::{self, Counter};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// Sparse table of subset counts: `(sum, counts)` sorted by sum, where
/// `counts[k]` is the number of `k`-element subsets with that sum.
pub(crate) type SumTable<W> = Vec<(W, Vec<BigUint>)>;

pub(crate) fn subset_sums<W: Weight>(weights: &[W], bound: &W) -> SumTable<W> {
    count::with_fallback(
        || subset_sums_with::<W, u128>(weights, bound),
        || subset_sums_with::<W, BigUint>(weights, bound),
    )
}

fn subset_sums_with<W: Weight, C: Counter>(weights: &[W], bound: &W) -> Option<SumTable<W>> {
    let mut table: BTreeMap<W, Vec<C>> = BTreeMap::new();
    table.insert(W::zero(), vec![C::one()]);
    for w in weights {
        if w >= bound {
            continue;
        }
        let limit = bound.clone() - w.clone();
        let shifted: Vec<(W, Vec<C>)> = table
            .range(..limit)
            .map(|(s, c)| (s.clone() + w.clone(), c.clone()))
            .collect();
        for (sum, counts) in shifted {
            let entry = table.entry(sum).or_default();
            if entry.len() < counts.len() + 1 {
                entry.resize(counts.len() + 1, C::zero());
            }
            for (k, c) in counts.iter().enumerate() {
                entry[k + 1] = count::add(&entry[k + 1], c)?;
            }
        }
    }
    Some(
        table
            .into_iter()
            .map(|(s, c)| (s, c.into_iter().map(Counter::into_big).collect()))
            .collect(),
    )
}

/// Bouquet signatures of `X[w : q]` for all `q` up to a fixed bound.
#[derive(Debug, Clone)]
pub struct QuotaSweep<W> {
    min_vertex: usize,
    min_weight: W,
    bound: W,
    sums: SumTable<W>,
}

impl<W: Weight> QuotaSweep<W> {
    /// Tabulates shell faces for quotas up to and including `max_quota`,
    /// using `min_vertex` as the distinguished minimal vertex.
    pub fn with_min_vertex(weights: &[W], max_quota: &W, min_vertex: usize) -> Result<Self> {
        let min_weight = weights
            .get(min_vertex)
            .cloned()
            .ok_or_else(|| Error::input("minimal vertex index out of range"))?;
        if weights.iter().any(|w| *w < min_weight) {
            return Err(Error::input(format!(
                "vertex {min_vertex} does not have minimal weight"
            )));
        }
        let others: Vec<W> = weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != min_vertex)
            .map(|(_, w)| w.clone())
            .collect();
        let sums = subset_sums(&others, max_quota);
        Ok(QuotaSweep {
            min_vertex,
            min_weight,
            bound: max_quota.clone(),
            sums,
        })
    }

    /// Uses the lowest-index vertex of minimal weight.
    pub fn new(weights: &[W], max_quota: &W) -> Result<Self> {
        let min_vertex = super::scalar::canonical_min_vertex(weights)
            .ok_or_else(|| Error::input("a quota sweep needs at least one vertex"))?;
        Self::with_min_vertex(weights, max_quota, min_vertex)
    }

    pub fn min_vertex(&self) -> usize {
        self.min_vertex
    }

    pub fn max_quota(&self) -> &W {
        &self.bound
    }

    pub fn homotopy_type(&self, quota: &W) -> Result<HomotopyType> {
        if *quota > self.bound {
            return Err(Error::input(format!(
                "quota {quota:?} beyond sweep bound {:?}",
                self.bound
            )));
        }
        if *quota <= self.min_weight {
            return Ok(HomotopyType::Empty);
        }
        let lo = quota.clone() - self.min_weight.clone();
        let start = self.sums.partition_point(|(s, _)| *s < lo);
        let end = self.sums.partition_point(|(s, _)| s < quota);
        let mut per_dim: Vec<BigUint> = Vec::new();
        for (_, counts) in &self.sums[start..end] {
            for (k, c) in counts.iter().enumerate().skip(1) {
                if per_dim.len() < k {
                    per_dim.resize(k, BigUint::zero());
                }
                per_dim[k - 1] += c;
            }
        }
        Ok(HomotopyType::Bouquet(BouquetSignature::from_counts(
            per_dim.into_iter().enumerate(),
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_sums_match_hand_count() {
        // Subsets of {3,5,7} below 11: {} 0, {3} 3, {5} 5, {7} 7, {3,5} 8, {3,7} 10.
        let t = subset_sums(&[3u64, 5, 7], &11);
        let flat: Vec<(u64, Vec<u64>)> = t
            .iter()
            .map(|(s, c)| {
                (
                    *s,
                    c.iter()
                        .map(|x| num_traits::ToPrimitive::to_u64(x).unwrap())
                        .collect(),
                )
            })
            .collect();
        assert_eq!(
            flat,
            vec![
                (0, vec![1]),
                (3, vec![0, 1]),
                (5, vec![0, 1]),
                (7, vec![0, 1]),
                (8, vec![0, 0, 1]),
                (10, vec![0, 0, 1]),
            ]
        );
    }

    #[test]
    fn sweep_reads_every_quota() {
        let sweep = QuotaSweep::new(&[2u64, 3, 5, 7], &12).unwrap();
        assert!(sweep.homotopy_type(&2).unwrap().is_empty());
        let at8 = sweep.homotopy_type(&8).unwrap();
        assert_eq!(at8.signature().unwrap().count_u64(0), 1);
        assert!(sweep.homotopy_type(&13).is_err());
    }

    #[test]
    fn rejects_non_minimal_vertex() {
        assert!(QuotaSweep::with_min_vertex(&[2u64, 3], &5, 1).is_err());
    }
}
