use num_bigint::BigUint;
use num_traits::Zero;

use super::SequenceSpec;
use crate::count::{self, Counter};
use crate::error::{Error, Result};

/// `s[i][q]` for `0 <= i <= i_max`, `0 <= q <= q_max`.
#[derive(Debug, Clone)]
pub struct FaceCountTable {
    v1: u64,
    q_max: u64,
    i_max: usize,
    s: Vec<Vec<BigUint>>,
    /// `sum_j s_j(q)` over every cardinality, not just up to `i_max`.
    totals: Vec<BigUint>,
    max_dimension: usize,
    truncation_valid_q: u64,
}

impl FaceCountTable {
    pub fn v1(&self) -> u64 {
        self.v1
    }

    pub fn q_max(&self) -> u64 {
        self.q_max
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    /// Largest `i` with `s_i(q_max) > 0`, whether or not it is tabulated.
    pub fn max_dimension(&self) -> usize {
        self.max_dimension
    }

    pub fn truncation_valid_q(&self) -> u64 {
        self.truncation_valid_q
    }

    /// `s_i(q)`, zero for `q <= 0` and for `i > i_max`.
    pub fn s(&self, i: usize, q: i64) -> BigUint {
        if q <= 0 || i > self.i_max {
            return BigUint::zero();
        }
        self.s[i][(q as u64).min(self.q_max) as usize].clone()
    }

    pub fn s_ref(&self, i: usize, q: u64) -> &BigUint {
        &self.s[i][q as usize]
    }

    pub fn total(&self, q: i64) -> BigUint {
        if q <= 0 {
            return BigUint::zero();
        }
        self.totals[(q as u64).min(self.q_max) as usize].clone()
    }
}

/// Exact `s_i(q)` by one knapsack pass per element over (cardinality, sum).
pub fn count_table(spec: &SequenceSpec, q_max: u64, i_max: usize) -> Result<FaceCountTable> {
    let v1 = spec.v1();
    if q_max <= v1 {
        return Err(Error::input(format!("q_max {q_max} must exceed v1 = {v1}")));
    }
    if spec.complete_through() < q_max - 1 {
        return Err(Error::input(format!(
            "sequence prefix is complete through {} but every member below {q_max} \
             (through {}) is required",
            spec.complete_through(),
            q_max - 1
        )));
    }
    let others: Vec<u64> = spec.elements()[1..]
        .iter()
        .copied()
        .filter(|&v| v < q_max)
        .collect();
    let mut max_card = 0usize;
    let mut acc = 0u64;
    for &v in &others {
        acc += v;
        if acc >= q_max {
            break;
        }
        max_card += 1;
    }
    let cards = (i_max + 1).min(max_card);
    let width = q_max as usize;
    let exact = count::with_fallback(
        || exact_counts::<u128>(&others, cards, width),
        || exact_counts::<BigUint>(&others, cards, width),
    );
    let all = count::with_fallback(
        || all_counts::<u128>(&others, width),
        || all_counts::<BigUint>(&others, width),
    );

    let mut s = vec![vec![BigUint::zero(); width + 1]; i_max + 1];
    for (i, row) in s.iter_mut().enumerate().take(cards) {
        let mut running = BigUint::zero();
        for q in 1..=width {
            running += &exact[i + 1][q - 1];
            row[q] = running.clone();
        }
    }
    let mut totals = vec![BigUint::zero(); width + 1];
    let mut running = BigUint::zero();
    for q in 1..=width {
        running += &all[q - 1];
        totals[q] = running.clone();
    }
    // the empty set has sum 0 < q for every q >= 1
    for t in totals.iter_mut().skip(1) {
        *t -= 1u32;
    }
    Ok(FaceCountTable {
        v1,
        q_max,
        i_max,
        s,
        totals,
        max_dimension: max_card.saturating_sub(1),
        truncation_valid_q: q_max,
    })
}

/// `exact[k][sigma]`: number of `k`-subsets with sum exactly `sigma < width`.
fn exact_counts<C: Counter>(elements: &[u64], max_k: usize, width: usize) -> Option<Vec<Vec<BigUint>>> {
    let mut table = vec![vec![C::zero(); width]; max_k + 1];
    table[0][0] = C::one();
    for &v in elements {
        let v = v as usize;
        for k in (1..=max_k).rev() {
            let (lo, hi) = table.split_at_mut(k);
            let prev = &lo[k - 1];
            let cur = &mut hi[0];
            for sigma in (v..width).rev() {
                if !prev[sigma - v].is_zero() {
                    cur[sigma] = count::add(&cur[sigma], &prev[sigma - v])?;
                }
            }
        }
    }
    Some(
        table
            .into_iter()
            .map(|row| row.into_iter().map(Counter::into_big).collect())
            .collect(),
    )
}

/// Number of subsets (any size, including empty) with sum exactly `sigma`.
fn all_counts<C: Counter>(elements: &[u64], width: usize) -> Option<Vec<BigUint>> {
    let mut row = vec![C::zero(); width];
    row[0] = C::one();
    for &v in elements {
        let v = v as usize;
        for sigma in (v..width).rev() {
            if !row[sigma - v].is_zero() {
                row[sigma] = count::add(&row[sigma], &row[sigma - v])?;
            }
        }
    }
    Some(row.into_iter().map(Counter::into_big).collect())
}

/// `h[i][q] = s[i][q] - s[i][q - v1]`.
#[derive(Debug, Clone)]
pub struct HomologyTable {
    v1: u64,
    q_max: u64,
    h: Vec<Vec<BigUint>>,
    totals: Vec<BigUint>,
}

impl HomologyTable {
    pub fn v1(&self) -> u64 {
        self.v1
    }

    pub fn q_max(&self) -> u64 {
        self.q_max
    }

    pub fn i_max(&self) -> usize {
        self.h.len() - 1
    }

    pub fn h(&self, i: usize, q: u64) -> Result<&BigUint> {
        self.h
            .get(i)
            .and_then(|row| row.get(q as usize))
            .ok_or_else(|| Error::input(format!("(i={i}, q={q}) outside the homology table")))
    }

    /// `sum_j h_j(q)` over every dimension.
    pub fn total(&self, q: u64) -> &BigUint {
        &self.totals[q as usize]
    }
}

pub fn homology_table(t: &FaceCountTable, v1: u64) -> Result<HomologyTable> {
    if v1 != t.v1 {
        return Err(Error::input(format!(
            "table was built with v1 = {}, not {v1}",
            t.v1
        )));
    }
    let qs = t.q_max as i64;
    let h = (0..=t.i_max)
        .map(|i| {
            (0..=qs)
                .map(|q| t.s(i, q) - t.s(i, q - v1 as i64))
                .collect()
        })
        .collect();
    let totals = (0..=qs).map(|q| t.total(q) - t.total(q - v1 as i64)).collect();
    Ok(HomologyTable { v1, q_max: t.q_max, h, totals })
}

/// Quotas in `[q_lo, q_hi]` with `h_i(q) = 0`.
pub fn goldbach_scan(h: &HomologyTable, i: usize, q_lo: u64, q_hi: u64) -> Result<Vec<u64>> {
    if q_lo > q_hi || q_hi > h.q_max || i > h.i_max() {
        return Err(Error::input(format!(
            "scan range i={i}, [{q_lo}, {q_hi}] not inside the table (i <= {}, q <= {})",
            h.i_max(),
            h.q_max
        )));
    }
    Ok((q_lo..=q_hi)
        .filter(|&q| h.h[i][q as usize].is_zero())
        .collect())
}
