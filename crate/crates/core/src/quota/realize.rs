//! Every finite simplicial complex as a vector quota complex.
//!
//! Facet `F_i` gets its own coordinate: vertices of `F_i` weigh 1, all other
//! vertices weigh `|F_i| + 1`, and the quota is `|F_i| + 1`. Coordinate `i`
//! then admits exactly the subsets of `F_i`.

use super::face::Face;
use super::vector::VectorQuotaSystem;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Realization {
    /// The integer construction as is.
    #[default]
    Plain,
    /// Perturb and rescale so that every weight coordinate and every quota
    /// coordinate is a distinct positive integer.
    DistinctEntries,
}

fn validate(facets: &[Face], vertex_count: usize) -> Result<()> {
    if facets.is_empty() {
        return Err(Error::input("at least one facet is required"));
    }
    for f in facets {
        if f.max_vertex() >= vertex_count {
            return Err(Error::input(format!(
                "facet {:?} uses a vertex beyond {vertex_count}",
                f.vertices()
            )));
        }
    }
    for (i, a) in facets.iter().enumerate() {
        for (j, b) in facets.iter().enumerate() {
            if i != j && a.is_subface_of(b) {
                return Err(Error::input(format!(
                    "facet {:?} is contained in facet {:?}",
                    a.vertices(),
                    b.vertices()
                )));
            }
        }
    }
    Ok(())
}

/// Vector quota system of weight dimension `facets.len()` whose complex is
/// the one generated by `facets`.
pub fn complex_to_quota(
    facets: &[Face],
    vertex_count: usize,
    realization: Realization,
) -> Result<VectorQuotaSystem<u64>> {
    validate(facets, vertex_count)?;
    let s = facets.len();
    let mut weights = vec![vec![0u64; s]; vertex_count];
    let mut quota = vec![0u64; s];
    for (i, f) in facets.iter().enumerate() {
        let big = f.len() as u64 + 1;
        quota[i] = big;
        for (v, w) in weights.iter_mut().enumerate() {
            w[i] = if f.contains(v) { 1 } else { big };
        }
    }
    if realization == Realization::DistinctEntries {
        distinct_entries(&mut weights, &mut quota);
    }
    VectorQuotaSystem::new(weights, quota)
}

/// Scales by `L = 8n(ns + s + 1)` and adds distinct even offsets. Each weight
/// moves by less than `1/(4n)` of a unit, so a face sum moves by less than a
/// quarter; each quota drops to `q - 1/2` plus less than a quarter. Integer
/// face sums therefore keep their side of every quota.
fn distinct_entries(weights: &mut [Vec<u64>], quota: &mut [u64]) {
    let n = weights.len().max(1) as u64;
    let s = quota.len() as u64;
    let entries = n * s + s;
    let scale = 8 * n * (entries + 1);
    let mut k = 0u64;
    for w in weights.iter_mut() {
        for x in w.iter_mut() {
            k += 1;
            *x = *x * scale + 2 * k;
        }
    }
    for q in quota.iter_mut() {
        k += 1;
        *q = *q * scale - scale / 2 + 2 * k;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn faces(list: &[&[usize]]) -> Vec<Face> {
        list.iter().map(|v| Face::new(v.to_vec()).unwrap()).collect()
    }

    fn closure(facets: &[Face]) -> BTreeSet<Face> {
        facets.iter().flat_map(|f| f.subfaces()).collect()
    }

    #[test]
    fn triangle_boundary() {
        let facets = faces(&[&[0, 1], &[1, 2], &[0, 2]]);
        for mode in [Realization::Plain, Realization::DistinctEntries] {
            let sys = complex_to_quota(&facets, 3, mode).unwrap();
            assert_eq!(sys.weight_dimension(), 3);
            let got: BTreeSet<Face> = sys.faces().into_iter().collect();
            assert_eq!(got, closure(&facets));
            assert_eq!(got.len(), 6);
        }
    }

    #[test]
    fn single_simplex() {
        let facets = faces(&[&[0, 1, 2]]);
        let sys = complex_to_quota(&facets, 3, Realization::Plain).unwrap();
        assert_eq!(sys.weight_dimension(), 1);
        assert_eq!(sys.weights(), &[vec![1], vec![1], vec![1]]);
        assert_eq!(sys.quota(), &[4]);
        assert_eq!(sys.faces().len(), 7);
    }

    #[test]
    fn disjoint_edges() {
        let facets = faces(&[&[0, 1], &[2, 3]]);
        let sys = complex_to_quota(&facets, 4, Realization::Plain).unwrap();
        let got: BTreeSet<Face> = sys.faces().into_iter().collect();
        assert_eq!(got, closure(&facets));
        assert!(!sys.contains(&Face::new(vec![1, 2]).unwrap()).unwrap());
    }

    #[test]
    fn distinct_entries_are_distinct() {
        let facets = faces(&[&[0, 1], &[1, 2, 3], &[0, 3]]);
        let sys = complex_to_quota(&facets, 5, Realization::DistinctEntries).unwrap();
        let mut all: Vec<u64> = sys.weights().iter().flatten().copied().collect();
        all.extend_from_slice(sys.quota());
        let unique: BTreeSet<u64> = all.iter().copied().collect();
        assert_eq!(unique.len(), all.len());
        let got: BTreeSet<Face> = sys.faces().into_iter().collect();
        assert_eq!(got, closure(&facets));
    }

    #[test]
    fn rejects_contained_facets() {
        let facets = faces(&[&[0, 1], &[0, 1, 2]]);
        assert!(complex_to_quota(&facets, 3, Realization::Plain).is_err());
        let dup = faces(&[&[0, 1], &[0, 1]]);
        assert!(complex_to_quota(&dup, 3, Realization::Plain).is_err());
        assert!(complex_to_quota(&faces(&[&[0, 5]]), 3, Realization::Plain).is_err());
        assert!(complex_to_quota(&[], 3, Realization::Plain).is_err());
    }
}
