#![allow(dead_code)]

use quotatope::{Face, ScalarQuotaSystem};
use rand::Rng;

/// Integer system with `1..=max_vertices` vertices, weights in `1..=max_weight`
/// and a quota anywhere from below the lightest vertex to above the total.
pub fn random_scalar(rng: &mut impl Rng, max_vertices: usize, max_weight: u64) -> ScalarQuotaSystem<u64> {
    let n = rng.random_range(1..=max_vertices);
    let weights: Vec<u64> = (0..n).map(|_| rng.random_range(1..=max_weight)).collect();
    let total: u64 = weights.iter().sum();
    let quota = rng.random_range(1..=total + 1);
    ScalarQuotaSystem::new(weights, quota).unwrap()
}

/// Maximal faces of the complex generated by a few random vertex sets.
pub fn random_facets(rng: &mut impl Rng, vertex_count: usize) -> Vec<Face> {
    let k = rng.random_range(1..=6);
    let mut sets: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let mut s: Vec<usize> = (0..vertex_count).filter(|_| rng.random_bool(0.4)).collect();
            if s.is_empty() {
                s.push(rng.random_range(0..vertex_count));
            }
            s
        })
        .collect();
    sets.sort();
    sets.dedup();
    let faces: Vec<Face> = sets.into_iter().map(|s| Face::new(s).unwrap()).collect();
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g != *f && f.is_subface_of(g)))
        .cloned()
        .collect()
}

/// All `(i+1)`-subsets of `elements` with sum below `q`, counted by brute force.
pub fn brute_subsets_below(elements: &[u64], size: usize, q: u64) -> u64 {
    fn go(el: &[u64], size: usize, budget: u64) -> u64 {
        if size == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &v) in el.iter().enumerate() {
            if v < budget {
                total += go(&el[i + 1..], size - 1, budget - v);
            }
        }
        total
    }
    if q == 0 {
        return 0;
    }
    go(elements, size, q)
}
