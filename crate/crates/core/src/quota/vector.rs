use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::face::Face;
use super::scalar::{canonical_min_vertex, ScalarQuotaSystem};
use crate::error::{Error, Result};
use crate::weight::{format_rational, parse_rational, Rational, Weight};

/// Which inequality bounds the shell interval from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShellMode {
    /// `q - w(v_min) <= w(v) < q`, matching the scalar shell-face condition.
    #[default]
    Closed,
    /// `q - w(v_min) < w(v) < q`.
    Strict,
}

/// Upper bound on the Lusternik–Schnirelmann category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CategoryBound {
    AtMost(usize),
    /// The system has shell vertices, so the bound does not apply.
    NotApplicable,
}

/// Vector weights of a common length `s` and a quota vector of length `s`.
/// A vertex set is a face iff it is below quota in at least one coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorQuotaSystem<W> {
    weights: Vec<Vec<W>>,
    quota: Vec<W>,
}

impl<W: Weight> VectorQuotaSystem<W> {
    pub fn new(weights: Vec<Vec<W>>, quota: Vec<W>) -> Result<Self> {
        let s = quota.len();
        if s == 0 {
            return Err(Error::input("weight dimension must be at least 1"));
        }
        for (v, w) in weights.iter().enumerate() {
            if w.len() != s {
                return Err(Error::input(format!(
                    "vertex {v} has {} coordinates, quota has {s}",
                    w.len()
                )));
            }
            if w.iter().any(|x| !x.is_positive_weight()) {
                return Err(Error::input(format!("vertex {v} has a nonpositive coordinate")));
            }
        }
        if quota.iter().any(|x| !x.is_positive_weight()) {
            return Err(Error::input("quota has a nonpositive coordinate"));
        }
        Ok(VectorQuotaSystem { weights, quota })
    }

    pub fn weight_dimension(&self) -> usize {
        self.quota.len()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Vec<W>] {
        &self.weights
    }

    pub fn quota(&self) -> &[W] {
        &self.quota
    }

    /// The scalar system of coordinate `j`.
    pub fn coordinate(&self, j: usize) -> Result<ScalarQuotaSystem<W>> {
        if j >= self.quota.len() {
            return Err(Error::input(format!("coordinate {j} out of range")));
        }
        ScalarQuotaSystem::new(
            self.weights.iter().map(|w| w[j].clone()).collect(),
            self.quota[j].clone(),
        )
    }

    pub fn contains(&self, face: &Face) -> Result<bool> {
        if face.max_vertex() >= self.weights.len() {
            return Err(Error::input("face references a vertex out of range"));
        }
        Ok((0..self.quota.len()).any(|j| {
            let sum = face
                .vertices()
                .iter()
                .fold(W::zero(), |acc, &v| acc + self.weights[v][j].clone());
            sum < self.quota[j]
        }))
    }

    /// Union of the coordinate complexes.
    pub fn faces(&self) -> Vec<Face> {
        let mut all = BTreeSet::new();
        for j in 0..self.quota.len() {
            all.extend(self.coordinate(j).expect("in range").faces());
        }
        all.into_iter().collect()
    }

    /// Vertices that lie in the shell interval of some coordinate, other than
    /// that coordinate's minimal vertex.
    pub fn shell_vertices(&self, mode: ShellMode) -> Vec<usize> {
        let mut out = BTreeSet::new();
        for j in 0..self.quota.len() {
            let column: Vec<&W> = self.weights.iter().map(|w| &w[j]).collect();
            let Some(vmin) = canonical_min_vertex(&column) else {
                continue;
            };
            let q = &self.quota[j];
            let wmin = column[vmin];
            for (v, w) in column.iter().enumerate() {
                if v == vmin || *w >= q {
                    continue;
                }
                let shifted = (*w).clone() + wmin.clone();
                let inside = match mode {
                    ShellMode::Closed => shifted >= *q,
                    ShellMode::Strict => shifted > *q,
                };
                if inside {
                    out.insert(v);
                }
            }
        }
        out.into_iter().collect()
    }

    /// `2s - 1` when there are no shell vertices.
    pub fn category_upper_bound(&self, mode: ShellMode) -> CategoryBound {
        if self.shell_vertices(mode).is_empty() {
            CategoryBound::AtMost(2 * self.weight_dimension() - 1)
        } else {
            CategoryBound::NotApplicable
        }
    }
}

impl<W: Weight> From<ScalarQuotaSystem<W>> for VectorQuotaSystem<W> {
    fn from(s: ScalarQuotaSystem<W>) -> Self {
        VectorQuotaSystem {
            weights: s.weights().iter().map(|w| vec![w.clone()]).collect(),
            quota: vec![s.quota().clone()],
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VectorJson {
    weights: Vec<Vec<String>>,
    quota: Vec<String>,
}

impl VectorQuotaSystem<Rational> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&VectorJson {
            weights: self
                .weights
                .iter()
                .map(|w| w.iter().map(format_rational).collect())
                .collect(),
            quota: self.quota.iter().map(format_rational).collect(),
        })
        .expect("plain strings serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: VectorJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let weights = raw
            .weights
            .iter()
            .map(|w| w.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let quota = raw
            .quota
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights, quota)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(w: &[u64], q: u64) -> VectorQuotaSystem<u64> {
        ScalarQuotaSystem::new(w.to_vec(), q).unwrap().into()
    }

    #[test]
    fn scalar_shell_vertex() {
        assert_eq!(scalar(&[2, 3, 5, 7], 8).shell_vertices(ShellMode::Closed), vec![3]);
        assert!(scalar(&[2, 3, 4], 10).shell_vertices(ShellMode::Closed).is_empty());
    }

    #[test]
    fn strict_mode_excludes_left_endpoint() {
        // 6 = 8 - 2 sits on the closed end of the shell.
        let s = scalar(&[2, 6], 8);
        assert_eq!(s.shell_vertices(ShellMode::Closed), vec![1]);
        assert!(s.shell_vertices(ShellMode::Strict).is_empty());
    }

    #[test]
    fn shell_in_second_coordinate_only() {
        // Coordinate 0: weights {1,2,2}, quota 10, no shell vertex.
        // Coordinate 1: weights {1,2,9}, quota 10, vertex 2 has 9 in [9,10).
        let s = VectorQuotaSystem::new(vec![vec![1u64, 1], vec![2, 2], vec![2, 9]], vec![10, 10])
            .unwrap();
        assert!(s.coordinate(0).unwrap().homotopy_type().signature().unwrap().count_u64(0) == 0);
        assert_eq!(s.shell_vertices(ShellMode::Closed), vec![2]);
        assert_eq!(s.category_upper_bound(ShellMode::Closed), CategoryBound::NotApplicable);
    }

    #[test]
    fn category_bounds() {
        assert_eq!(
            scalar(&[2, 3, 4], 10).category_upper_bound(ShellMode::Closed),
            CategoryBound::AtMost(1)
        );
        let w = vec![vec![1u64, 1, 1]; 3];
        let s = VectorQuotaSystem::new(w, vec![10, 10, 10]).unwrap();
        assert_eq!(s.category_upper_bound(ShellMode::Closed), CategoryBound::AtMost(5));
    }

    #[test]
    fn membership_is_union_of_coordinates() {
        let s = VectorQuotaSystem::new(vec![vec![1u64, 5], vec![5, 1], vec![5, 5]], vec![3, 3])
            .unwrap();
        let f = |v: &[usize]| Face::new(v.to_vec()).unwrap();
        assert!(s.contains(&f(&[0])).unwrap());
        assert!(s.contains(&f(&[1])).unwrap());
        assert!(!s.contains(&f(&[2])).unwrap());
        assert!(!s.contains(&f(&[0, 1])).unwrap());
        assert_eq!(s.faces().len(), 2);
    }

    #[test]
    fn validation() {
        assert!(VectorQuotaSystem::<u64>::new(vec![], vec![]).is_err());
        assert!(VectorQuotaSystem::new(vec![vec![1u64]], vec![1, 2]).is_err());
        assert!(VectorQuotaSystem::new(vec![vec![0u64]], vec![1]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = VectorQuotaSystem::new(
            vec![vec![crate::weight::rational(1, 2), crate::weight::integer(3)]],
            vec![crate::weight::integer(2), crate::weight::integer(4)],
        )
        .unwrap();
        assert_eq!(VectorQuotaSystem::from_json(&s.to_json()).unwrap(), s);
    }
}
