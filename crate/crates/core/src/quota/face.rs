use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simplex given by strictly increasing vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("a face needs at least one vertex"));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(format!(
                "face vertices must be strictly increasing, got {vertices:?}"
            )));
        }
        Ok(Face(vertices))
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        Face::new(vertices)
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> usize {
        *self.0.last().expect("faces are nonempty")
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Codimension-one faces, `i`-th entry omitting the `i`-th vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All nonempty subfaces, including the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Face(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Face::new(v)
    }
}

impl From<Face> for Vec<usize> {
    fn from(f: Face) -> Self {
        f.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_order() {
        assert!(Face::new(vec![0, 2, 5]).is_ok());
        assert!(Face::new(vec![2, 0]).is_err());
        assert!(Face::new(vec![1, 1]).is_err());
        assert!(Face::new(vec![]).is_err());
        assert_eq!(Face::from_unsorted(vec![3, 1, 3]).unwrap().vertices(), &[1, 3]);
    }

    #[test]
    fn boundary_and_subfaces() {
        let f = Face::new(vec![0, 1, 2]).unwrap();
        let b: Vec<_> = f.boundary().map(Vec::from).collect();
        assert_eq!(b, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert_eq!(f.subfaces().count(), 7);
        assert_eq!(Face::new(vec![4]).unwrap().boundary().count(), 0);
    }
}
