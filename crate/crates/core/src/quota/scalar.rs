use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::face::Face;
use super::signature::HomotopyType;
use super::sweep::{self, QuotaSweep};
use crate::error::{Error, Result};
use crate::weight::{format_rational, parse_rational, Rational, Weight};

/// Index of the lowest-index vertex of minimal weight.
pub(crate) fn canonical_min_vertex<W: Ord>(weights: &[W]) -> Option<usize> {
    weights
        .iter()
        .enumerate()
        .min_by(|(i, a), (j, b)| a.cmp(b).then(i.cmp(j)))
        .map(|(i, _)| i)
}

/// Positive vertex weights and a positive quota. The complex `X[w : q]` is
/// implicit: a vertex set is a face iff its total weight is strictly below
/// the quota.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarQuotaSystem<W> {
    weights: Vec<W>,
    quota: W,
}

impl<W: Weight> ScalarQuotaSystem<W> {
    pub fn new(weights: Vec<W>, quota: W) -> Result<Self> {
        if let Some(i) = weights.iter().position(|w| !w.is_positive_weight()) {
            return Err(Error::input(format!(
                "weight of vertex {i} is not positive: {:?}",
                weights[i]
            )));
        }
        if !quota.is_positive_weight() {
            return Err(Error::input(format!("quota is not positive: {quota:?}")));
        }
        Ok(ScalarQuotaSystem { weights, quota })
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    pub fn quota(&self) -> &W {
        &self.quota
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Same weights, different quota.
    pub fn with_quota(&self, quota: W) -> Result<Self> {
        Self::new(self.weights.clone(), quota)
    }

    /// The distinguished minimal vertex: lowest index among minimal weights.
    pub fn min_vertex(&self) -> Option<usize> {
        canonical_min_vertex(&self.weights)
    }

    /// True when no vertex is below quota, i.e. the complex has no faces.
    pub fn is_empty_complex(&self) -> bool {
        self.weights.iter().all(|w| *w >= self.quota)
    }

    fn check(&self, face: &Face) -> Result<()> {
        if face.max_vertex() >= self.weights.len() {
            return Err(Error::input(format!(
                "face {:?} references a vertex beyond {}",
                face.vertices(),
                self.weights.len()
            )));
        }
        Ok(())
    }

    pub fn face_weight(&self, face: &Face) -> Result<W> {
        self.check(face)?;
        Ok(face
            .vertices()
            .iter()
            .fold(W::zero(), |acc, &v| acc + self.weights[v].clone()))
    }

    pub fn is_face(&self, face: &Face) -> Result<bool> {
        Ok(self.face_weight(face)? < self.quota)
    }

    /// Shell test against the canonical minimal vertex.
    pub fn is_shell_face(&self, face: &Face) -> Result<bool> {
        let vmin = self
            .min_vertex()
            .ok_or_else(|| Error::input("shell faces need a nonempty vertex set"))?;
        self.is_shell_face_with_min(face, vmin)
    }

    /// `face` avoids `vmin` and `q - w(vmin) <= w(face) < q`.
    pub fn is_shell_face_with_min(&self, face: &Face, vmin: usize) -> Result<bool> {
        let wmin = self
            .weights
            .get(vmin)
            .ok_or_else(|| Error::input("minimal vertex index out of range"))?;
        if face.contains(vmin) {
            self.check(face)?;
            return Ok(false);
        }
        let w = self.face_weight(face)?;
        Ok(w < self.quota && w + wmin.clone() >= self.quota)
    }

    /// Homotopy type via the shell faces of the canonical minimal vertex.
    pub fn homotopy_type(&self) -> HomotopyType {
        match self.min_vertex() {
            None => HomotopyType::Empty,
            Some(v) => self.homotopy_type_with_min(v).expect("canonical vertex is minimal"),
        }
    }

    /// Homotopy type using any chosen vertex of minimal weight.
    pub fn homotopy_type_with_min(&self, vmin: usize) -> Result<HomotopyType> {
        QuotaSweep::with_min_vertex(&self.weights, &self.quota, vmin)?.homotopy_type(&self.quota)
    }

    /// Euler characteristic from the bouquet (zero for the empty complex).
    pub fn euler_characteristic(&self) -> BigInt {
        self.homotopy_type().euler_characteristic()
    }

    /// Number of faces in each dimension, counted directly from all subset
    /// sums below quota (no reference to shells).
    pub fn face_counts(&self) -> Vec<BigInt> {
        let table = sweep::subset_sums(&self.weights, &self.quota);
        let mut per_dim: Vec<BigInt> = Vec::new();
        for (_, counts) in table {
            for (k, c) in counts.into_iter().enumerate().skip(1) {
                if per_dim.len() < k {
                    per_dim.resize(k, BigInt::zero());
                }
                per_dim[k - 1] += BigInt::from(c);
            }
        }
        per_dim
    }

    /// `sum_j (-1)^j c_j` over the face counts.
    pub fn alternating_face_count(&self) -> BigInt {
        self.face_counts()
            .into_iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (j, c)| if j % 2 == 0 { acc + c } else { acc - c })
    }

    /// Every face, listed by depth-first search over weight-sorted vertices.
    /// The output size is the number of faces, so callers bound the input.
    pub fn faces(&self) -> Vec<Face> {
        let mut order: Vec<usize> = (0..self.weights.len()).collect();
        order.sort_by(|&a, &b| self.weights[a].cmp(&self.weights[b]).then(a.cmp(&b)));
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        self.extend_faces(&order, 0, W::zero(), &mut stack, &mut out);
        out.sort();
        out
    }

    fn extend_faces(
        &self,
        order: &[usize],
        from: usize,
        sum: W,
        stack: &mut Vec<usize>,
        out: &mut Vec<Face>,
    ) {
        for pos in from..order.len() {
            let v = order[pos];
            let next = sum.clone() + self.weights[v].clone();
            if next >= self.quota {
                // weights are sorted, so later vertices overshoot too
                break;
            }
            stack.push(v);
            let mut verts = stack.clone();
            verts.sort_unstable();
            out.push(Face::from_sorted_unchecked(verts));
            self.extend_faces(order, pos + 1, next, stack, out);
            stack.pop();
        }
    }

    pub fn map_weights<V: Weight>(&self, f: impl Fn(&W) -> V) -> Result<ScalarQuotaSystem<V>> {
        ScalarQuotaSystem::new(self.weights.iter().map(&f).collect(), f(&self.quota))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    weights: Vec<String>,
    quota: String,
}

impl ScalarQuotaSystem<Rational> {
    /// JSON with weights and quota as exact `"p/q"` strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ScalarJson {
            weights: self.weights.iter().map(format_rational).collect(),
            quota: format_rational(&self.quota),
        })
        .expect("plain strings serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ScalarJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let weights = raw
            .weights
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights, parse_rational(&raw.quota)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{integer, rational};
    use num_bigint::BigUint;

    fn sys(w: &[u64], q: u64) -> ScalarQuotaSystem<u64> {
        ScalarQuotaSystem::new(w.to_vec(), q).unwrap()
    }

    fn face(v: &[usize]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    #[test]
    fn face_weight_examples() {
        let s = sys(&[2, 3, 5], 9);
        assert_eq!(s.face_weight(&face(&[0, 1, 2])).unwrap(), 10);
        assert_eq!(s.face_weight(&face(&[0])).unwrap(), 2);
        let r = ScalarQuotaSystem::new(vec![rational(7, 2), rational(1, 2)], integer(5)).unwrap();
        assert_eq!(r.face_weight(&face(&[0, 1])).unwrap(), integer(4));
        assert!(s.face_weight(&face(&[3])).is_err());
    }

    #[test]
    fn strict_quota_boundary() {
        assert!(sys(&[2, 3, 5], 9).is_face(&face(&[1, 2])).unwrap());
        assert!(!sys(&[2, 3, 5], 8).is_face(&face(&[1, 2])).unwrap());
        assert!(sys(&[2, 3, 5], 11).is_face(&face(&[0, 1, 2])).unwrap());
        assert!(!sys(&[2, 3, 5], 10).is_face(&face(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn shell_face_examples() {
        let s = sys(&[2, 3, 5, 7], 8);
        assert!(s.is_shell_face(&face(&[3])).unwrap());
        assert!(!s.is_shell_face(&face(&[1, 2])).unwrap());
        assert!(!s.is_shell_face(&face(&[0])).unwrap());
        assert!(!s.is_shell_face(&face(&[0, 3])).unwrap());
        let empty: ScalarQuotaSystem<u64> = ScalarQuotaSystem::new(vec![], 3).unwrap();
        assert!(empty.is_shell_face(&face(&[0])).is_err());
    }

    #[test]
    fn bouquet_examples() {
        let b = sys(&[2, 3, 5, 7], 8).homotopy_type();
        assert_eq!(b.signature().unwrap().to_json(), r#"{"0":1}"#);
        // Proper divisors of 6: one circle.
        let d = sys(&[1, 2, 3], 6).homotopy_type();
        assert_eq!(d.signature().unwrap().count(1), BigUint::from(1u32));
        assert_eq!(d.euler_characteristic(), BigInt::zero());
        // Solid triangle and its boundary.
        assert!(sys(&[2, 3, 5], 11).homotopy_type().signature().unwrap().is_contractible());
        assert_eq!(
            sys(&[2, 3, 5], 9).homotopy_type().signature().unwrap().to_json(),
            r#"{"1":1}"#
        );
        assert_eq!(sys(&[2, 3, 5, 7], 8).euler_characteristic(), BigInt::from(2));
    }

    #[test]
    fn empty_complex_is_distinguished() {
        let s = sys(&[4, 5], 4);
        assert!(s.is_empty_complex());
        assert_eq!(s.homotopy_type(), HomotopyType::Empty);
        assert_eq!(s.euler_characteristic(), BigInt::zero());
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(ScalarQuotaSystem::new(vec![0u64, 1], 3).is_err());
        assert!(ScalarQuotaSystem::new(vec![1u64], 0).is_err());
        assert!(ScalarQuotaSystem::new(vec![rational(-1, 2)], integer(1)).is_err());
    }

    #[test]
    fn tie_breaking_picks_lowest_index() {
        assert_eq!(sys(&[3, 2, 2, 5], 9).min_vertex(), Some(1));
    }

    #[test]
    fn faces_listing_matches_counts() {
        let s = sys(&[2, 3, 5], 9);
        let faces = s.faces();
        assert_eq!(faces.len(), 6);
        assert_eq!(s.face_counts(), vec![BigInt::from(3), BigInt::from(3)]);
        assert_eq!(s.alternating_face_count(), BigInt::zero());
    }

    #[test]
    fn json_round_trip() {
        let s = ScalarQuotaSystem::new(vec![rational(7, 2), integer(2)], rational(11, 3)).unwrap();
        let text = s.to_json();
        assert_eq!(text, r#"{"weights":["7/2","2"],"quota":"11/3"}"#);
        assert_eq!(ScalarQuotaSystem::from_json(&text).unwrap(), s);
        assert!(ScalarQuotaSystem::from_json(r#"{"weights":["-1"],"quota":"2"}"#).is_err());
    }
}
