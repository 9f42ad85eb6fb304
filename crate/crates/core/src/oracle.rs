//! Explicit simplicial complexes and their reduced rational homology.
//!
//! This is the slow reference: faces are listed one by one and Betti numbers
//! come from exact ranks of boundary matrices. Ranks use fraction-free sparse
//! elimination, first in `i128` and again in `BigInt` if an entry overflows.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::quota::{BouquetSignature, Face, HomotopyType, ScalarQuotaSystem};
use crate::weight::Weight;

/// Largest vertex set [`enumerate_complex`] will expand.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

/// A downward-closed set of faces on `vertex_count` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitComplex {
    vertex_count: usize,
    faces: BTreeSet<Face>,
}

impl ExplicitComplex {
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            if f.max_vertex() >= vertex_count {
                return Err(Error::input(format!("face {:?} out of range", f.vertices())));
            }
            if let Some(missing) = f.boundary().find(|g| !faces.contains(g)) {
                return Err(Error::input(format!(
                    "not downward closed: {:?} lacks {:?}",
                    f.vertices(),
                    missing.vertices()
                )));
            }
        }
        Ok(ExplicitComplex { vertex_count, faces })
    }

    /// The complex generated by `facets`.
    pub fn from_facets(vertex_count: usize, facets: &[Face]) -> Result<Self> {
        Self::from_faces(vertex_count, facets.iter().flat_map(|f| f.subfaces()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(Face::dimension).max()
    }

    fn faces_of_dim(&self, dim: usize) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.dimension() == dim).collect()
    }

    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dimension().map_or(0, |d| d + 1)];
        for f in &self.faces {
            counts[f.dimension()] += 1;
        }
        counts
    }

    /// Rows are `dim`-faces, columns `(dim-1)`-faces, both in sorted order.
    /// Entry `(-1)^i` for the face obtained by dropping vertex `i`.
    pub fn boundary_matrix(&self, dim: usize) -> Vec<Vec<(usize, i64)>> {
        if dim == 0 {
            return Vec::new();
        }
        let lower: HashMap<&Face, usize> = self
            .faces_of_dim(dim - 1)
            .into_iter()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        self.faces_of_dim(dim)
            .into_iter()
            .map(|f| {
                let mut row: Vec<(usize, i64)> = f
                    .boundary()
                    .enumerate()
                    .map(|(i, g)| (lower[&g], if i % 2 == 0 { 1 } else { -1 }))
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }

    /// Writes the boundary matrix in `row,col,value` triplets with a header.
    pub fn write_boundary_csv(&self, dim: usize, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "row,col,value")?;
        for (r, row) in self.boundary_matrix(dim).iter().enumerate() {
            for (c, v) in row {
                writeln!(out, "{r},{c},{v}")?;
            }
        }
        Ok(())
    }

    /// Reduced Betti numbers over the rationals.
    pub fn betti_numbers(&self) -> Result<BettiProfile> {
        let Some(top) = self.dimension() else {
            return Err(Error::input("homology of the empty complex is not reduced-defined here"));
        };
        let counts = self.face_counts();
        // rank of the augmentation C_0 -> Q is 1 for a nonempty complex
        let mut ranks = vec![1usize];
        for dim in 1..=top {
            ranks.push(rank(&self.boundary_matrix(dim)));
        }
        ranks.push(0);
        let reduced = (0..=top)
            .map(|j| (j, counts[j] - ranks[j] - ranks[j + 1]))
            .filter(|&(_, b)| b > 0)
            .collect();
        Ok(BettiProfile { reduced_betti: reduced })
    }
}

/// All faces of a scalar quota complex, by exhaustive enumeration.
pub fn enumerate_complex<W: Weight>(sys: &ScalarQuotaSystem<W>) -> Result<ExplicitComplex> {
    if sys.len() > MAX_ENUMERATION_VERTICES {
        return Err(Error::capacity(format!(
            "{} vertices exceeds the enumeration limit of {MAX_ENUMERATION_VERTICES}",
            sys.len()
        )));
    }
    let n = sys.len();
    let mut faces = BTreeSet::new();
    for mask in 1u32..(1u32 << n) {
        let verts: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let face = Face::new(verts)?;
        if sys.is_face(&face)? {
            faces.insert(face);
        }
    }
    Ok(ExplicitComplex { vertex_count: n, faces })
}

/// Nonzero reduced Betti numbers by dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiProfile {
    pub reduced_betti: BTreeMap<usize, usize>,
}

impl BettiProfile {
    pub fn get(&self, dim: usize) -> usize {
        self.reduced_betti.get(&dim).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 + self
            .reduced_betti
            .iter()
            .map(|(&j, &b)| if j % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum::<i64>()
    }

    pub fn matches(&self, signature: &BouquetSignature) -> bool {
        let theirs: BTreeMap<usize, usize> = signature
            .iter()
            .map(|(d, c)| (d, c.to_usize().unwrap_or(usize::MAX)))
            .collect();
        theirs == self.reduced_betti
    }

    pub fn matches_type(&self, ty: &HomotopyType) -> bool {
        ty.signature().is_some_and(|s| self.matches(s))
    }

    pub fn to_signature(&self) -> BouquetSignature {
        BouquetSignature::from_counts(
            self.reduced_betti.iter().map(|(&d, &b)| (d, BigUint::from(b))),
        )
    }
}

/// Rank over the rationals of a sparse integer matrix given by rows.
pub fn rank(rows: &[Vec<(usize, i64)>]) -> usize {
    let wide = |r: &Vec<(usize, i64)>| r.iter().map(|&(c, v)| (c, v as i128)).collect();
    if let Some(r) = rank_with::<i128>(rows.iter().map(wide).collect()) {
        return r;
    }
    let big = |r: &Vec<(usize, i64)>| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect();
    rank_with::<BigInt>(rows.iter().map(big).collect()).expect("BigInt never overflows")
}

type SparseRow<T> = Vec<(usize, T)>;

fn rank_with<T>(rows: Vec<SparseRow<T>>) -> Option<usize>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut pivots: HashMap<usize, SparseRow<T>> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        while let Some((col, lead)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(p) => row = eliminate(&p[0].1, &row, &lead, p)?,
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// `b*row - a*pivot`, divided by the content of the result.
fn eliminate<T>(b: &T, row: &SparseRow<T>, a: &T, pivot: &SparseRow<T>) -> Option<SparseRow<T>>
where
    T: Clone + Integer + Signed + CheckedMul + CheckedSub,
{
    let mut out: SparseRow<T> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            let v = b.checked_mul(&row[i].1)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_pivot {
            let v = T::zero().checked_sub(&a.checked_mul(&pivot[j].1)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = b
                .checked_mul(&row[i].1)?
                .checked_sub(&a.checked_mul(&pivot[j].1)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    let content = out.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in out.iter_mut() {
            *v = v.div_floor(&content);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facets(list: &[&[usize]]) -> Vec<Face> {
        list.iter().map(|v| Face::new(v.to_vec()).unwrap()).collect()
    }

    #[test]
    fn quota_examples() {
        let boundary = enumerate_complex(&ScalarQuotaSystem::new(vec![2u64, 3, 5], 9).unwrap())
            .unwrap();
        assert_eq!(boundary.face_counts(), vec![3, 3]);
        assert_eq!(boundary.betti_numbers().unwrap().reduced_betti, BTreeMap::from([(1, 1)]));

        let solid = enumerate_complex(&ScalarQuotaSystem::new(vec![2u64, 3, 5], 11).unwrap())
            .unwrap();
        assert_eq!(solid.face_counts(), vec![3, 3, 1]);
        assert!(solid.betti_numbers().unwrap().reduced_betti.is_empty());

        let empty = enumerate_complex(&ScalarQuotaSystem::new(vec![2u64, 3], 2).unwrap()).unwrap();
        assert!(empty.is_empty());
        assert!(empty.betti_numbers().is_err());
    }

    #[test]
    fn two_points() {
        let c = ExplicitComplex::from_facets(2, &facets(&[&[0], &[1]])).unwrap();
        assert_eq!(c.betti_numbers().unwrap().reduced_betti, BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn two_sphere_and_torus() {
        // boundary of the tetrahedron
        let sphere = ExplicitComplex::from_facets(
            4,
            &facets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
        )
        .unwrap();
        assert_eq!(sphere.betti_numbers().unwrap().reduced_betti, BTreeMap::from([(2, 1)]));

        // 7-vertex torus
        let mut tri = Vec::new();
        for i in 0..7 {
            tri.push(Face::from_unsorted(vec![i, (i + 1) % 7, (i + 3) % 7]).unwrap());
            tri.push(Face::from_unsorted(vec![i, (i + 2) % 7, (i + 3) % 7]).unwrap());
        }
        let torus = ExplicitComplex::from_facets(7, &tri).unwrap();
        let b = torus.betti_numbers().unwrap();
        assert_eq!(b.reduced_betti, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(b.euler_characteristic(), 0);
    }

    #[test]
    fn rejects_non_closed() {
        let bad = ExplicitComplex::from_faces(3, facets(&[&[0, 1], &[0]]));
        assert!(bad.is_err());
    }

    #[test]
    fn rank_needs_rational_pivots() {
        // rows (2,1) and (1,2) are independent over Q
        assert_eq!(rank(&[vec![(0, 2), (1, 1)], vec![(0, 1), (1, 2)]]), 2);
        assert_eq!(rank(&[vec![(0, 2), (1, 4)], vec![(0, 1), (1, 2)]]), 1);
        assert_eq!(rank(&[vec![(0, i64::MAX), (1, 3)], vec![(0, 3), (1, i64::MAX)]]), 2);
    }

    #[test]
    fn boundary_csv() {
        let c = ExplicitComplex::from_facets(2, &facets(&[&[0, 1]])).unwrap();
        let mut buf = Vec::new();
        c.write_boundary_csv(1, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "row,col,value\n0,0,-1\n0,1,1\n");
    }
}
