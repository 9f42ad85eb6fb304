use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

/// Sphere dimensions of a bouquet, with multiplicity.
///
/// The count in dimension `j` is the reduced rational Betti number in degree
/// `j`. Only nonzero counts are stored; the empty signature is a point.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BouquetSignature {
    counts: BTreeMap<usize, BigUint>,
}

impl BouquetSignature {
    /// The contractible bouquet (a single point).
    pub fn point() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut map = BTreeMap::new();
        for (dim, c) in counts {
            if !c.is_zero() {
                *map.entry(dim).or_insert_with(BigUint::zero) += c;
            }
        }
        BouquetSignature { counts: map }
    }

    pub fn count(&self, dim: usize) -> BigUint {
        self.counts.get(&dim).cloned().unwrap_or_default()
    }

    pub fn count_u64(&self, dim: usize) -> u64 {
        self.counts.get(&dim).and_then(|c| c.to_u64()).unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(d, c)| (*d, c))
    }

    pub fn total_spheres(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn is_contractible(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn top_dimension(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// `1 + sum_j (-1)^j b_j`: the base point plus one cell per sphere.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::from(1);
        for (dim, c) in &self.counts {
            let c = BigInt::from(c.clone());
            if dim % 2 == 0 {
                chi += c;
            } else {
                chi -= c;
            }
        }
        chi
    }

    /// Compact JSON object `{"dim":count,...}`.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .counts
            .iter()
            .map(|(d, c)| format!("\"{d}\":{c}"))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

impl fmt::Display for BouquetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "point");
        }
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(d, c)| format!("{c}×S^{d}"))
            .collect();
        write!(f, "{}", parts.join(" ∨ "))
    }
}

/// Homotopy type of a scalar quota complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyType {
    /// The quota does not exceed any vertex weight, so there are no faces.
    Empty,
    Bouquet(BouquetSignature),
}

impl HomotopyType {
    pub fn signature(&self) -> Option<&BouquetSignature> {
        match self {
            HomotopyType::Empty => None,
            HomotopyType::Bouquet(b) => Some(b),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, HomotopyType::Empty)
    }

    /// Euler characteristic, zero for the empty complex.
    pub fn euler_characteristic(&self) -> BigInt {
        match self {
            HomotopyType::Empty => BigInt::zero(),
            HomotopyType::Bouquet(b) => b.euler_characteristic(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_and_json() {
        let b = BouquetSignature::from_counts([
            (0, BigUint::from(2u32)),
            (1, BigUint::from(1u32)),
            (3, BigUint::zero()),
        ]);
        assert_eq!(b.euler_characteristic(), BigInt::from(2));
        assert_eq!(b.to_json(), r#"{"0":2,"1":1}"#);
        assert_eq!(b.top_dimension(), Some(1));
        assert_eq!(BouquetSignature::point().euler_characteristic(), BigInt::from(1));
        assert_eq!(HomotopyType::Empty.euler_characteristic(), BigInt::zero());
    }
}
