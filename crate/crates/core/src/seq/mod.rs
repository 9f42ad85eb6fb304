//! Quota complexes on increasing integer sequences.
//!
//! For a sequence `v_1 < v_2 < ...` and quota `q`, the complex `V(q)` has the
//! members below `q` as vertices. `s_i(q)` counts `(i+1)`-subsets of
//! `V \ {v_1}` with sum below `q`, and the reduced homology in degree `i` is
//! `h_i(q) = s_i(q) - s_i(q - v_1)`.

mod fit;
mod heuristic;
mod ratio;
mod table;

pub use fit::{slope_fit, FitTransform, LinearFit};
pub use heuristic::{heuristic_profile, CriticalPoint, HeuristicProfile, Interpolant};
pub use ratio::{ratio_series, RatioSeries};
pub use table::{count_table, goldbach_scan, homology_table, FaceCountTable, HomologyTable};

use crate::error::{Error, Result};
use crate::primes;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Primes,
    Squares,
    Cubes,
    Custom,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Primes => "primes",
            SequenceKind::Squares => "squares",
            SequenceKind::Cubes => "cubes",
            SequenceKind::Custom => "custom",
        }
    }
}

impl std::str::FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primes" => Ok(SequenceKind::Primes),
            "squares" => Ok(SequenceKind::Squares),
            "cubes" => Ok(SequenceKind::Cubes),
            "custom" => Ok(SequenceKind::Custom),
            other => Err(Error::input(format!("unknown sequence kind {other:?}"))),
        }
    }
}

/// A finite prefix of a strictly increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    kind: SequenceKind,
    elements: Vec<u64>,
    /// Every member `<= complete_through` is listed.
    complete_through: u64,
}

impl SequenceSpec {
    /// All members of a built-in sequence strictly below `bound`.
    pub fn below(kind: SequenceKind, bound: u64) -> Result<Self> {
        let elements = match kind {
            SequenceKind::Primes => primes::primes_below(bound),
            SequenceKind::Squares => primes::powers_below(2, bound),
            SequenceKind::Cubes => primes::powers_below(3, bound),
            SequenceKind::Custom => {
                return Err(Error::input("custom sequences need an explicit element list"))
            }
        };
        if elements.is_empty() {
            return Err(Error::input(format!(
                "no {} below {bound}",
                kind.name()
            )));
        }
        Ok(SequenceSpec {
            kind,
            elements,
            complete_through: bound.saturating_sub(1),
        })
    }

    /// The first `count` members of a built-in sequence. The prefix is
    /// complete up to one less than the next member.
    pub fn first(kind: SequenceKind, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::input("at least one element is required"));
        }
        let mut elements = match kind {
            SequenceKind::Primes => primes::first_primes(count + 1),
            SequenceKind::Squares => (1..=count as u64 + 1).map(|b| b * b).collect(),
            SequenceKind::Cubes => (1..=count as u64 + 1).map(|b| b * b * b).collect(),
            SequenceKind::Custom => {
                return Err(Error::input("custom sequences need an explicit element list"))
            }
        };
        let next = elements.pop().expect("count + 1 elements");
        Ok(SequenceSpec { kind, elements, complete_through: next - 1 })
    }

    pub fn custom(elements: Vec<u64>, complete_through: u64) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::input("a sequence needs at least one element"));
        }
        if elements[0] == 0 || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(
                "sequence elements must be strictly increasing positive integers",
            ));
        }
        Ok(SequenceSpec {
            kind: SequenceKind::Custom,
            elements,
            complete_through,
        })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn v1(&self) -> u64 {
        self.elements[0]
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn complete_through(&self) -> u64 {
        self.complete_through
    }
}
