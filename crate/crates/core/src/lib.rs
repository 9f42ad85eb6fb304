//! Topology of quota complexes.
//!
//! A quota complex is the simplicial complex on a set of weighted vertices
//! whose faces are exactly the vertex sets of total weight strictly below a
//! quota. Scalar quota complexes are homotopy equivalent to bouquets of
//! spheres, with one sphere per *shell face*: a face avoiding a fixed
//! minimal-weight vertex whose weight falls in `[q - w_min, q)`. This crate
//! computes those bouquets exactly and uses them on the arithmetic families
//! built from primes, squares, cubes and divisors.
//!
//! Modules:
//!
//! * [`quota`]: scalar and vector quota systems, shell faces, bouquet
//!   signatures, Euler characteristics, shell vertices and the realization of
//!   arbitrary simplicial complexes as vector quota complexes.
//! * [`oracle`]: explicit complexes and rational simplicial homology, the
//!   slow ground truth the bouquet computation is checked against.
//! * [`seq`]: counting engines for quota complexes on integer sequences.
//! * [`zeta`]: Möbius and Mertens machinery, Euler characteristics of the
//!   prime and log-prime complexes.
//! * [`divisor`]: divisor complexes and the perfect-number scan.
//! * [`series`]: truncated integer power series and the Euler-characteristic
//!   generating function.
//! * [`random`]: random scalar quota complexes, density convolutions and
//!   Monte Carlo estimates.

pub mod count;
pub mod divisor;
pub mod error;
pub mod format;
pub mod oracle;
pub mod primes;
pub mod quota;
pub mod random;
pub mod seq;
pub mod series;
pub mod weight;
pub mod zeta;

pub use error::{Error, Result};
pub use quota::{
    BouquetSignature, Face, HomotopyType, ScalarQuotaSystem, ShellMode, VectorQuotaSystem,
};
pub use weight::{Rational, Weight};
