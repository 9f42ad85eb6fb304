//! Scalar and vector quota systems.

mod face;
mod realize;
mod scalar;
mod signature;
mod sweep;
mod vector;

pub use face::Face;
pub use realize::{complex_to_quota, Realization};
pub use scalar::ScalarQuotaSystem;
pub use signature::{BouquetSignature, HomotopyType};
pub use sweep::QuotaSweep;
pub use vector::{CategoryBound, ShellMode, VectorQuotaSystem};
