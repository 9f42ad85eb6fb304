//! Exact subset counters.
//!
//! Counting tables first run in `u128` with checked addition and are redone
//! in `BigUint` only when a count overflows, so the common small cases stay
//! allocation-free while every result is exact.

use std::ops::Sub;

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedAdd, CheckedSub, One, Zero};

/// Additive counter usable in the subset-sum tables.
pub trait Counter: Clone + Zero + One + CheckedAdd + Send + Sync {
    fn into_big(self) -> BigUint;
}

impl Counter for u128 {
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Counter for BigUint {
    fn into_big(self) -> BigUint {
        self
    }
}

/// Signed counter for alternating sums.
pub trait SignedCounter: Clone + Zero + One + CheckedAdd + CheckedSub + Send + Sync {
    fn into_big(self) -> BigInt;
}

impl SignedCounter for i128 {
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl SignedCounter for BigInt {
    fn into_big(self) -> BigInt {
        self
    }
}

/// Runs `f` with `u128` counters, falling back to `BigUint` on overflow.
pub fn with_fallback<R>(
    fast: impl FnOnce() -> Option<R>,
    exact: impl FnOnce() -> Option<R>,
) -> R {
    fast().or_else(exact).expect("arbitrary-precision counter cannot overflow")
}

/// `a + b`, or `None` on overflow.
#[inline]
pub fn add<C: CheckedAdd>(a: &C, b: &C) -> Option<C> {
    a.checked_add(b)
}

/// Saturating-free difference of two exact unsigned counts known to satisfy `a >= b`.
pub fn diff(a: &BigUint, b: &BigUint) -> BigUint {
    debug_assert!(a >= b);
    a.sub(b)
}
