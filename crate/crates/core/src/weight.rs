//! Vertex weights.
//!
//! Face membership is decided by a strict inequality and shell membership by a
//! half-open interval, so weights are exact: integers or arbitrary-precision
//! rationals. Any totally ordered additive type qualifies.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational weight.
pub type Rational = BigRational;

pub trait Weight:
    Clone + Ord + fmt::Debug + Zero + Add<Output = Self> + Sub<Output = Self> + Send + Sync
{
    fn is_positive_weight(&self) -> bool {
        *self > Self::zero()
    }
}

impl<T> Weight for T where
    T: Clone + Ord + fmt::Debug + Zero + Add<Output = T> + Sub<Output = T> + Send + Sync
{
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"3.25"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|e| Error::Parse(format!("numerator of {s:?}: {e}")))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|e| Error::Parse(format!("denominator of {s:?}: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal {s:?}")));
        }
        let negative = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?
        };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let frac_part = BigInt::from_str(frac).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        let magnitude = BigRational::from_integer(int_part.abs())
            + BigRational::new(frac_part, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Canonical `"p/q"` form (`"p"` when the denominator is one).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("7/2").unwrap(), rational(7, 2));
        assert_eq!(parse_rational(" 12 ").unwrap(), integer(12));
        assert_eq!(parse_rational("3.25").unwrap(), rational(13, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), rational(2, 3));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for s in ["7/2", "5", "-3/4"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }
}
