//! The ground field: exact rationals.
//!
//! Scalars always live in canonical form (reduced fraction, positive
//! denominator), so structural equality is mathematical equality. They
//! serialize as `"p/q"`, or `"p"` when the denominator is 1.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::str::FromStr;

pub type Scalar = BigRational;

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar from numerator and denominator. Panics on zero denominator; use
/// [`parse_scalar`] for untrusted input.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let bad = |reason: &str| Error::InvalidScalar {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = s.splitn(2, '/');
    let numer = parts.next().ok_or_else(|| bad("empty literal"))?;
    let numer = BigInt::from_str(numer.trim()).map_err(|_| bad("bad numerator"))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(denom) => {
            let denom = BigInt::from_str(denom.trim()).map_err(|_| bad("bad denominator"))?;
            if denom.is_zero() {
                // Ratio::new panics on zero denominators, so reject first.
                return Err(bad("zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Formats in the canonical interchange form: `"p/q"`, or `"p"` if `q = 1`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}
