//! Exact rational scalars.
//!
//! Every quantity in this crate is an element of ℚ, held as a reduced
//! fraction with positive denominator. There is no floating point anywhere:
//! a residual either is zero or it is not.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt::Write as _;

pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction p/q. Panics if q = 0.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: String,
}

/// Parses "p/q" or "n" with optional sign. Rejects zero denominators and
/// anything that is not an exact integer ratio (no floats, no exponents).
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = |reason: &str| ParseScalarError {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let body = s.trim();
    let (num_str, den_str) = match body.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (body, None),
    };
    let numer: BigInt = num_str.parse().map_err(|_| err("numerator is not an integer"))?;
    let denom: BigInt = match den_str {
        Some(q) => q.parse().map_err(|_| err("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical form: "p/q" when the reduced denominator exceeds 1, else "p".
pub fn format_scalar(x: &Scalar) -> String {
    let mut out = String::new();
    write!(out, "{}", x.numer()).unwrap();
    if !x.denom().is_one() {
        write!(out, "/{}", x.denom()).unwrap();
    }
    out
}

pub fn is_zero(x: &Scalar) -> bool {
    x.is_zero()
}

/// Pretty coefficient for report text: "x" or "-x", with 1 elided in front
/// of a symbol by the caller.
pub fn signed_abs(x: &Scalar) -> (bool, Scalar) {
    (x.is_negative(), x.abs())
}
