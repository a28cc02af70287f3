//! Exact linear algebra over the rational field.
//!
//! Everything downstream (axiom validation, root spaces, ideals) reduces to
//! rational row reduction, kernels and simultaneous eigenspaces. All values
//! are immutable after construction and all operations are pure, so they are
//! safe to share across threads. There is no floating point anywhere: every
//! equality test is exact and decidable.

mod eigen;
mod matrix;
mod subspace;

pub use eigen::{char_poly, rational_roots, simultaneous_eigenspaces, EigenDecomposition};
pub use matrix::{is_zero_vector, vector_add, vector_scale, zero_vector, Matrix, Rref, Vector};
pub use subspace::Subspace;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always stored reduced with a positive denominator, so equality is
/// structural. This is the base field for the whole crate.
pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `p/q` as a scalar. Panics if `q == 0`; intended for literals.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal {0:?}")]
    BadInteger(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"` into a canonical scalar.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(text.to_owned()))?;
    let denom: BigInt = den_text
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(text.to_owned()))?;
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical display form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// `base^exp` by repeated squaring; `exp` may be negative when `base != 0`.
pub fn scalar_pow(base: &Scalar, exp: i64) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let (mut b, mut e) = if exp < 0 {
        assert!(!base.is_zero(), "zero base with negative exponent");
        (base.recip(), exp.unsigned_abs())
    } else {
        (base.clone(), exp as u64)
    };
    let mut acc = Scalar::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-3", "2/3", "-7/4"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&s), text);
        }
        // non-canonical inputs normalize
        assert_eq!(format_scalar(&parse_scalar("4/2").unwrap()), "2");
        assert_eq!(format_scalar(&parse_scalar("1/-2").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_scalar(""), Err(ScalarParseError::Empty)));
        assert!(matches!(
            parse_scalar("a/b"),
            Err(ScalarParseError::BadInteger(_))
        ));
        assert!(matches!(
            parse_scalar("1/0"),
            Err(ScalarParseError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(scalar_pow(&frac(2, 3), 2), frac(4, 9));
        assert_eq!(scalar_pow(&frac(2, 3), -2), frac(9, 4));
        assert_eq!(scalar_pow(&frac(5, 7), 0), scalar(1));
        assert_eq!(scalar_pow(&scalar(-1), 3), scalar(-1));
    }
}
