//! Exact rational scalars. All coefficients in the library are `Scalar`s;
//! no floating point is used anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, stored in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar `num/den`. Panics on zero denominator (use [`parse_scalar`]
/// for untrusted input).
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` exactly.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let invalid = || Error::InvalidRational {
        input: s.to_string(),
    };
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| invalid())?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| invalid())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator {
            input: s.to_string(),
        });
    }
    Ok(BigRational::new(num, den))
}

/// Renders a scalar as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Exact factorial as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}
