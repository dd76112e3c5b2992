//! Exact rational scalars.
//!
//! All coefficients in this crate live in the field of rationals. Values are
//! kept in lowest terms with a positive denominator, and serialize as the
//! string `p/q` (`p` alone when the denominator is 1), which is exactly what
//! `BigRational`'s `Display`/`FromStr` implementations produce and accept.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from an integer numerator.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n / d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// Parses the `p/q` form, checking the lowest-terms invariant.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let r: Rational = s
        .trim()
        .parse()
        .map_err(|e| crate::Error::Parse(format!("bad rational `{s}`: {e}")))?;
    Ok(r)
}

/// Serializes to `p/q` in lowest terms, `p` alone for integers.
pub fn show_rational(x: &Rational) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_round_trip() {
        let x = rat(6, -4);
        assert_eq!(show_rational(&x), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), x);
        assert_eq!(show_rational(&rat(8, 4)), "2");
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert_eq!(show_rational(&zero()), "0");
    }

    #[test]
    fn denominator_positive() {
        let x = rat(1, -3);
        assert!(x.denom() > &num_bigint::BigInt::from(0));
    }
}
