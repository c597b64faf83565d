//! Exact rational scalars.
//!
//! Every scalar in the crate (weight coordinates, intertwiner products,
//! matrix entries, Dunkl coefficients) is a [`Rational`]: an
//! arbitrary-precision fraction kept reduced with positive denominator.
//! Intertwiner products grow factorially, so machine integers are not an
//! option anywhere.
//!
//! The wire format is `"p/q"` with the shorthand `"p"` for integers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

pub type Int = BigInt;
pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics on `q = 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Renders `r` as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?} (expected \"p\" or \"p/q\")", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"p/q"` or `"p"`; whitespace around the parts is tolerated.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| err()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Parses a comma-separated list of rationals, e.g. `"0,-3/2,7"`.
pub fn parse_rational_vec(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    s.split(',').map(parse_rational).collect()
}

/// Absolute value of the numerator; the pivot-selection key used by the
/// exact row reduction (runtime heuristic only, the result is pivot-free).
pub fn numerator_magnitude(r: &Rational) -> BigInt {
    r.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // reduction and sign normalization
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn vec_parse() {
        let v = parse_rational_vec("0, 10, -7/2").unwrap();
        assert_eq!(v, vec![rat_int(0), rat_int(10), rat(-7, 2)]);
    }
}
