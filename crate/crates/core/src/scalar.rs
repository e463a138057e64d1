//! Exact rational scalars.
//!
//! `BigRational` keeps every value in canonical reduced form (gcd 1, positive
//! denominator), so equality of scalars is plain structural equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// (-1)^k as a scalar.
pub fn sign_pow(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        one()
    } else {
        -one()
    }
}

pub fn is_zero(s: &Scalar) -> bool {
    s.is_zero()
}

/// Renders `3/2`, `-1`, `0`, matching the wire format used by the CLI.
pub fn display(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p`, `p/q` or `-p/q` with arbitrary-precision integers.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert!(ratio(1, -2).denom().is_positive());
    }

    #[test]
    fn parse_round_trip() {
        for s in [int(0), int(-7), ratio(3, 2), ratio(-22, 7)] {
            assert_eq!(parse(&display(&s)), Some(s));
        }
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
