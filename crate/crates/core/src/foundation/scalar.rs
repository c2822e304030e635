//! Exact rational scalars.
//!
//! The ground field is `Q`. [`BigRational`] already keeps every value reduced
//! with a positive denominator, so it is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// Parses `"n"`, `"-n"` or `"n/d"` (d nonzero). Surrounding whitespace is ignored.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Canonical rendering: integers as `n`, everything else as `n/d`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Always `n/d`, the serialized form used in braiding files.
pub fn format_scalar_fraction(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn factorial(n: usize) -> Scalar {
    (1..=n).fold(one(), |acc, k| acc * scalar(k as i64))
}

pub(crate) fn is_negative(c: &Scalar) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar(" -2 ").unwrap(), scalar(-2));
        assert_eq!(parse_scalar("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(format_scalar(&ratio(-1, 2)), "-1/2");
        assert_eq!(format_scalar(&scalar(4)), "4");
        assert_eq!(format_scalar_fraction(&scalar(4)), "4/1");
        assert_eq!(format_scalar(&zero()), "0");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn stored_reduced() {
        let c = ratio(10, -4);
        assert_eq!(c.numer(), &BigInt::from(-5));
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(ratio(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn inverse_products() {
        for (a, b) in [(3, 7), (-5, 2), (1, 1), (12, -9)] {
            assert_eq!(ratio(a, b) * ratio(b, a), one());
        }
    }
}
