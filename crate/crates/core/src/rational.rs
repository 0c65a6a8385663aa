//! Exact rational arithmetic helpers.
//!
//! Every numeric quantity in this crate is a [`Rational`] (arbitrary-precision,
//! always in lowest terms with a positive denominator), so that equilibrium
//! conditions -- which are exact equalities and inequalities -- can be decided
//! without any tolerance. The canonical text encoding is `"p/q"`; the parser
//! additionally accepts bare integers (`"3"`) and decimal literals (`"1.8"`),
//! both converted exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for `p/q` from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, `"p"`, or an exact decimal such as `"1.8"` or `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(text.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRationalError::Invalid(text.to_string()))?;
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(text.to_string()));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole
                .parse()
                .map_err(|_| ParseRationalError::Invalid(text.to_string()))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Invalid(text.to_string()));
        }
        let f: BigInt = frac
            .parse()
            .map_err(|_| ParseRationalError::Invalid(text.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let numer = w.abs() * &scale + f;
        return Ok(Rational::new(numer * BigInt::from(sign), scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| ParseRationalError::Invalid(text.to_string()))?;
    Ok(Rational::from_integer(n))
}

/// Canonical `"p/q"` encoding (lowest terms, denominator always written).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 10 / 5 ").unwrap(), int(2));
    }

    #[test]
    fn parses_integers_and_decimals_exactly() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("1.8").unwrap(), rat(9, 5));
        assert_eq!(parse_rational("2.8").unwrap(), rat(14, 5));
        assert_eq!(parse_rational("0.15").unwrap(), rat(3, 20));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.x").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(6, 8)), "3/4");
        assert_eq!(format_rational(&int(2)), "2/1");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&zero()), "0/1");
    }
}
