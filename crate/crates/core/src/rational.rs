//! Exact rational scalars and their text form.
//!
//! Every coordinate in the exact layer is a [`Rational`]. The text form is
//! `"p/q"` or `"p"` on input and always `"p/q"` (with `q > 0`, coprime) on
//! output.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("invalid rational {0:?}")]
    Invalid(String),
}

/// Integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
        let part = part.trim();
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::Invalid(text.to_string()));
        }
        part.parse::<BigInt>()
            .map_err(|_| ParseRationalError::Invalid(text.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical `"p/q"` text. `Rational` is always kept reduced with a positive
/// denominator, so this is a plain projection.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Display adapter for the canonical text form.
pub struct Canonical<'a>(pub &'a Rational);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Magnitudes beyond f64 range; saturate with the right sign.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integer_and_fraction() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 3/-9 ").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational("+5/1").unwrap(), int(5));
    }

    #[test]
    fn rejects_bad_text() {
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator("1/0".into()))
        );
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_rational(&rat(10, -4)), "-5/2");
        assert_eq!(format_rational(&int(0)), "0/1");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(Canonical(&rat(1, 3)).to_string(), "1/3");
    }

    #[test]
    fn big_operands_are_exact() {
        let a = parse_rational("123456789012345678901234567890/7").unwrap();
        let b = parse_rational("-98765432109876543210987654321/13").unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
    }
}
