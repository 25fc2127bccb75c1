//! Arbitrary-precision exact rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! invariants we need: the denominator is positive, numerator and denominator
//! are coprime, and zero is canonically `0/1`. Its `Display` prints `p/q`
//! with `/q` omitted when the denominator is 1, which is the serialization
//! format used throughout the crate.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics on zero denominator; use
/// [`parse_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with arbitrary-precision integers. Rejects a zero
/// denominator instead of panicking, and normalizes the sign so that the
/// stored denominator is positive.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |msg: &str| Error::Invalid(format!("malformed rational {text:?}: {msg}"));
    let (numer_str, denom_str) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = numer_str
        .trim()
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = denom_str
        .trim()
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if denom.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Exact `n^a` for a (possibly negative) integer exponent.
pub fn integer_power(n: u64, a: &BigInt) -> Rational {
    let base = Rational::from_integer(BigInt::from(n));
    let mag = a
        .abs()
        .to_string()
        .parse::<u32>()
        .expect("exponent fits in u32");
    let pow = num_traits::pow::pow(base, mag as usize);
    if a.is_negative() {
        pow.recip()
    } else {
        pow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/5", "10/4"] {
            let r = parse_rational(s).unwrap();
            let again = parse_rational(&r.to_string()).unwrap();
            assert_eq!(r, again);
        }
        // canonical form: reduced, positive denominator, integers without /1
        assert_eq!(parse_rational("10/4").unwrap().to_string(), "5/2");
        assert_eq!(parse_rational("3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational("8/4").unwrap().to_string(), "2");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(integer_power(3, &BigInt::from(2)), rat_int(9));
        assert_eq!(integer_power(3, &BigInt::from(-2)), rat(1, 9));
        assert_eq!(integer_power(5, &BigInt::from(0)), rat_int(1));
    }
}
