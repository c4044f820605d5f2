//! Exact integer and rational helpers used throughout the crate.
//!
//! Everything here is arbitrary precision; there is no floating point
//! anywhere in this crate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type of the whole library: an arbitrary-precision rational,
/// always kept in lowest terms with positive denominator (num's `Ratio`
/// maintains both).
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient C(n, k), multiplicative formula. Zero outside the
/// triangle.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// The `0^n` convention: the Kronecker delta at 0, with 0^0 = 1.
pub fn zero_pow(n: usize) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Parse one term of the sequence text format: an integer `p` or a
/// rational `p/q` with q > 0.
pub fn parse_rat(token: &str, line: usize) -> Result<Rat> {
    let bad = |msg: &str| Error::ParseError {
        line,
        msg: format!("{msg}: {token:?}"),
    };
    if let Some((p, q)) = token.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad("invalid numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| bad("invalid denominator"))?;
        if q.is_zero() || q.is_negative() {
            return Err(bad("denominator must be positive"));
        }
        Ok(Rat::new(p, q))
    } else {
        let p: BigInt = token.trim().parse().map_err(|_| bad("invalid integer"))?;
        Ok(Rat::from_integer(p))
    }
}

/// Render a rational as `p` or `p/q` (the inverse of `parse_rat`).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["7", "-3", "22/7", "-5/3"] {
            let r = parse_rat(s, 1).unwrap();
            assert_eq!(format_rat(&r), s);
        }
    }

    #[test]
    fn parse_normalizes_sign_and_lowest_terms() {
        assert_eq!(parse_rat("4/6", 1).unwrap(), rat_frac(2, 3));
        assert!(parse_rat("1/0", 1).is_err());
        assert!(parse_rat("1/-2", 1).is_err());
        assert!(parse_rat("x", 1).is_err());
    }
}
