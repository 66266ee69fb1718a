//! Exact rational scalars.
//!
//! Every scalar in the engine is an arbitrary-precision rational; the
//! statements being checked have rational coefficients once the group degree
//! `n` is fixed, so nothing ever needs floating point.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, kept canonical (gcd 1, positive denominator)
/// by the underlying representation.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(i: i64) -> Rat {
    BigRational::from_integer(BigInt::from(i))
}

/// Fraction `p/q`. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders without a denominator when the value is an integer: `3`, `-1/2`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign, no decimals.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational: {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for r in [rat(0), rat(7), rat(-3), frac(1, 2), frac(-22, 7)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
