//! Exact rational scalars and their `p/q` wire format.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The scalar type for every metric quantity in this crate.
pub type Q = num_rational::BigRational;

pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_int(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_usize(n: usize) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a rational in the canonical `p/q` wire format (denominator always
/// explicit, always positive, fraction reduced).
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let mk_err = || Error::Input(format!("cannot parse rational `{s}`"));
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| mk_err());
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(mk_err());
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
    }
}

/// Lossy conversion for human-readable report columns; never used in checks.
pub fn q_to_f64(x: &Q) -> f64 {
    x.numer().to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    }) / x.denom().to_f64().unwrap_or(f64::INFINITY)
}

/// Integer power with exact arithmetic; `exp` may be any nonnegative integer.
pub fn q_pow(base: &Q, exp: usize) -> Q {
    let mut acc = q_int(1);
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}
