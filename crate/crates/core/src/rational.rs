//! Exact rational scalars and small helpers around them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Arbitrary-precision rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // huge numerators or denominators: divide in floating point
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Least common multiple of the denominators, so that `v * lcm` is integral.
pub fn denominator_lcm<'a>(v: impl IntoIterator<Item = &'a Q>) -> BigInt {
    v.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Small random rational: numerator in [-9, 9], denominator in [1, 5].
pub fn random_q<R: Rng + ?Sized>(rng: &mut R) -> Q {
    let n: i64 = rng.random_range(-9..=9);
    let d: i64 = rng.random_range(1..=5);
    q(n, d)
}

/// Random nonzero rational, same ranges as [`random_q`].
pub fn random_nonzero_q<R: Rng + ?Sized>(rng: &mut R) -> Q {
    loop {
        let x = random_q(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}
