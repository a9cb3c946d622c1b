//! Exact rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already keeps values
//! reduced with a positive denominator. This module adds the handful of
//! helpers the rest of the crate needs: construction from small integers,
//! string I/O in `p/q` form, and exact cube-root detection.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` from machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, `p/q` (no whitespace, no decimals).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Canonical string: `p` for integers, `p/q` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact integer cube root if `n` is a perfect cube.
pub fn integer_cube_root(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    if &(&r * &r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational cube root if `r` is the cube of a rational.
pub fn rational_cube_root(r: &Rational) -> Option<Rational> {
    let n = integer_cube_root(r.numer())?;
    let d = integer_cube_root(r.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_rational_cube(r: &Rational) -> bool {
    rational_cube_root(r).is_some()
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators of `values` (zero if all are zero).
pub fn content_gcd<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut acc = BigInt::zero();
    for v in values {
        // one division first keeps the binary gcd on small operands
        acc = if acc.is_zero() { v.abs() } else { acc.gcd(&(v % &acc)) };
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`.
/// Requires `lo < hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !lo.is_negative() {
        simplest_between_nonneg(lo, hi)
    } else {
        -simplest_between_nonneg(&-hi, &-lo)
    }
}

// Continued-fraction (Stern-Brocot) descent on 0 <= lo < hi.
fn simplest_between_nonneg(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    // smallest integer strictly greater than lo
    let next = &fl + Rational::one();
    if &next < hi {
        return next;
    }
    // lo and hi share an integer part (hi may equal that part + 1 exactly).
    let frac_lo = lo - &fl;
    let frac_hi = hi - &fl;
    if frac_lo.is_zero() {
        // (0, h) with h <= 1: the answer is 1/k with the smallest k > 1/h.
        let k = (frac_hi.recip()).floor() + Rational::one();
        return fl + k.recip();
    }
    // recurse on reciprocals: 1/frac_hi < 1/frac_lo
    let inner = simplest_between_nonneg(&frac_hi.recip(), &frac_lo.recip());
    fl + inner.recip()
}

pub fn sign_of(r: &Rational) -> Sign {
    if r.is_zero() {
        Sign::NoSign
    } else if r.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}
