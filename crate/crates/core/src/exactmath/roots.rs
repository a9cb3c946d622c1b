//! Exact rational roots of univariate polynomials.
//!
//! Real roots of the squarefree part are isolated with Descartes' rule of
//! signs and interval bisection over Z, each isolating interval is shrunk
//! below `1/lc^2`, and the simplest fraction inside is tested exactly. A
//! rational root `p/q` of a primitive integer polynomial has `q | lc`, and two
//! distinct fractions with denominators at most `lc` are at least `1/lc^2`
//! apart, so no rational root is missed.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{simplest_between, Rational};
use super::upoly::UPoly;

/// Distinct rational roots of `p` in increasing order. The zero polynomial
/// has no well-defined root set and yields an empty list.
pub fn rational_roots(p: &UPoly) -> Vec<Rational> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.squarefree();
    let (_, mut ints) = sf.to_primitive();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rational::zero());
        ints.remove(0);
    }
    if ints.len() > 1 && has_roots_mod_every_prime(&ints) {
        let lc = ints.last().unwrap().abs();
        let bound = cauchy_bound_pow2(&ints);
        for negate in [false, true] {
            let mut q = ints.clone();
            if negate {
                for (i, c) in q.iter_mut().enumerate() {
                    if i % 2 == 1 {
                        *c = -&*c;
                    }
                }
            }
            // Q(x) = P(±B x), roots in (0, 1)
            let mut scale = BigInt::one();
            for c in q.iter_mut() {
                *c *= &scale;
                scale *= &bound;
            }
            let sign = if negate { -Rational::one() } else { Rational::one() };
            let b = Rational::from_integer(bound.clone());
            for (lo, hi, exact) in isolate_unit(q) {
                let (lo, hi) = (&lo * &b * &sign, &hi * &b * &sign);
                let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
                if exact {
                    roots.push(lo);
                } else if let Some(r) = recognize(&ints, lo, hi, &lc) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

const SIEVE_PRIMES: [u32; 16] = [
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// A rational root `p/q` of a primitive integer polynomial has `q | lc`, so
/// it reduces to a root modulo every prime not dividing `lc`. One prime with
/// no root rules out all rational roots without isolating real ones.
fn has_roots_mod_every_prime(p: &[BigInt]) -> bool {
    let lc = p.last().unwrap();
    SIEVE_PRIMES.iter().all(|&l| {
        let lb = BigInt::from(l);
        if (lc % &lb).is_zero() {
            return true;
        }
        let l = l as u64;
        let red: Vec<u64> = p
            .iter()
            .map(|c| {
                let r: BigInt = ((c % &lb) + &lb) % &lb;
                r.try_into().expect("small residue")
            })
            .collect();
        (0..l).any(|x| red.iter().rev().fold(0u64, |acc, c| (acc * x + c) % l) == 0)
    })
}

fn cauchy_bound_pow2(p: &[BigInt]) -> BigInt {
    let lc = p.last().unwrap().abs();
    let max = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    // 1 + max/lc <= 2^k
    let ratio = max / &lc + 2;
    let mut b = BigInt::one();
    while b < ratio {
        b <<= 1;
    }
    b
}

fn sign_variations(p: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in p {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn taylor_shift_one(p: &mut [BigInt]) {
    let n = p.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = p[j + 1].clone();
            p[j] += t;
        }
    }
}

// Upper bound on the number of roots of A in (0,1).
fn descartes_unit(a: &[BigInt]) -> usize {
    let mut t: Vec<BigInt> = a.iter().rev().cloned().collect();
    taylor_shift_one(&mut t);
    sign_variations(&t)
}

/// Isolates the roots of a squarefree integer polynomial lying in (0, 1).
/// Returns `(lo, hi, exact)`; when `exact` the root equals `lo`.
fn isolate_unit(q: Vec<BigInt>) -> Vec<(Rational, Rational, bool)> {
    let mut out = Vec::new();
    let mut stack = vec![(q, Rational::zero(), Rational::one())];
    let two = Rational::from_integer(2.into());
    while let Some((a, lo, hi)) = stack.pop() {
        match descartes_unit(&a) {
            0 => continue,
            1 => {
                out.push((lo, hi, false));
                continue;
            }
            _ => {}
        }
        let n = a.len() - 1;
        // A_L(x) = 2^n A(x/2)
        let left: Vec<BigInt> = a.iter().enumerate().map(|(i, c)| c << (n - i)).collect();
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        let mid = (&lo + &hi) / &two;
        if right[0].is_zero() {
            out.push((mid.clone(), mid.clone(), true));
            right.remove(0);
        }
        stack.push((left, lo, mid.clone()));
        if right.len() > 1 {
            stack.push((right, mid, hi));
        }
    }
    out
}

fn eval_int(p: &[BigInt], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

fn eval_int_derivative(p: &[BigInt], x: &Rational) -> Rational {
    let d: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    eval_int(&d, x)
}

// `p` is squarefree with exactly one root in the open interval (lo, hi).
fn recognize(p: &[BigInt], mut lo: Rational, mut hi: Rational, lc: &BigInt) -> Option<Rational> {
    let lc = Rational::from_integer(lc.clone());
    let target = (&lc * &lc).recip();
    let two = Rational::from_integer(2.into());
    // sign of p just to the right of lo
    let mut s_lo = {
        let v = eval_int(p, &lo);
        if v.is_zero() {
            eval_int_derivative(p, &lo).is_positive()
        } else {
            v.is_positive()
        }
    };
    while &hi - &lo >= target {
        let mid = (&lo + &hi) / &two;
        let v = eval_int(p, &mid);
        if v.is_zero() {
            return Some(mid);
        }
        if v.is_positive() == s_lo {
            lo = mid;
            s_lo = v.is_positive();
        } else {
            hi = mid;
        }
    }
    let c = simplest_between(&lo, &hi);
    eval_int(p, &c).is_zero().then_some(c)
}
