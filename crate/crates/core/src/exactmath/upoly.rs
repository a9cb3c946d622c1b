//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, content_gcd, Rational};
use crate::error::{Error, Result};

/// Coefficients in ascending order, `coeffs[i]` multiplies `x^i`.
/// The last stored coefficient is never zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // homogeneous Horner over integers, reducing once at the end:
        // p(n/d) = Σ cᵢ nⁱ d^(k−i) / d^k
        let Some(k) = self.degree() else {
            return Rational::zero();
        };
        if k == 0 {
            return self.coeffs[0].clone();
        }
        let (n, d) = (x.numer(), x.denom());
        let (mut hn, mut hd, mut dp) = (BigInt::zero(), BigInt::one(), BigInt::one());
        for c in self.coeffs.iter().rev() {
            let l = hd.lcm(c.denom());
            hn = &hn * n * (&l / &hd) + c.numer() * &dp * (&l / c.denom());
            hd = l;
            dp *= d;
        }
        Rational::new(hn, hd * (dp / d))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `self(inner(x))`, by Horner.
    pub fn compose(&self, inner: &UPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(x + s)`.
    pub fn taylor_shift(&self, s: &Rational) -> Self {
        self.compose(&Self::from_coeffs(vec![s.clone(), Rational::one()]))
    }

    /// `self(λx)`.
    pub fn scale_arg(&self, lambda: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= lambda;
        }
        Self::from_coeffs(out)
    }

    /// `x^n · self(1/x)`; requires `n >= deg`.
    pub fn reverse(&self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n), "reverse below degree");
        let mut out = vec![Rational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - i] = c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must be exact; `None` if a remainder is left.
    pub fn div_exact(&self, d: &UPoly) -> Result<Option<UPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Splits into `(scalar, primitive integer polynomial)` with
    /// `self = scalar · prim`, the primitive part having positive leading
    /// coefficient. Zero maps to `(0, [])`.
    pub fn to_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut cont = content_gcd(&ints);
        if ints.last().unwrap().is_negative() {
            cont = -cont;
        }
        let prim = ints.iter().map(|c| c / &cont).collect();
        (Rational::new(cont, den), prim)
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Monic gcd. Errors only when both inputs are zero.
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let (_, a) = self.to_primitive();
        let (_, b) = other.to_primitive();
        let g = primitive_gcd(a, b);
        Ok(Self::from_integers(&g).monic())
    }

    /// Monic least common multiple; zero if either input is zero.
    pub fn lcm(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other).expect("nonzero inputs");
        let q = self.div_exact(&g).expect("nonzero gcd").expect("gcd divides");
        (&q * other).monic()
    }

    /// Squarefree part, monic.
    pub fn squarefree(&self) -> UPoly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative()).expect("nonzero");
        self.div_exact(&g).expect("nonzero").expect("gcd divides").monic()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

/// Gcd of primitive integer polynomials by the primitive pseudo-remainder
/// sequence. Returns a primitive polynomial with positive leading coefficient.
fn primitive_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if coprime_mod_p(&a, &b) {
        return vec![BigInt::one()];
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = make_primitive(r);
    }
    make_primitive(a)
}

/// `2^61 − 1`, prime.
const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn invmod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, MODULUS - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

fn reduce(p: &[BigInt]) -> Vec<u64> {
    let m = BigInt::from(MODULUS);
    p.iter()
        .map(|c| u64::try_from(c.mod_floor(&m)).expect("reduced"))
        .collect()
}

/// Sufficient test for `gcd(a, b) = 1`: when the modulus divides neither
/// leading coefficient, a constant gcd mod p forces a constant gcd over Z.
fn coprime_mod_p(a: &[BigInt], b: &[BigInt]) -> bool {
    let (mut x, mut y) = (reduce(a), reduce(b));
    if x.last() == Some(&0) || y.last() == Some(&0) {
        return false;
    }
    while !y.is_empty() {
        let inv = invmod(*y.last().unwrap());
        let dy = y.len() - 1;
        while x.len() > dy {
            let dx = x.len() - 1;
            let c = mulmod(x[dx], inv);
            for (j, yc) in y.iter().enumerate() {
                let i = dx - dy + j;
                x[i] = (x[i] + MODULUS - mulmod(c, *yc)) % MODULUS;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

fn make_primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut cont = content_gcd(&p);
    if p.last().unwrap().is_negative() {
        cont = -cont;
    }
    if !cont.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &cont;
        }
    }
    p
}

// lc(b)^(deg a - deg b + 1) · a  mod  b, over Z.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let g = lr.gcd(lb);
        let mr = lb / &g;
        let mb = &lr / &g;
        for c in r.iter_mut() {
            *c *= &mr;
        }
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] -= &mb * bc;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.fmt_var("x"))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(UPoly, Add add, Sub sub, Mul mul);
pub(crate) use owned_ops;

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64(c)
    }

    // schoolbook convolution on plain integers, independent of UPoly::mul
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let a = p(&[3, 0, -2, 7]);
        let z = &a + &(-&a);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn square_of_quadratic() {
        let q = [1, 2, 3];
        let expected = convolve(&q, &q);
        assert_eq!(expected, vec![1, 4, 10, 12, 9]);
        assert_eq!(p(&q).pow(2), p(&expected));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 0, 0, 1])).unwrap(), p(&[-1, 1]));
        let a = p(&[4, -6]);
        assert_eq!(
            a.gcd(&UPoly::zero()).unwrap(),
            UPoly::from_coeffs(vec![rat(-2, 3), int(1)])
        );
        // (t+2)^2 (t-3) and (t+2)(t+5)
        let f = &p(&[2, 1]).pow(2) * &p(&[-3, 1]);
        let g = &p(&[2, 1]) * &p(&[5, 1]);
        assert_eq!(f.gcd(&g).unwrap(), p(&[2, 1]));
        assert_eq!(UPoly::zero().gcd(&UPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let common = UPoly::from_coeffs(vec![rat(1, 3), rat(-5, 7), int(1)]);
        let a = &common * &UPoly::from_coeffs(vec![rat(9, 2), int(1)]);
        let b = &common * &UPoly::from_coeffs(vec![rat(-1, 11), int(0), int(3)]);
        assert_eq!(a.gcd(&b).unwrap(), common);
    }

    #[test]
    fn eval_and_compose() {
        assert_eq!(p(&[1, 0, 1]).eval(&int(2)), int(5));
        // (x^2+1)∘(x+1) = x^2+2x+2
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[1, 1])), p(&[2, 2, 1]));
        assert_eq!(p(&[1, 0, 1]).taylor_shift(&int(1)), p(&[2, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).reverse(4), p(&[0, 0, 3, 2, 1]));
        assert_eq!(p(&[1, 1, 1]).scale_arg(&int(2)), p(&[1, 2, 4]));
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        assert!(p(&[1]).div_rem(&UPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_and_lcm() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 1]);
        assert_eq!(f.squarefree(), &p(&[-1, 1]) * &p(&[2, 1]));
        assert_eq!(p(&[-1, 0, 1]).lcm(&p(&[1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn printing() {
        assert_eq!(p(&[1, 0, 0, 0, 1, 0, 1]).to_string(), "t^6 + t^4 + 1");
        let q = UPoly::from_coeffs(vec![int(-3), int(0), rat(1, 2)]);
        assert_eq!(q.to_string(), "1/2*t^2 - 3");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(UPoly::zero().to_string(), "0");
    }
}
