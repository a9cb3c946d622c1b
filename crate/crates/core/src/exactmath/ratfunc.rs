//! Reduced quotients of univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g)?.expect("gcd divides");
        let den = den.div_exact(&g)?.expect("gcd divides");
        let l = den.lead().expect("nonzero").recip();
        Ok(RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        })
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    /// The parameter itself.
    pub fn x() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant as a function of the parameter.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() { UPoly::one() } else { self.den.clone() },
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        // reduced fractions stay reduced under powers
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Numerator of the derivative, `num'·den − num·den'`. It is the zero
    /// polynomial exactly when the function is constant.
    pub fn derivative_numerator(&self) -> UPoly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.derivative_numerator(), self.den.pow(2)).expect("nonzero denominator")
    }

    /// `p(self)` for a polynomial `p`, evaluated by Horner over fractions
    /// sharing the denominator power `den^deg p`.
    pub fn compose_into(p: &UPoly, inner: &RatFunc) -> Self {
        let Some(n) = p.degree() else {
            return Self::zero();
        };
        // Σ c_i num^i den^(n-i) / den^n
        let mut num_pows = vec![UPoly::one()];
        let mut den_pows = vec![UPoly::one()];
        for _ in 0..n {
            num_pows.push(num_pows.last().unwrap() * &inner.num);
            den_pows.push(den_pows.last().unwrap() * &inner.den);
        }
        let mut total = UPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                total = &total + &(&num_pows[i] * &den_pows[n - i]).scale(c);
            }
        }
        Self::new(total, den_pows[n].clone()).expect("nonzero denominator")
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_one_poly() {
            return self.num.fmt_var(var);
        }
        format!("({}) / ({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

impl UPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("u"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.fmt_var("u"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let g = self.den.gcd(&rhs.den).expect("nonzero");
        let l = self.den.div_exact(&g).unwrap().unwrap();
        let r = rhs.den.div_exact(&g).unwrap().unwrap();
        let num = &(&self.num * &r) + &(&rhs.num * &l);
        RatFunc::new(num, &l * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den).expect("nonzero");
        let g2 = rhs.num.gcd(&self.den).expect("nonzero");
        let a = self.num.div_exact(&g1).unwrap().unwrap();
        let d = rhs.den.div_exact(&g1).unwrap().unwrap();
        let c = rhs.num.div_exact(&g2).unwrap().unwrap();
        let b = self.den.div_exact(&g2).unwrap().unwrap();
        let num = &a * &c;
        let den = &b * &d;
        let l = den.lead().expect("nonzero").recip();
        RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

super::upoly::owned_ops!(RatFunc, Add add, Sub sub, Mul mul);

impl From<UPoly> for RatFunc {
    fn from(p: UPoly) -> Self {
        Self::from_poly(p)
    }
}
