//! Arithmetic in K = Q(α), α³ + aα + b = 0, in the basis {1, α, α²}.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, RationalRoot, Result};
use crate::exactmath::rational::common_denominator;
use crate::exactmath::{MPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicField {
    #[serde(with = "crate::serde_rational")]
    a: Rational,
    #[serde(with = "crate::serde_rational")]
    b: Rational,
}

/// `x + yα + zα²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElem {
    #[serde(with = "crate::serde_rational")]
    pub x: Rational,
    #[serde(with = "crate::serde_rational")]
    pub y: Rational,
    #[serde(with = "crate::serde_rational")]
    pub z: Rational,
}

impl FieldElem {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        FieldElem { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        Self::new(r(x), r(y), r(z))
    }

    pub fn one() -> Self {
        Self::new(Rational::one(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        Self::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn scale(&self, c: &Rational) -> FieldElem {
        Self::new(&self.x * c, &self.y * c, &self.z * c)
    }
}

impl From<[Rational; 3]> for FieldElem {
    fn from([x, y, z]: [Rational; 3]) -> Self {
        Self::new(x, y, z)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

impl From<i64> for FieldElem {
    fn from(x: i64) -> Self {
        Self::new(Rational::from_integer(x.into()), Rational::zero(), Rational::zero())
    }
}

impl CubicField {
    /// Validates that `x³ + ax + b` is irreducible over Q.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if let Some(root) = rational_root_of_depressed_cubic(&a, &b) {
            return Err(Error::Reducible(Box::new(RationalRoot { a, b, root })));
        }
        let four = Rational::from_integer(4.into());
        let twenty_seven = Rational::from_integer(27.into());
        let disc = -(&four * &a * &a * &a) - &twenty_seven * &b * &b;
        if disc.is_zero() {
            return Err(Error::DegenerateDiscriminant);
        }
        Ok(CubicField { a, b })
    }

    /// `x³ + b`, valid iff `b` is not a rational cube.
    pub fn pure(b: Rational) -> Result<Self> {
        Self::new(Rational::zero(), b)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_pure(&self) -> bool {
        self.a.is_zero()
    }

    pub fn mul(&self, e: &FieldElem, f: &FieldElem) -> FieldElem {
        // (x1 + y1 α + z1 α²)(x2 + y2 α + z2 α²) = Σ d_k α^k, k = 0..4
        let d0 = &e.x * &f.x;
        let d1 = &e.x * &f.y + &e.y * &f.x;
        let d2 = &e.x * &f.z + &e.y * &f.y + &e.z * &f.x;
        let d3 = &e.y * &f.z + &e.z * &f.y;
        let d4 = &e.z * &f.z;
        // α³ = -aα - b, α⁴ = -aα² - bα
        let (a, b) = (&self.a, &self.b);
        FieldElem::new(d0 - b * &d3, d1 - a * &d3 - b * &d4, d2 - a * &d4)
    }

    /// Matrix of multiplication by `e`; column `j` holds `e·α^j`.
    pub fn mul_matrix(&self, e: &FieldElem) -> [[Rational; 3]; 3] {
        let (a, b) = (&self.a, &self.b);
        let c0 = [e.x.clone(), e.y.clone(), e.z.clone()];
        // e·α
        let c1 = [-(b * &e.z), &e.x - a * &e.z, e.y.clone()];
        // e·α² = (e·α)·α
        let c2 = [-(b * &c1[2]), &c1[0] - a * &c1[2], c1[1].clone()];
        [
            [c0[0].clone(), c1[0].clone(), c2[0].clone()],
            [c0[1].clone(), c1[1].clone(), c2[1].clone()],
            [c0[2].clone(), c1[2].clone(), c2[2].clone()],
        ]
    }

    /// Norm via the expanded cubic form.
    pub fn norm(&self, e: &FieldElem) -> Rational {
        let (a, b) = (&self.a, &self.b);
        let (x, y, z) = (&e.x, &e.y, &e.z);
        let three = Rational::from_integer(3.into());
        let two = Rational::from_integer(2.into());
        x * x * x - b * y * y * y + b * b * z * z * z + a * x * y * y + three * b * x * y * z - two * a * x * x * z
            + a * a * x * z * z
            - a * b * y * z * z
    }

    /// Norm as the determinant of the multiplication matrix.
    pub fn norm_det(&self, e: &FieldElem) -> Rational {
        det3(&self.mul_matrix(e))
    }

    pub fn inv(&self, e: &FieldElem) -> Result<FieldElem> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        // Solve M v = (1,0,0)^T by Cramer's rule: v = first column of M⁻¹.
        let m = self.mul_matrix(e);
        let d = det3(&m);
        if d.is_zero() {
            return Err(Error::ZeroElement);
        }
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        // first column of the adjugate
        let v0 = cof(1, 2, 1, 2);
        let v1 = -cof(1, 2, 0, 2);
        let v2 = cof(1, 2, 0, 1);
        Ok(FieldElem::new(v0 / &d, v1 / &d, v2 / &d))
    }

    /// Norm form as a polynomial in the named variables.
    pub fn norm_form<S: AsRef<str>>(&self, vars: &[S], names: [&str; 3]) -> MPoly {
        let x = MPoly::var(vars, names[0]);
        let y = MPoly::var(vars, names[1]);
        let z = MPoly::var(vars, names[2]);
        let (a, b) = (&self.a, &self.b);
        let c = |v: Rational| MPoly::constant(vars, v);
        let three = Rational::from_integer(3.into());
        let two = Rational::from_integer(2.into());
        let terms = [
            x.pow(3),
            y.pow(3).scale(&-b),
            z.pow(3).scale(&(b * b)),
            (&x * &y.pow(2)).scale(a),
            (&(&x * &y) * &z).scale(&(three * b)),
            (&x.pow(2) * &z).scale(&-(two * a)),
            (&x * &z.pow(2)).scale(&(a * a)),
            (&y * &z.pow(2)).scale(&-(a * b)),
        ];
        terms.iter().fold(c(Rational::zero()), |acc, t| &acc + t)
    }
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// A rational root of `x³ + ax + b`, if any.
///
/// With `L` the lcm of the denominators, `y = Lx` turns the cubic into the
/// monic integer cubic `y³ + A y + B` (`A = aL²`, `B = bL³`), whose rational
/// roots are integers. Those are found by integer bisection on each of the
/// (at most three) monotone pieces, so no factoring is needed.
pub fn rational_root_of_depressed_cubic(a: &Rational, b: &Rational) -> Option<Rational> {
    let l = common_denominator([a, b]);
    let big_a = (a * Rational::from_integer(&l * &l)).to_integer();
    let big_b = (b * Rational::from_integer(&l * &l * &l)).to_integer();
    let f = |y: &BigInt| y * y * y + &big_a * y + &big_b;
    let m = BigInt::one() + big_a.abs().max(big_b.abs());

    let mut pieces: Vec<(BigInt, BigInt, bool)> = Vec::new(); // (lo, hi, increasing)
    if !big_a.is_negative() {
        pieces.push((-m.clone(), m.clone(), true));
    } else {
        // critical points at ±sqrt(-A/3)
        let c = (-&big_a / 3u32).sqrt();
        pieces.push((-m.clone(), -(&c + 1u32), true));
        pieces.push((-c.clone(), c.clone(), false));
        pieces.push((&c + 1u32, m.clone(), true));
    }
    for (lo, hi, inc) in pieces {
        if lo > hi {
            continue;
        }
        if let Some(y) = monotone_integer_root(&f, lo, hi, inc) {
            return Some(Rational::new(y, l));
        }
    }
    None
}

fn monotone_integer_root(
    f: &impl Fn(&BigInt) -> BigInt,
    mut lo: BigInt,
    mut hi: BigInt,
    increasing: bool,
) -> Option<BigInt> {
    // normalise to an increasing function
    let g = |y: &BigInt| if increasing { f(y) } else { -f(y) };
    while lo <= hi {
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        let v = g(&mid);
        if v.is_zero() {
            return Some(mid);
        }
        if v.is_negative() {
            lo = mid + 1u32;
        } else {
            hi = mid - 1u32;
        }
    }
    None
}
