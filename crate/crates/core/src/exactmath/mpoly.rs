//! Sparse multivariate polynomials over Q with named variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

pub type Exponents = Vec<u32>;

/// Terms are keyed by exponent vectors in lexicographic order and never
/// carry a zero coefficient, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

/// A substitution value: `num / den`, where `num` lives over the target
/// variables and `den` is univariate in the designated denominator variable.
#[derive(Clone, Debug)]
pub struct Binding {
    pub num: MPoly,
    pub den: UPoly,
}

impl Binding {
    pub fn poly(num: MPoly) -> Self {
        Binding { num, den: UPoly::one() }
    }
}

impl MPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MPoly {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.add_term(vec![0; n], c);
        p
    }

    /// The variable `name` itself. Panics if `name` is not in `vars`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p.index_of(name).expect("variable in universe");
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `var`.
    pub fn from_upoly<S: AsRef<str>>(vars: &[S], var: &str, p: &UPoly) -> Self {
        let mut out = Self::zero(vars);
        let i = out.index_of(var).expect("variable in universe");
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; out.vars.len()];
            e[i] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check_same(&self, other: &MPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same(other)?;
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(MPoly {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        let mut out = Self::zero(&self.vars);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut acc = Self::constant(&self.vars, Rational::one());
        let mut base = self.clone();
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

    /// Largest exponent of variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Largest total degree restricted to the variables in `idx`.
    pub fn degree_in_group(&self, idx: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| idx.iter().map(|&i| e[i]).sum()).max()
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Coefficients with respect to variable `var`: the `i`th entry is the
    /// coefficient of `var^i`, a polynomial over the same universe with
    /// `var`'s exponent cleared.
    pub fn collect_in(&self, var: &str) -> Result<Vec<MPoly>> {
        let i = self
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            let mut e2 = e.clone();
            e2[i] = 0;
            out[k].add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Converts to a univariate polynomial in `var`; errors if any other
    /// variable occurs.
    pub fn to_upoly(&self, var: &str) -> Result<UPoly> {
        let i = self
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k != 0) {
                return Err(Error::InvalidInput(format!(
                    "polynomial is not univariate in {var}: {self}"
                )));
            }
            let k = e[i] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Ok(UPoly::from_coeffs(coeffs))
    }

    /// Substitutes `bindings` (variable -> `num/den`) and returns the
    /// numerator over `target` together with the cleared common denominator
    /// `D`, univariate in `den_var`, so that `self∘bindings = numerator / D`.
    /// Unbound variables are carried over by name. `D` is the monic lcm over
    /// all terms of the product of binding denominators each term needs.
    pub fn substitute(&self, bindings: &[(&str, Binding)], target: &[&str], den_var: &str) -> Result<(MPoly, UPoly)> {
        let out_zero = Self::zero(target);
        if out_zero.index_of(den_var).is_none() {
            return Err(Error::UnknownVariable(den_var.to_string()));
        }
        // For each source variable: either a binding index or a target position.
        enum Slot {
            Bound(usize),
            Carried(usize),
        }
        let mut slots = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            if let Some(k) = bindings.iter().position(|(name, _)| name == v) {
                slots.push(Slot::Bound(k));
            } else {
                let j = out_zero.index_of(v).ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                slots.push(Slot::Carried(j));
            }
        }
        for (name, b) in bindings {
            if self.index_of(name).is_none() {
                return Err(Error::UnknownVariable(name.to_string()));
            }
            out_zero.check_same(&b.num)?;
            if b.den.is_zero() {
                return Err(Error::DivisionByZero);
            }
        }

        // Power tables for numerators and denominators.
        let max_deg: Vec<u32> = (0..self.vars.len()).map(|i| self.degree_in(i).unwrap_or(0)).collect();
        let mut num_pows: Vec<Vec<MPoly>> = Vec::new();
        let mut den_pows: Vec<Vec<UPoly>> = Vec::new();
        for (i, slot) in slots.iter().enumerate() {
            if let Slot::Bound(k) = slot {
                let b = &bindings[*k].1;
                let mut np = vec![Self::constant(target, Rational::one())];
                let mut dp = vec![UPoly::one()];
                for _ in 0..max_deg[i] {
                    np.push(np.last().unwrap() * &b.num);
                    dp.push(dp.last().unwrap() * &b.den);
                }
                num_pows.push(np);
                den_pows.push(dp);
            } else {
                num_pows.push(Vec::new());
                den_pows.push(Vec::new());
            }
        }

        let mut pieces = Vec::with_capacity(self.terms.len());
        let mut denom = UPoly::one();
        for (e, c) in &self.terms {
            let mut num = Self::constant(target, c.clone());
            let mut den = UPoly::one();
            let mut carried = vec![0u32; target.len()];
            for (i, slot) in slots.iter().enumerate() {
                let k = e[i] as usize;
                match slot {
                    Slot::Bound(_) => {
                        if k > 0 {
                            num = &num * &num_pows[i][k];
                            den = &den * &den_pows[i][k];
                        }
                    }
                    Slot::Carried(j) => carried[*j] += e[i],
                }
            }
            let mono = Self::from_terms(target, [(carried, Rational::one())]);
            num = &num * &mono;
            denom = denom.lcm(&den);
            pieces.push((num, den));
        }

        let mut total = out_zero.clone();
        for (num, den) in pieces {
            let cof = denom
                .div_exact(&den)?
                .expect("lcm is a multiple of every term denominator");
            let cof = Self::from_upoly(target, den_var, &cof);
            total = &total + &(&num * &cof);
        }
        Ok((total, denom))
    }

    pub fn derivative(&self, var: &str) -> Result<MPoly> {
        let i = self
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * Rational::from_integer(e[i].into()));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({self})", self.vars.join(","))
    }
}

// Operator forms panic on mismatched universes; use the checked_* methods
// when operands come from untrusted input.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("same variable universe")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("same variable universe")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("same variable universe")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

super::upoly::owned_ops!(MPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    const XT: [&str; 4] = ["X1", "X2", "X3", "t"];

    fn pure_norm(b: i64) -> MPoly {
        let x = |n| MPoly::var(&XT, n);
        let b = int(b);
        &(&(&x("X1").pow(3) - &x("X2").pow(3).scale(&b)) + &x("X3").pow(3).scale(&(&b * &b)))
            + &(&(&x("X1") * &x("X2")) * &x("X3")).scale(&(int(3) * &b))
    }

    #[test]
    fn norm_at_unit_point() {
        let n = pure_norm(2);
        let one = |v: i64| Binding::poly(MPoly::constant(&["u"], int(v)));
        let (num, den) = n
            .substitute(
                &[("X1", one(1)), ("X2", one(0)), ("X3", one(0)), ("t", one(0))],
                &["u"],
                "u",
            )
            .unwrap();
        assert_eq!(den, UPoly::one());
        assert_eq!(num, MPoly::constant(&["u"], int(1)));
    }

    #[test]
    fn substitute_cube_of_monomial() {
        // b·X2^3 with X2 = r(u)·T^2, r = -2u^2/3
        let vars = ["X2"];
        let p = MPoly::var(&vars, "X2").pow(3).scale(&int(2));
        let target = ["T", "u"];
        let num = MPoly::from_terms(&target, [(vec![2, 2], rat(-2, 3))]);
        let (res, den) = p.substitute(&[("X2", Binding::poly(num))], &target, "u").unwrap();
        assert_eq!(den, UPoly::one());
        // 2 · (-8/27) u^6 T^6
        assert_eq!(res, MPoly::from_terms(&target, [(vec![6, 6], rat(-16, 27))]));
    }

    #[test]
    fn substitute_rational_function_clears_denominators() {
        // X^2 + 1 with X = 1/u  ->  (1 + u^2) / u^2
        let p = &MPoly::var(&["X"], "X").pow(2) + &MPoly::constant(&["X"], int(1));
        let b = Binding {
            num: MPoly::constant(&["u"], int(1)),
            den: UPoly::x(),
        };
        let (num, den) = p.substitute(&[("X", b)], &["u"], "u").unwrap();
        assert_eq!(den, UPoly::from_i64(&[0, 0, 1]));
        assert_eq!(num.to_upoly("u").unwrap(), UPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn errors() {
        let p = MPoly::var(&["x", "y"], "x");
        let q = MPoly::var(&["x", "z"], "x");
        assert!(matches!(p.checked_add(&q), Err(Error::VariableMismatch { .. })));
        let b = Binding::poly(MPoly::constant(&["u"], int(1)));
        assert!(matches!(
            p.substitute(&[("w", b.clone())], &["u", "y"], "u"),
            Err(Error::UnknownVariable(_))
        ));
        // unbound y must exist in the target universe
        assert!(matches!(
            p.substitute(&[("x", b)], &["u"], "u"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn collect_and_display() {
        let n = pure_norm(2);
        assert_eq!(n.to_string(), "X1^3 + 6*X1*X2*X3 - 2*X2^3 + 4*X3^3");
        let parts = n.collect_in("X1").unwrap();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts[3], MPoly::constant(&XT, int(1)));
    }
}
