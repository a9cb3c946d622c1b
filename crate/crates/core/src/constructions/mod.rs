//! Explicit rational curves on norm-form hypersurfaces.
//!
//! Every construction follows the same pattern: substitute an ansatz into
//! `G`, arrange for all but two consecutive coefficients of the residual (as a
//! polynomial in the ansatz variable) to vanish, and solve the remaining linear
//! equation for that variable as a rational function of the parameter `u`.

mod general;
mod pure;

pub use general::{conic_equation, curve_general_cubic, curve_genform};
pub use pure::{
    approx_coeffs, curve_deg4, curve_deg6_monic, curve_pure_cubic_deg6, curve_trinomial, except_condition,
    pure6_residual, reducible_factorization, Approximation,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rational_roots, Binding, MPoly, RatFunc, Rational, UPoly};
use crate::normform::BackTransform;

/// Which construction produced a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Pure6,
    Deg4,
    Deg4Exceptional,
    Deg6,
    Trinomial,
    General,
    Genform,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Pure6 => "pure6",
            Method::Deg4 => "deg4",
            Method::Deg4Exceptional => "deg4-exceptional",
            Method::Deg6 => "deg6",
            Method::Trinomial => "trinomial",
            Method::General => "general",
            Method::Genform => "genform",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A parametrized curve `u ↦ (X1, X2, X3, t)`.
///
/// `components` live on the model the construction worked on; `back` carries
/// them to the caller's equation, and `image` caches the result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurve {
    pub components: [RatFunc; 4],
    pub back: BackTransform,
    pub method: Method,
    image: [RatFunc; 4],
    poles: Vec<Rational>,
    irrational_poles: bool,
}

impl RationalCurve {
    pub fn new(components: [RatFunc; 4], back: BackTransform, method: Method) -> Self {
        let image = back.apply_curve(&components);
        let (poles, irrational_poles) = pole_set(&image);
        RationalCurve {
            components,
            back,
            method,
            image,
            poles,
            irrational_poles,
        }
    }

    /// The components on the target equation.
    pub fn image(&self) -> &[RatFunc; 4] {
        &self.image
    }

    pub fn t(&self) -> &RatFunc {
        &self.image[3]
    }

    /// Rational parameter values where some component is undefined.
    pub fn poles(&self) -> &[Rational] {
        &self.poles
    }

    /// Whether some denominator also vanishes at irrational parameters.
    pub fn has_irrational_poles(&self) -> bool {
        self.irrational_poles
    }

    pub fn is_pole(&self, u: &Rational) -> bool {
        // `poles` holds every rational root of the denominators
        self.poles.contains(u)
    }

    pub fn eval(&self, u: &Rational) -> Result<[Rational; 4]> {
        let mut out: [Rational; 4] = Default::default();
        for (o, c) in out.iter_mut().zip(&self.image) {
            *o = c.eval(u)?;
        }
        Ok(out)
    }

    /// Replaces one component of the image; used to build corrupted curves
    /// when checking that certification actually rejects them.
    pub fn with_image_component(&self, i: usize, c: RatFunc) -> Self {
        let mut image = self.image.clone();
        image[i] = c;
        let (poles, irrational_poles) = pole_set(&image);
        RationalCurve {
            components: image.clone(),
            back: BackTransform::identity(),
            method: self.method,
            image,
            poles,
            irrational_poles,
        }
    }
}

fn pole_set(image: &[RatFunc; 4]) -> (Vec<Rational>, bool) {
    let mut den = UPoly::one();
    for c in image {
        den = den.lcm(c.den());
    }
    let sf = den.squarefree();
    let roots = rational_roots(&sf);
    let irrational = sf.degree().unwrap_or(0) > roots.len();
    (roots, irrational)
}

/// Coefficients of the quadratic ansatz `X1 = pT² + qT + 1, X2 = rT²,
/// X3 = sT² + uT` (or, for the exceptional quartic branch, `X3 = pT` and
/// `t = qT`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzCoefficients {
    pub p: RatFunc,
    pub q: RatFunc,
    pub r: Option<RatFunc>,
    pub s: Option<RatFunc>,
}

/// The conic a construction reduces to, with a rational point and the
/// parametrization through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicData {
    pub equation: MPoly,
    pub base_point: (Rational, Rational),
    pub parametrization: (RatFunc, RatFunc),
}

/// Residual data: after substitution `G = Σ C_i(u) V^i`, with `C_i = 0` for
/// `i < order` and `i > order + 1`; `low = D·C_order`, `high = D·C_{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub ansatz: Option<AnsatzCoefficients>,
    pub residual: Vec<RatFunc>,
    pub order: usize,
    pub denominator: UPoly,
    pub low: UPoly,
    pub high: UPoly,
    pub conic: Option<ConicData>,
}

impl ConstructionReport {
    /// `−low/high`, the value of the ansatz variable on the curve.
    pub fn phi(&self) -> Result<RatFunc> {
        RatFunc::new(-&self.low, self.high.clone())
    }

    fn coeff(&self, i: usize) -> RatFunc {
        self.residual.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// `D · C_i` as a polynomial, when it is one.
    pub fn cleared(&self, i: usize) -> Option<UPoly> {
        cleared(&self.denominator, &self.coeff(i))
    }
}

fn cleared(d: &UPoly, c: &RatFunc) -> Option<UPoly> {
    let q = d.div_exact(c.den()).ok()??;
    Some(&q * c.num())
}

/// `Σ_k r_k(u) V^k` as a binding over `[V, u]`.
pub(crate) fn binding(target: &[&str], var: &str, terms: &[(u32, RatFunc)]) -> Binding {
    let mut den = UPoly::one();
    for (_, r) in terms {
        den = den.lcm(r.den());
    }
    let mut num = MPoly::zero(target);
    let v = MPoly::var(target, var);
    for (k, r) in terms {
        let cof = den.div_exact(r.den()).expect("nonzero").expect("lcm");
        let piece = MPoly::from_upoly(target, "u", &(&cof * r.num()));
        num = &num + &(&piece * &v.pow(*k));
    }
    Binding { num, den }
}

/// `Σ_k r_k φ^k`.
pub(crate) fn eval_terms(terms: &[(u32, RatFunc)], phi: &RatFunc) -> RatFunc {
    terms
        .iter()
        .fold(RatFunc::zero(), |acc, (k, r)| &acc + &(r * &phi.pow(*k)))
}

/// Substitutes into `g` (over `X1, X2, X3, t`) and returns the coefficients
/// of the result as a polynomial in `var`.
pub(crate) fn residual_in(g: &MPoly, bindings: &[(&str, Binding)], var: &str) -> Result<Vec<RatFunc>> {
    let target = [var, "u"];
    let (num, den) = g.substitute(bindings, &target, "u")?;
    num.collect_in(var)?
        .into_iter()
        .map(|c| RatFunc::new(c.to_upoly("u")?, den.clone()))
        .collect()
}

/// Locates the single linear piece of a residual.
pub(crate) fn linear_piece(residual: &[RatFunc]) -> Result<usize> {
    let nonzero: Vec<usize> = (0..residual.len()).filter(|&i| !residual[i].is_zero()).collect();
    match nonzero[..] {
        [k, l] if l == k + 1 => Ok(k),
        [k] if k > 0 => Ok(k - 1),
        [] => Err(Error::ConditionFailed),
        _ => Err(Error::ResidualDegreeError(*nonzero.last().unwrap())),
    }
}

pub(crate) fn report(
    residual: Vec<RatFunc>,
    order: usize,
    denominator: UPoly,
    ansatz: Option<AnsatzCoefficients>,
    conic: Option<ConicData>,
) -> Result<ConstructionReport> {
    let pick = |i: usize| residual.get(i).cloned().unwrap_or_else(RatFunc::zero);
    let low = cleared(&denominator, &pick(order)).ok_or(Error::DegenerateDenominator("residual"))?;
    let high = cleared(&denominator, &pick(order + 1)).ok_or(Error::DegenerateDenominator("residual"))?;
    Ok(ConstructionReport {
        ansatz,
        residual,
        order,
        denominator,
        low,
        high,
        conic,
    })
}

/// The lcm of the denominators of two coefficients.
pub(crate) fn natural_denominator(a: &RatFunc, b: &RatFunc) -> UPoly {
    a.den().lcm(b.den())
}

pub(crate) fn u() -> RatFunc {
    RatFunc::x()
}

pub(crate) fn k(c: Rational) -> RatFunc {
    RatFunc::constant(c)
}
