//! Constructions over pure cubic fields `Q(∛−b)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{
    binding, eval_terms, k, linear_piece, natural_denominator, report, residual_in, u, AnsatzCoefficients,
    ConstructionReport, Method, RationalCurve,
};
use crate::cubicfield::{CubicField, FieldElem};
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, RatFunc, Rational, UPoly};
use crate::normform::{monicize_deg6, BackTransform, Hypersurface, KnownPoint, ProblemInstance, Step};

fn require_pure(field: &CubicField) -> Result<()> {
    if field.is_pure() {
        Ok(())
    } else {
        Err(Error::WrongShape(
            "construction needs a pure cubic field (a = 0)".into(),
        ))
    }
}

/// The forced values of `(c2, c4, c5)` on the degenerate family.
fn forced(c1: &Rational, c3: &Rational) -> [Rational; 3] {
    let c1_2 = c1 * c1;
    let c1_3 = &c1_2 * c1;
    [
        &c1_2 * rat(5, 12),
        -c1 * (&c1_3 * int(5) - c3 * int(72)) / int(144),
        -&c1_2 * (&c1_3 - c3 * int(12)) / int(144),
    ]
}

/// True when `(c2, c4, c5)` avoids the degenerate family determined by
/// `c1, c3`, i.e. when the quadratic ansatz yields a curve.
pub fn except_condition(c: &[Rational; 5]) -> bool {
    let [c1, c2, c3, c4, c5] = c;
    let [f2, f4, f5] = forced(c1, c3);
    (c2, c4, c5) != (&f2, &f4, &f5)
}

/// On the degenerate family `g = −(1/144)·quadratic·cubic`.
pub fn reducible_factorization(c1: &Rational, c3: &Rational) -> (UPoly, UPoly) {
    let c1_2 = c1 * c1;
    let quad = UPoly::from_coeffs(vec![int(12), c1 * int(6), c1_2.clone()]);
    let cubic = UPoly::from_coeffs(vec![int(-12), c1 * int(-6), -&c1_2, &c1_2 * c1 - c3 * int(12)]);
    (quad, cubic)
}

/// The quadratic ansatz and its residual on `S_g`, `g = 1 + Σ cᵢtⁱ`,
/// without checking the nondegeneracy condition.
pub fn pure6_residual(field: &CubicField, c: &[Rational; 6]) -> Result<ConstructionReport> {
    require_pure(field)?;
    let b = field.b();
    let [c1, c2, c3, c4, _, _] = c;
    let b2 = b * b;
    let p = (c2 * int(3) - c1 * c1) / int(9);
    let q = c1 / int(3);
    let kappa = c1 * c1 * c1 * int(5) - c1 * c2 * int(18) + c3 * int(27);
    let mu =
        -(c1 * c1 * c1 * c1) * int(5) + c2 * c1 * c1 * int(27) - c3 * c1 * int(27) - c2 * c2 * int(27) + c4 * int(81);
    // E = 54b²u³ + κ
    let e = UPoly::from_coeffs(vec![kappa.clone(), int(0), int(0), &b2 * int(54)]);
    let r = RatFunc::new(
        UPoly::from_coeffs(vec![kappa, int(0), int(0), &b2 * int(-27)]),
        UPoly::monomial(b * int(81), 1),
    )?;
    let s = RatFunc::new(
        UPoly::from_coeffs(vec![int(0), mu, int(0), int(0), &b2 * c1 * int(27)]),
        e.scale(&int(3)),
    )
    .map_err(|_| Error::DegenerateDenominator("E"))?;

    let x1 = [(2, k(p.clone())), (1, k(q.clone())), (0, RatFunc::one())];
    let x2 = [(2, r.clone())];
    let x3 = [(2, s.clone()), (1, u())];
    let g = Hypersurface::norm(field.clone(), g_poly(c)).defining_poly();
    let target = ["T", "u"];
    let bindings = [
        ("X1", binding(&target, "T", &x1)),
        ("X2", binding(&target, "T", &x2)),
        ("X3", binding(&target, "T", &x3)),
        ("t", binding(&target, "T", &[(1, RatFunc::one())])),
    ];
    let residual = residual_in(&g, &bindings, "T")?;
    if residual.iter().take(5).any(|c| !c.is_zero()) || residual.len() > 7 {
        return Err(Error::DegenerateDenominator("ansatz does not annihilate C1..C4"));
    }
    // D = 3¹² b² u³ E³
    let d = (&UPoly::monomial(int(531441) * &b2, 3) * &e.pow(3)).clone();
    let ansatz = AnsatzCoefficients {
        p: k(p),
        q: k(q),
        r: Some(r),
        s: Some(s),
    };
    report(residual, 5, d, Some(ansatz), None)
}

fn g_poly(c: &[Rational; 6]) -> UPoly {
    let mut coeffs = vec![Rational::one()];
    coeffs.extend(c.iter().cloned());
    UPoly::from_coeffs(coeffs)
}

/// A rational curve on `N(X) = 1 + Σ cᵢtⁱ` over a pure cubic field.
pub fn curve_pure_cubic_deg6(field: &CubicField, c: &[Rational; 6]) -> Result<(RationalCurve, ConstructionReport)> {
    require_pure(field)?;
    if !except_condition(&[c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone()]) {
        return Err(Error::ConditionFailed);
    }
    let rep = pure6_residual(field, c)?;
    if rep.low.is_zero() {
        return Err(Error::ConditionFailed);
    }
    let phi = rep.phi()?;
    let a = rep.ansatz.as_ref().unwrap();
    let x1 = eval_terms(&[(2, a.p.clone()), (1, a.q.clone()), (0, RatFunc::one())], &phi);
    let x2 = eval_terms(&[(2, a.r.clone().unwrap())], &phi);
    let x3 = eval_terms(&[(2, a.s.clone().unwrap()), (1, u())], &phi);
    let curve = RationalCurve::new([x1, x2, x3, phi], BackTransform::identity(), Method::Pure6);
    Ok((curve, rep))
}

/// A rational curve on `N(X) = 1 + c1t + c2t² + c3t³ + c4t⁴`, `c4 ≠ 0`.
pub fn curve_deg4(field: &CubicField, c: &[Rational; 4]) -> Result<(RationalCurve, ConstructionReport)> {
    require_pure(field)?;
    let [c1, c2, c3, c4] = c;
    if c4.is_zero() {
        return Err(Error::UnsupportedDegree("quartic needs c4 ≠ 0".into()));
    }
    let full = [c1.clone(), c2.clone(), c3.clone(), c4.clone(), int(0), int(0)];
    if except_condition(&[c1.clone(), c2.clone(), c3.clone(), c4.clone(), int(0)]) {
        let (curve, rep) = curve_pure_cubic_deg6(field, &full)?;
        return Ok((RationalCurve::new(curve.components, curve.back, Method::Deg4), rep));
    }
    // here g = (1 + c1t/2 + c1²t²/12)² with c1 ≠ 0; t = 6s/c1 gives (3s² + 3s + 1)²
    let b = field.b();
    let p = RatFunc::new(UPoly::one(), UPoly::monomial(b * int(4), 1))?;
    let q = k(rat(1, 2));
    let h = UPoly::from_i64(&[1, 3, 3]).pow(2);
    let g = Hypersurface::norm(field.clone(), h).defining_poly();
    let target = ["T", "u"];
    let x1 = [(1, RatFunc::one()), (0, RatFunc::one())];
    let x2 = [(1, u())];
    let x3 = [(1, p.clone())];
    let ts = [(1, q.clone())];
    let bindings = [
        ("X1", binding(&target, "T", &x1)),
        ("X2", binding(&target, "T", &x2)),
        ("X3", binding(&target, "T", &x3)),
        ("t", binding(&target, "T", &ts)),
    ];
    let residual = residual_in(&g, &bindings, "T")?;
    let order = linear_piece(&residual)?;
    let d = natural_denominator(&residual[order], &residual[order + 1]);
    let ansatz = AnsatzCoefficients { p, q, r: None, s: None };
    let rep = report(residual, order, d, Some(ansatz), None)?;
    let tt = rep.phi()?;
    let comps = [
        eval_terms(&x1, &tt),
        eval_terms(&x2, &tt),
        eval_terms(&x3, &tt),
        eval_terms(&ts, &tt),
    ];
    let back = BackTransform::identity().then(Step::scale_t(int(6) / c1));
    Ok((RationalCurve::new(comps, back, Method::Deg4Exceptional), rep))
}

/// A rational curve on `N(X) = f(t)` with `deg f = 6` and a known nontrivial
/// point, unless `f` is equivalent to a polynomial in `t³`.
pub fn curve_deg6_monic(inst: &ProblemInstance) -> Result<(RationalCurve, ConstructionReport)> {
    require_pure(&inst.field)?;
    let m = monicize_deg6(inst)?;
    let h = &m.instance.f;
    // g(T) = T⁶ h(1/T), so cᵢ = h_{6−i} and c1 = 0
    let c: [Rational; 6] = std::array::from_fn(|i| h.coeff(5 - i));
    if c[1].is_zero() && c[3].is_zero() && c[4].is_zero() {
        return Err(Error::ExceptionalForm);
    }
    let (curve, rep) = curve_pure_cubic_deg6(&inst.field, &c)?;
    let back = BackTransform::identity().then(Step::invert(2)).compose(&m.back);
    Ok((RationalCurve::new(curve.components, back, Method::Deg6), rep))
}

/// Result of perturbing a sextic so that its leading coefficient is a norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    /// Coefficients `c0..c6`, `cⱼ` multiplying `t^{6−j}`.
    pub c: [Rational; 7],
    pub witness: FieldElem,
}

impl Approximation {
    pub fn poly(&self) -> UPoly {
        UPoly::from_coeffs(self.c.iter().rev().cloned().collect())
    }

    pub fn instance(&self, field: &CubicField) -> Result<ProblemInstance> {
        ProblemInstance::new(
            field.clone(),
            self.poly(),
            Some(KnownPoint::AtInfinity {
                x: self.witness.clone(),
            }),
        )
    }
}

/// Nearest integer cube root: `n` with `|n³ − x|` minimal.
fn nearest_cube_root(x: &Rational) -> BigInt {
    let neg = x.is_negative();
    let ax = x.abs();
    let lo = ax.floor().to_integer().cbrt();
    let hi = &lo + 1;
    let dist = |n: &BigInt| (Rational::from_integer(n * n * n) - &ax).abs();
    let n = if dist(&hi) < dist(&lo) { hi } else { lo };
    if neg {
        -n
    } else {
        n
    }
}

/// Perturbs `a0 t⁶ + a2 t⁴ + … + a6` (`aⱼ` multiplies `t^{6−j}`, `a1 = 0`) within `eps`
/// so that the leading coefficient is a norm `u³` and the polynomial is not a
/// polynomial in `t³`.
pub fn approx_coeffs(a: &[Rational; 7], eps: &Rational, field: &CubicField) -> Result<Approximation> {
    require_pure(field)?;
    if !eps.is_positive() {
        return Err(Error::InvalidInput("epsilon must be positive".into()));
    }
    if a[0].is_zero() {
        return Err(Error::ZeroCoefficient("a0"));
    }
    if !a[1].is_zero() {
        return Err(Error::WrongShape("the t^5 coefficient must vanish".into()));
    }
    let mut d = BigInt::one();
    let u = loop {
        let scale = Rational::from_integer(&d * &d * &d);
        let n = nearest_cube_root(&(&a[0] * &scale));
        if !n.is_zero() {
            let u = Rational::new(n, d.clone());
            if (&u * &u * &u - &a[0]).abs() < *eps {
                break u;
            }
        }
        d *= 10;
    };
    let mut c = a.clone();
    c[0] = &u * &u * &u;
    if c[2].is_zero() && c[4].is_zero() && c[5].is_zero() {
        let mut small = Rational::one();
        let half = eps / int(2);
        while &small / int(2) >= half {
            small /= int(2);
        }
        while small < half {
            small *= int(2);
        }
        c[2] = small.clone();
        c[4] = small;
    }
    Ok(Approximation {
        c,
        witness: FieldElem::new(u, int(0), int(0)),
    })
}

/// The curve `X1 = φᵐ, X2 = u, X3 = a2/(3bu), t = φ` on
/// `N(X) = t^{3m} + a2tᵐ + a1t + a0`.
pub fn curve_trinomial(
    field: &CubicField,
    m: u32,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
) -> Result<RationalCurve> {
    require_pure(field)?;
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    if a1.is_zero() {
        return Err(Error::ZeroA1);
    }
    let b = field.b();
    let num = UPoly::from_coeffs(vec![
        -(a2 * a2 * a2),
        int(0),
        int(0),
        b * a0 * int(27),
        int(0),
        int(0),
        b * b * int(27),
    ]);
    let phi = -RatFunc::new(num, UPoly::monomial(b * a1 * int(27), 3))?;
    let x3 = RatFunc::new(UPoly::constant(a2.clone()), UPoly::monomial(b * int(3), 1))?;
    Ok(RationalCurve::new(
        [phi.pow(m), u(), x3, phi],
        BackTransform::identity(),
        Method::Trinomial,
    ))
}
