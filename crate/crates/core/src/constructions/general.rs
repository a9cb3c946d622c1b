//! Constructions for sextics `t⁶ + a4t⁴ + … + a0` over arbitrary cubic
//! fields, and for the wider family of cubic forms with `X1³` leading term.

use num_traits::Zero;

use super::{binding, linear_piece, report, residual_in, u, ConicData, ConstructionReport, Method, RationalCurve};
use crate::cubicfield::CubicField;
use crate::error::{Error, Result};
use crate::exactmath::{int, MPoly, RatFunc, Rational, UPoly};
use crate::normform::{BackTransform, CubicForm, FormParams, Hypersurface};

/// `(2a²X3 − 9bX2)² − 4a²a4² − 3(4a³ + 27b²)X2²` over `X2, X3`.
pub fn conic_equation(field: &CubicField, a4: &Rational) -> MPoly {
    let (a, b) = (field.a(), field.b());
    let vars = ["X2", "X3"];
    let x2 = MPoly::var(&vars, "X2");
    let x3 = MPoly::var(&vars, "X3");
    let lin = &x3.scale(&(a * a * int(2))) - &x2.scale(&(b * int(9)));
    let disc = a * a * a * int(4) + b * b * int(27);
    &(&lin.pow(2) - &MPoly::constant(&vars, a * a * a4 * a4 * int(4))) - &x2.pow(2).scale(&(disc * int(3)))
}

/// A rational curve on `N(X) = t⁶ + a4t⁴ + a1t + a0` for `a ≠ 0`, `a1a4 ≠ 0`.
pub fn curve_general_cubic(
    field: &CubicField,
    a4: &Rational,
    a1: &Rational,
    a0: &Rational,
) -> Result<(RationalCurve, ConstructionReport)> {
    let (a, b) = (field.a().clone(), field.b().clone());
    if a.is_zero() {
        return Err(Error::UsePureCubicMethod);
    }
    if a4.is_zero() {
        return Err(Error::ZeroCoefficient("a4"));
    }
    if a1.is_zero() {
        return Err(Error::ZeroCoefficient("a1"));
    }
    let base = &a * &a * &a * int(12) + &b * &b * int(81);
    let kk = UPoly::from_coeffs(vec![base.clone(), int(0), int(-1)]);
    let x2 = RatFunc::new(UPoly::monomial(&a * a4 * int(4), 1), kk.clone())?;
    let x3 = RatFunc::new(
        UPoly::from_coeffs(vec![a4 * &base, a4 * &b * int(18), a4.clone()]),
        kk.scale(&a),
    )?;
    let p = (&RatFunc::constant(a4.clone()) + &x3.scale(&(&a * int(2)))).scale(&Rational::new(1.into(), 3.into()));

    let conic = ConicData {
        equation: conic_equation(field, a4),
        base_point: (int(0), a4 / &a),
        parametrization: (x2.clone(), x3.clone()),
    };

    let f = UPoly::from_coeffs(vec![a0.clone(), a1.clone(), int(0), int(0), a4.clone(), int(0), int(1)]);
    let g = Hypersurface::norm(field.clone(), f).defining_poly();
    let target = ["t", "u"];
    let x1_terms = [(2, RatFunc::one()), (0, p)];
    let bindings = [
        ("X1", binding(&target, "t", &x1_terms)),
        ("X2", binding(&target, "t", &[(0, x2.clone())])),
        ("X3", binding(&target, "t", &[(0, x3.clone())])),
    ];
    let residual = residual_in(&g, &bindings, "t")?;
    let order = linear_piece(&residual)?;
    if order != 0 {
        return Err(Error::ResidualDegreeError(order + 1));
    }
    // D = 27a³K³
    let d = kk.pow(3).scale(&(&a * &a * &a * int(27)));
    let rep = report(residual, 0, d, None, Some(conic))?;
    let t = rep.phi()?;
    let x1 = &t.pow(2) + &x1_terms[1].1;
    Ok((
        RationalCurve::new([x1, x2, x3, t], BackTransform::identity(), Method::General),
        rep,
    ))
}

/// A rational curve on `X1³ + aX2³ + bX3³ + (cX1 + dX2 + eX3)X2X3 = f(t)`
/// with `f = t⁶ + a4t⁴ + a3t³ + a2t² + a1t + a0` (`coeffs = [a0, …, a4]`).
pub fn curve_genform(form: &FormParams, coeffs: &[Rational; 5]) -> Result<(RationalCurve, ConstructionReport)> {
    let FormParams { a, b, c, d: _, e } = form;
    let [a0, a1, a2, a3, a4] = coeffs;
    if [a, b, c, e, a3].iter().any(|v| v.is_zero()) {
        return Err(Error::ZeroParameter);
    }
    let x2 = RatFunc::new(
        UPoly::from_coeffs(vec![a3.clone(), int(0), int(0), -b.clone()]),
        UPoly::monomial(c.clone(), 1),
    )?;
    // 2bu³ + a3
    let w = UPoly::from_coeffs(vec![a3.clone(), int(0), int(0), b * int(2)]);
    let x3_const = RatFunc::new(
        UPoly::from_coeffs(vec![
            int(0),
            (a2 * int(3) - a4 * a4) * c,
            -(a3 * e * int(3)),
            int(0),
            int(0),
            b * e * int(3),
        ]),
        w.scale(&(c * int(3))),
    )?;
    let x1_const = RatFunc::constant(a4 / int(3));

    let f = UPoly::from_coeffs(vec![
        a0.clone(),
        a1.clone(),
        a2.clone(),
        a3.clone(),
        a4.clone(),
        int(0),
        int(1),
    ]);
    let surface = Hypersurface {
        form: CubicForm::General(form.clone()),
        f,
    };
    let g = surface.defining_poly();
    let target = ["t", "u"];
    let x1_terms = [(2, RatFunc::one()), (0, x1_const)];
    let x3_terms = [(1, u()), (0, x3_const)];
    let bindings = [
        ("X1", binding(&target, "t", &x1_terms)),
        ("X2", binding(&target, "t", &[(0, x2.clone())])),
        ("X3", binding(&target, "t", &x3_terms)),
    ];
    let residual = residual_in(&g, &bindings, "t")?;
    if let Some(top) = residual.iter().rposition(|c| !c.is_zero()) {
        if top > 1 {
            return Err(Error::ResidualDegreeError(top));
        }
    }
    linear_piece(&residual)?;
    // D = 27c³u³(2bu³ + a3)³
    let d = &UPoly::monomial(c * c * c * int(27), 3) * &w.pow(3);
    let rep = report(residual, 0, d, None, None)?;
    let t = rep.phi()?;
    let x1 = &t.pow(2) + &x1_terms[1].1;
    let x3 = &(&u() * &t) + &x3_terms[1].1;
    Ok((
        RationalCurve::new([x1, x2, x3, t], BackTransform::identity(), Method::Genform),
        rep,
    ))
}
