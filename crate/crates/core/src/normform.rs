//! Defining polynomials of the hypersurfaces `F(X1,X2,X3) = f(t)` and the
//! changes of variables that bring `f` into normal form.
//!
//! A [`BackTransform`] is a chain of elementary moves. Each move relates an
//! inner model `S_in` to an outer model `S_out` and maps points of `S_in` to
//! points of `S_out`:
//!
//! * `Shift(t0)`: `f_in(t) = f_out(t + t0)`, map `t ↦ t + t0`.
//! * `Scale(m)`: `f_in = N(m)⁻¹ f_out`, map `X ↦ m·X` (field multiplication).
//! * `Invert(k)`: `f_in(T) = T^{3k} f_out(1/T)`, map `(Y, T) ↦ (Y/T^k, 1/T)`.
//! * `ScaleT(λ)`: `f_in(s) = f_out(λ s)`, map `s ↦ λ s`.
//!
//! Steps are stored innermost first, the order in which they are applied.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cubicfield::{CubicField, FieldElem};
use crate::error::{Error, Result};
use crate::exactmath::{MPoly, RatFunc, Rational, UPoly};

pub const VARS: [&str; 4] = ["X1", "X2", "X3", "t"];

/// Parameters of `X1³ + aX2³ + bX3³ + (cX1 + dX2 + eX3)X2X3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormParams {
    #[serde(with = "crate::serde_rational")]
    pub a: Rational,
    #[serde(with = "crate::serde_rational")]
    pub b: Rational,
    #[serde(with = "crate::serde_rational")]
    pub c: Rational,
    #[serde(with = "crate::serde_rational")]
    pub d: Rational,
    #[serde(with = "crate::serde_rational")]
    pub e: Rational,
}

impl FormParams {
    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let [x1, x2, x3] = x;
        x1 * x1 * x1
            + &self.a * x2 * x2 * x2
            + &self.b * x3 * x3 * x3
            + (&self.c * x1 + &self.d * x2 + &self.e * x3) * x2 * x3
    }

    pub fn to_mpoly<S: AsRef<str>>(&self, vars: &[S]) -> MPoly {
        let x1 = MPoly::var(vars, "X1");
        let x2 = MPoly::var(vars, "X2");
        let x3 = MPoly::var(vars, "X3");
        let lin = &(&x1.scale(&self.c) + &x2.scale(&self.d)) + &x3.scale(&self.e);
        &(&(&x1.pow(3) + &x2.pow(3).scale(&self.a)) + &x3.pow(3).scale(&self.b)) + &(&lin * &(&x2 * &x3))
    }
}

/// The cubic form on the left-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CubicForm {
    Norm(CubicField),
    General(FormParams),
}

impl CubicForm {
    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        match self {
            CubicForm::Norm(k) => k.norm(&FieldElem::new(x[0].clone(), x[1].clone(), x[2].clone())),
            CubicForm::General(p) => p.eval(x),
        }
    }

    pub fn to_mpoly<S: AsRef<str>>(&self, vars: &[S]) -> MPoly {
        match self {
            CubicForm::Norm(k) => k.norm_form(vars, ["X1", "X2", "X3"]),
            CubicForm::General(p) => p.to_mpoly(vars),
        }
    }
}

/// `F(X1, X2, X3) = f(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypersurface {
    pub form: CubicForm,
    pub f: UPoly,
}

impl Hypersurface {
    pub fn norm(field: CubicField, f: UPoly) -> Self {
        Hypersurface {
            form: CubicForm::Norm(field),
            f,
        }
    }

    /// `G = F(X1,X2,X3) − f(t)` over `X1, X2, X3, t`.
    pub fn defining_poly(&self) -> MPoly {
        &self.form.to_mpoly(&VARS) - &MPoly::from_upoly(&VARS, "t", &self.f)
    }

    pub fn residual(&self, p: &[Rational; 4]) -> Rational {
        self.form.eval(&[p[0].clone(), p[1].clone(), p[2].clone()]) - self.f.eval(&p[3])
    }

    pub fn contains(&self, p: &[Rational; 4]) -> bool {
        self.residual(p).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum KnownPoint {
    /// `(x, y, z, t0)` with `N(x,y,z) = f(t0) ≠ 0`.
    Finite {
        x: FieldElem,
        #[serde(with = "crate::serde_rational")]
        t: Rational,
    },
    /// Point on the model at `t = ∞`: `deg f = 6` and `N(x,y,z) = lc(f)`.
    AtInfinity { x: FieldElem },
}

/// A norm-form equation `N_{K/Q}(X1,X2,X3) = f(t)` with an optional known
/// nontrivial point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub field: CubicField,
    pub f: UPoly,
    pub point: Option<KnownPoint>,
}

impl ProblemInstance {
    pub fn new(field: CubicField, f: UPoly, point: Option<KnownPoint>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::InvalidInput("f must be nonzero".into()));
        }
        match &point {
            Some(KnownPoint::Finite { x, t }) => {
                let v = f.eval(t);
                if v.is_zero() {
                    return Err(Error::TrivialPoint(format!("f({t}) = 0")));
                }
                let n = field.norm(x);
                if n != v {
                    return Err(Error::TrivialPoint(format!("N({x}) = {n} but f({t}) = {v}")));
                }
            }
            Some(KnownPoint::AtInfinity { x }) => {
                if f.degree() != Some(6) {
                    return Err(Error::TrivialPoint("points at infinity need deg f = 6".into()));
                }
                let n = field.norm(x);
                let lc = f.lead().unwrap();
                if &n != lc {
                    return Err(Error::TrivialPoint(format!(
                        "N({x}) = {n} but the leading coefficient of f is {lc}"
                    )));
                }
            }
            None => {}
        }
        Ok(ProblemInstance { field, f, point })
    }

    pub fn surface(&self) -> Hypersurface {
        Hypersurface::norm(self.field.clone(), self.f.clone())
    }
}

/// `G = N(X1,X2,X3) − f(t)`.
pub fn build_g(inst: &ProblemInstance) -> MPoly {
    inst.surface().defining_poly()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Shift {
        #[serde(with = "crate::serde_rational")]
        t0: Rational,
    },
    /// `mult` is the element multiplying points; `matrix` is its
    /// multiplication matrix, so the step can be applied without the field.
    Scale {
        mult: FieldElem,
        #[serde(skip)]
        matrix: Option<Box<[[Rational; 3]; 3]>>,
        #[serde(skip)]
        inverse: Option<Box<[[Rational; 3]; 3]>>,
    },
    Invert {
        k: u32,
    },
    ScaleT {
        #[serde(with = "crate::serde_rational")]
        lambda: Rational,
    },
}

impl Step {
    pub fn shift(t0: Rational) -> Self {
        Step::Shift { t0 }
    }

    /// Points are multiplied by `mult`; the inner equation is the outer one
    /// divided by `N(mult)`.
    pub fn scale(field: &CubicField, mult: FieldElem) -> Result<Self> {
        let inv = field.inv(&mult)?;
        Ok(Step::Scale {
            matrix: Some(Box::new(field.mul_matrix(&mult))),
            inverse: Some(Box::new(field.mul_matrix(&inv))),
            mult,
        })
    }

    pub fn invert(k: u32) -> Self {
        Step::Invert { k }
    }

    pub fn scale_t(lambda: Rational) -> Self {
        Step::ScaleT { lambda }
    }

    /// Re-attaches matrices after deserialization.
    pub fn rehydrate(&mut self, field: Option<&CubicField>) -> Result<()> {
        if let Step::Scale { mult, matrix, inverse } = self {
            if matrix.is_none() {
                let field = field.ok_or_else(|| Error::InvalidInput("scale step on a non-norm equation".into()))?;
                *matrix = Some(Box::new(field.mul_matrix(mult)));
                *inverse = Some(Box::new(field.mul_matrix(&field.inv(mult)?)));
            }
        }
        Ok(())
    }

    fn apply_point(&self, p: &[Rational; 4]) -> Result<[Rational; 4]> {
        let [x1, x2, x3, t] = p;
        Ok(match self {
            Step::Shift { t0 } => [x1.clone(), x2.clone(), x3.clone(), t + t0],
            Step::Scale { matrix, .. } => {
                let m = matrix.as_ref().expect("rehydrated");
                let [y1, y2, y3] = mat_vec(m, [x1, x2, x3]);
                [y1, y2, y3, t.clone()]
            }
            Step::Invert { k } => {
                if t.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let s = num_traits::pow(t.recip(), *k as usize);
                [x1 * &s, x2 * &s, x3 * &s, t.recip()]
            }
            Step::ScaleT { lambda } => [x1.clone(), x2.clone(), x3.clone(), t * lambda],
        })
    }

    fn unapply_point(&self, p: &[Rational; 4]) -> Result<[Rational; 4]> {
        let [x1, x2, x3, t] = p;
        Ok(match self {
            Step::Shift { t0 } => [x1.clone(), x2.clone(), x3.clone(), t - t0],
            Step::Scale { inverse, .. } => {
                let m = inverse.as_ref().expect("rehydrated");
                let [y1, y2, y3] = mat_vec(m, [x1, x2, x3]);
                [y1, y2, y3, t.clone()]
            }
            Step::Invert { k } => {
                // (X, t) ↦ (X·T^k, T) with T = 1/t, i.e. X / t^k
                if t.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let s = num_traits::pow(t.recip(), *k as usize);
                [x1 * &s, x2 * &s, x3 * &s, t.recip()]
            }
            Step::ScaleT { lambda } => [x1.clone(), x2.clone(), x3.clone(), t / lambda],
        })
    }

    fn apply_curve(&self, c: &[RatFunc; 4]) -> [RatFunc; 4] {
        let [x1, x2, x3, t] = c;
        match self {
            Step::Shift { t0 } => [x1.clone(), x2.clone(), x3.clone(), t + &RatFunc::constant(t0.clone())],
            Step::Scale { matrix, .. } => {
                let m = matrix.as_ref().expect("rehydrated");
                let row = |r: &[Rational; 3]| &(&x1.scale(&r[0]) + &x2.scale(&r[1])) + &x3.scale(&r[2]);
                [row(&m[0]), row(&m[1]), row(&m[2]), t.clone()]
            }
            Step::Invert { k } => {
                let tinv = t.inv().expect("t(u) is not identically zero");
                let s = tinv.pow(*k);
                [x1 * &s, x2 * &s, x3 * &s, tinv]
            }
            Step::ScaleT { lambda } => [x1.clone(), x2.clone(), x3.clone(), t.scale(lambda)],
        }
    }

    /// The polynomial of the outer model given the inner one.
    fn outer_poly(&self, inner: &UPoly) -> Result<UPoly> {
        Ok(match self {
            Step::Shift { t0 } => inner.taylor_shift(&-t0),
            Step::Scale { matrix, .. } => {
                let m = matrix.as_ref().expect("rehydrated");
                inner.scale(&det3(m))
            }
            Step::Invert { k } => {
                let n = 3 * *k as usize;
                if inner.degree().is_some_and(|d| d > n) {
                    return Err(Error::UnsupportedDegree(format!("inversion of degree > {n}")));
                }
                inner.reverse(n)
            }
            Step::ScaleT { lambda } => inner.scale_arg(&lambda.recip()),
        })
    }
}

fn mat_vec(m: &[[Rational; 3]; 3], v: [&Rational; 3]) -> [Rational; 3] {
    let row = |r: &[Rational; 3]| &r[0] * v[0] + &r[1] * v[1] + &r[2] * v[2];
    [row(&m[0]), row(&m[1]), row(&m[2])]
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackTransform {
    pub steps: Vec<Step>,
}

impl BackTransform {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends an outer step.
    pub fn then(mut self, step: Step) -> Self {
        self.steps.push(step);
        self
    }

    /// `self` followed by `outer`.
    pub fn compose(mut self, outer: &BackTransform) -> Self {
        self.steps.extend(outer.steps.iter().cloned());
        self
    }

    pub fn rehydrate(&mut self, field: Option<&CubicField>) -> Result<()> {
        self.steps.iter_mut().try_for_each(|s| s.rehydrate(field))
    }

    /// Maps a point of the innermost model to the outermost one.
    pub fn apply_point(&self, p: &[Rational; 4]) -> Result<[Rational; 4]> {
        self.steps.iter().try_fold(p.clone(), |acc, s| s.apply_point(&acc))
    }

    /// Inverse map, outermost model to innermost.
    pub fn forward_point(&self, p: &[Rational; 4]) -> Result<[Rational; 4]> {
        self.steps
            .iter()
            .rev()
            .try_fold(p.clone(), |acc, s| s.unapply_point(&acc))
    }

    pub fn apply_curve(&self, c: &[RatFunc; 4]) -> [RatFunc; 4] {
        self.steps.iter().fold(c.clone(), |acc, s| s.apply_curve(&acc))
    }

    /// Rebuilds the outer polynomial from the inner one.
    pub fn outer_poly(&self, inner: &UPoly) -> Result<UPoly> {
        self.steps.iter().try_fold(inner.clone(), |acc, s| s.outer_poly(&acc))
    }
}

/// `g(t) = 1 + Σ c_i t^i` together with the map back to the original model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTarget {
    /// `c1, …, c6`; trailing entries may be zero.
    pub c: [Rational; 6],
    pub back: BackTransform,
}

impl NormalizedTarget {
    pub fn g(&self) -> UPoly {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(self.c.iter().cloned());
        UPoly::from_coeffs(coeffs)
    }

    pub fn from_poly(g: &UPoly, back: BackTransform) -> Result<Self> {
        if g.coeff(0) != Rational::one() {
            return Err(Error::InvalidInput("normalized polynomial must have g(0) = 1".into()));
        }
        if g.degree().is_some_and(|d| d > 6) {
            return Err(Error::UnsupportedDegree(format!("deg g = {} > 6", g.degree().unwrap())));
        }
        let c = std::array::from_fn(|i| g.coeff(i + 1));
        Ok(NormalizedTarget { c, back })
    }
}

/// Moves the known finite point to `(1, 0, 0, 0)` on `S_g` with `g(0) = 1`:
/// shift `t ↦ t + t0`, then divide by `f(t0) = N(P)`.
pub fn normalize(inst: &ProblemInstance) -> Result<NormalizedTarget> {
    if inst.f.degree().is_some_and(|d| d > 6) {
        return Err(Error::UnsupportedDegree(format!(
            "deg f = {} > 6",
            inst.f.degree().unwrap()
        )));
    }
    let (p, t0) = match &inst.point {
        Some(KnownPoint::Finite { x, t }) => (x.clone(), t.clone()),
        Some(KnownPoint::AtInfinity { .. }) | None => return Err(Error::MissingPoint),
    };
    let c0 = inst.f.eval(&t0);
    if c0.is_zero() {
        return Err(Error::TrivialPoint(format!("f({t0}) = 0")));
    }
    let mut back = BackTransform::identity();
    let shifted = inst.f.taylor_shift(&t0);
    if !p.is_one() {
        back = back.then(Step::scale(&inst.field, p)?);
    }
    if !t0.is_zero() {
        back = back.then(Step::shift(t0));
    }
    NormalizedTarget::from_poly(&shifted.scale(&c0.recip()), back)
}

/// Monic sextic with vanishing `t⁵` coefficient, the chain mapping its
/// points back to the input model, and the point at infinity `(1,0,0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monicized {
    pub instance: ProblemInstance,
    pub back: BackTransform,
}

/// Brings a sextic with a known nontrivial point to `h = t⁶ + Σ_{i≤4} c_{6-i} tⁱ`
/// by translate → invert → scale → translate (steps that are the identity
/// are omitted).
pub fn monicize_deg6(inst: &ProblemInstance) -> Result<Monicized> {
    if inst.f.degree() != Some(6) {
        return Err(Error::UnsupportedDegree("monicize_deg6 needs deg f = 6".into()));
    }
    let field = &inst.field;
    // outermost first while building; reversed at the end
    let mut outer_to_inner: Vec<Step> = Vec::new();
    let (f, p) = match &inst.point {
        None => return Err(Error::MissingPoint),
        Some(KnownPoint::AtInfinity { x }) => (inst.f.clone(), x.clone()),
        Some(KnownPoint::Finite { x, t }) => {
            if inst.f.eval(t).is_zero() {
                return Err(Error::TrivialPoint(format!("f({t}) = 0")));
            }
            let mut f1 = inst.f.clone();
            if !t.is_zero() {
                outer_to_inner.push(Step::shift(t.clone()));
                f1 = f1.taylor_shift(t);
            }
            // f1(0) = N(P) ≠ 0, so the reversal keeps degree 6
            outer_to_inner.push(Step::invert(2));
            (f1.reverse(6), x.clone())
        }
    };
    let lc = f.lead().expect("degree 6").clone();
    debug_assert_eq!(field.norm(&p), lc);
    let mut h = f.scale(&lc.recip());
    if !p.is_one() {
        outer_to_inner.push(Step::scale(field, p)?);
    }
    let c5 = h.coeff(5);
    if !c5.is_zero() {
        let t0 = -c5 / Rational::from_integer(6.into());
        h = h.taylor_shift(&t0);
        outer_to_inner.push(Step::shift(t0));
    }
    outer_to_inner.reverse();
    let instance = ProblemInstance::new(field.clone(), h, Some(KnownPoint::AtInfinity { x: FieldElem::one() }))?;
    Ok(Monicized {
        instance,
        back: BackTransform { steps: outer_to_inner },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn q2() -> CubicField {
        CubicField::pure(int(2)).unwrap()
    }

    #[test]
    fn build_g_examples() {
        let inst = ProblemInstance::new(q2(), UPoly::one(), None).unwrap();
        let g = build_g(&inst);
        assert_eq!(g.to_string(), "X1^3 + 6*X1*X2*X3 - 2*X2^3 + 4*X3^3 - 1");

        let k = CubicField::new(int(1), int(1)).unwrap();
        let inst = ProblemInstance::new(k, UPoly::x(), None).unwrap();
        assert!(build_g(&inst).eval(&[int(1), int(0), int(0), int(1)]).is_zero());
    }

    #[test]
    fn instance_validation() {
        let f = UPoly::from_i64(&[9, 0, 0, 0, 1]);
        let bad = KnownPoint::Finite {
            x: FieldElem::from_i64(1, 0, 0),
            t: int(0),
        };
        assert!(matches!(
            ProblemInstance::new(q2(), f.clone(), Some(bad)),
            Err(Error::TrivialPoint(_))
        ));
        let root = KnownPoint::Finite {
            x: FieldElem::zero(),
            t: int(1),
        };
        let g = UPoly::from_i64(&[-1, 1]);
        assert!(matches!(
            ProblemInstance::new(q2(), g, Some(root)),
            Err(Error::TrivialPoint(_))
        ));
    }

    #[test]
    fn normalize_quartic() {
        let f = UPoly::from_i64(&[9, 0, 0, 0, 1]);
        let p = KnownPoint::Finite {
            x: FieldElem::from_i64(1, 1, 1),
            t: int(0),
        };
        let inst = ProblemInstance::new(q2(), f, Some(p)).unwrap();
        let nt = normalize(&inst).unwrap();
        assert_eq!(nt.c, [int(0), int(0), int(0), rat(1, 9), int(0), int(0)]);
        // the scaling element multiplying the equation is (1,1,1)^-1
        let e = q2().inv(&FieldElem::from_i64(1, 1, 1)).unwrap();
        assert_eq!(e, FieldElem::new(rat(1, 3), rat(-1, 3), int(0)));
        assert!(matches!(&nt.back.steps[..], [Step::Scale { mult, .. }] if q2().inv(mult).unwrap() == e));
        // (1,0,0,0) on S_g maps to the known point
        let img = nt.back.apply_point(&[int(1), int(0), int(0), int(0)]).unwrap();
        assert_eq!(img, [int(1), int(1), int(1), int(0)]);
    }

    #[test]
    fn normalize_fixed_point_is_identity() {
        let g = UPoly::from_i64(&[1, 3, 0, -2]);
        let p = KnownPoint::Finite {
            x: FieldElem::one(),
            t: int(0),
        };
        let inst = ProblemInstance::new(q2(), g.clone(), Some(p)).unwrap();
        let nt = normalize(&inst).unwrap();
        assert!(nt.back.is_identity());
        assert_eq!(nt.g(), g);
    }

    #[test]
    fn monicize_identity_and_shift() {
        let f = UPoly::from_i64(&[1, 0, 0, 0, 1, 0, 1]);
        let inst = ProblemInstance::new(q2(), f.clone(), Some(KnownPoint::AtInfinity { x: FieldElem::one() })).unwrap();
        let m = monicize_deg6(&inst).unwrap();
        assert!(m.back.is_identity());
        assert_eq!(m.instance.f, f);

        // monic with t^5 coefficient 6 -> shift by -1
        let f = UPoly::from_i64(&[3, 0, 0, 0, 0, 6, 1]);
        let inst = ProblemInstance::new(q2(), f.clone(), Some(KnownPoint::AtInfinity { x: FieldElem::one() })).unwrap();
        let m = monicize_deg6(&inst).unwrap();
        assert_eq!(m.back.steps, vec![Step::shift(int(-1))]);
        assert!(m.instance.f.coeff(5).is_zero());
        // (t-1)^6 + 6(t-1)^5 + 3
        let expected = &(&UPoly::from_i64(&[-1, 1]).pow(6) + &UPoly::from_i64(&[-1, 1]).pow(5).scale(&int(6)))
            + &UPoly::constant(int(3));
        assert_eq!(m.instance.f, expected);
        assert_eq!(m.back.outer_poly(&m.instance.f).unwrap(), f);
    }

    #[test]
    fn monicize_from_finite_point_round_trips() {
        // f(2) = N(1,1,1) = 9 and f(3) = N(2,0,1) = 12
        let l2 = UPoly::from_i64(&[-2, 1]);
        let l3 = UPoly::from_i64(&[-3, 1]);
        let f = &(&UPoly::constant(int(9)) + &l2.scale(&int(3))) + &(&(&l2 * &l3) * &UPoly::from_i64(&[0, 1, 0, 0, 5]));
        let inst = ProblemInstance::new(
            q2(),
            f.clone(),
            Some(KnownPoint::Finite {
                x: FieldElem::from_i64(1, 1, 1),
                t: int(2),
            }),
        )
        .unwrap();
        let m = monicize_deg6(&inst).unwrap();
        let h = &m.instance.f;
        assert_eq!(h.lead(), Some(&int(1)));
        assert!(h.coeff(5).is_zero());
        assert_eq!(m.back.outer_poly(h).unwrap(), f);

        let p = [int(2), int(0), int(1), int(3)];
        assert!(inst.surface().contains(&p));
        let inner = m.back.forward_point(&p).unwrap();
        assert!(m.instance.surface().contains(&inner));
        assert_eq!(m.back.apply_point(&inner).unwrap(), p);
        // the known point itself sits at infinity of the inner model
        assert_eq!(
            m.back.forward_point(&[int(1), int(1), int(1), int(2)]),
            Err(Error::DivisionByZero)
        );
    }
}
