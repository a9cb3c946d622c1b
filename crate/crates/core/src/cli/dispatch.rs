//! Instance resolution and method dispatch shared by the subcommands.

use clap::ValueEnum;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::polyparse::parse_poly;
use crate::constructions::{
    curve_deg4, curve_deg6_monic, curve_general_cubic, curve_genform, curve_pure_cubic_deg6, curve_trinomial,
    ConstructionReport, Method, RationalCurve,
};
use crate::cubicfield::{CubicField, FieldElem};
use crate::error::{Error, Result};
use crate::exactmath::rational::rational_cube_root;
use crate::exactmath::{int, parse_rational, Rational, UPoly};
use crate::normform::{normalize, CubicForm, FormParams, Hypersurface, KnownPoint, ProblemInstance};
use crate::verify::{fiber_check, verify_curve_identity, Certificate};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Auto,
    Pure6,
    Deg4,
    Deg6,
    Trinomial,
    General,
    Genform,
}

impl MethodChoice {
    pub fn from_method(m: Method) -> Self {
        match m {
            Method::Pure6 => MethodChoice::Pure6,
            Method::Deg4 | Method::Deg4Exceptional => MethodChoice::Deg4,
            Method::Deg6 => MethodChoice::Deg6,
            Method::Trinomial => MethodChoice::Trinomial,
            Method::General => MethodChoice::General,
            Method::Genform => MethodChoice::Genform,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(with = "crate::serde_rational")]
    pub a: Rational,
    #[serde(with = "crate::serde_rational")]
    pub b: Rational,
}

/// The on-disk instance format. Every field is optional so that inline
/// flags can fill in or override any of them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

/// A parsed instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub field: Option<CubicField>,
    pub form: Option<FormParams>,
    pub f: UPoly,
    pub point: Option<KnownPoint>,
    pub m: Option<u32>,
}

fn rationals(s: &str, n: usize, what: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(Error::InvalidInput(format!(
            "{what} needs {n} comma-separated rationals, got `{s}`"
        )));
    }
    parts.into_iter().map(parse_rational).collect()
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    let v = rationals(s, 2, "--field")?;
    Ok(FieldSpec {
        a: v[0].clone(),
        b: v[1].clone(),
    })
}

pub fn parse_form(s: &str) -> Result<FormParams> {
    let v = rationals(s, 5, "--form")?;
    Ok(FormParams {
        a: v[0].clone(),
        b: v[1].clone(),
        c: v[2].clone(),
        d: v[3].clone(),
        e: v[4].clone(),
    })
}

pub fn parse_elem(s: &str) -> Result<FieldElem> {
    let v = rationals(s, 3, "--elem")?;
    Ok(FieldElem::new(v[0].clone(), v[1].clone(), v[2].clone()))
}

/// `x,y,z,t`, or `x,y,z,inf` for a point over `t = ∞` (`inf-normalized` is
/// accepted as a synonym).
pub fn parse_point(parts: &[String]) -> Result<KnownPoint> {
    if parts.len() != 4 {
        return Err(Error::InvalidInput(format!(
            "a point has 4 coordinates, got {}",
            parts.len()
        )));
    }
    let x = FieldElem::new(
        parse_rational(parts[0].trim())?,
        parse_rational(parts[1].trim())?,
        parse_rational(parts[2].trim())?,
    );
    match parts[3].trim() {
        "inf" | "inf-normalized" => Ok(KnownPoint::AtInfinity { x }),
        t => Ok(KnownPoint::Finite {
            x,
            t: parse_rational(t)?,
        }),
    }
}

pub fn split_point(s: &str) -> Vec<String> {
    s.split(',').map(|p| p.trim().to_string()).collect()
}

fn point_strings(p: &KnownPoint) -> Vec<String> {
    match p {
        KnownPoint::Finite { x, t } => vec![x.x.to_string(), x.y.to_string(), x.z.to_string(), t.to_string()],
        KnownPoint::AtInfinity { x } => vec![x.x.to_string(), x.y.to_string(), x.z.to_string(), "inf".into()],
    }
}

impl Instance {
    pub fn from_file(file: &InstanceFile) -> Result<Self> {
        let field = match &file.field {
            Some(fs) => Some(CubicField::new(fs.a.clone(), fs.b.clone())?),
            None => None,
        };
        if field.is_none() && file.form.is_none() {
            return Err(Error::InvalidInput("an instance needs --field or --form".into()));
        }
        let f = parse_poly(
            file.f
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("missing --f".into()))?,
        )?;
        let point = file.point.as_deref().map(parse_point).transpose()?;
        Ok(Instance {
            field,
            form: file.form.clone(),
            f,
            point,
            m: file.m,
        })
    }

    /// Canonical echo, parseable by [`Instance::from_file`].
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            field: self.field.as_ref().map(|k| FieldSpec {
                a: k.a().clone(),
                b: k.b().clone(),
            }),
            form: self.form.clone(),
            f: Some(self.f.to_string()),
            point: self.point.as_ref().map(point_strings),
            m: self.m,
        }
    }

    fn field(&self) -> Result<&CubicField> {
        self.field
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("this method needs --field".into()))
    }

    fn pure_field(&self) -> Result<&CubicField> {
        let k = self.field()?;
        if k.is_pure() {
            Ok(k)
        } else {
            Err(Error::WrongShape("method needs a pure cubic field (a = 0)".into()))
        }
    }

    pub fn surface(&self) -> Result<Hypersurface> {
        Ok(match &self.form {
            Some(p) => Hypersurface {
                form: CubicForm::General(p.clone()),
                f: self.f.clone(),
            },
            None => Hypersurface::norm(self.field()?.clone(), self.f.clone()),
        })
    }

    fn problem(&self, point: Option<KnownPoint>) -> Result<ProblemInstance> {
        ProblemInstance::new(self.field()?.clone(), self.f.clone(), point)
    }
}

/// Searches for an obvious point: `(∛lc, 0, 0)` over `t = ∞` for sextics,
/// otherwise `(∛f(t0), 0, 0, t0)` for small integers `t0`.
pub fn find_point(f: &UPoly, allow_infinity: bool) -> Option<KnownPoint> {
    if allow_infinity && f.degree() == Some(6) {
        if let Some(r) = rational_cube_root(f.lead().unwrap()) {
            return Some(KnownPoint::AtInfinity {
                x: FieldElem::new(r, int(0), int(0)),
            });
        }
    }
    let candidates = (0..=10i64).flat_map(|n| if n == 0 { vec![0] } else { vec![n, -n] });
    for t0 in candidates {
        let t0 = int(t0);
        let v = f.eval(&t0);
        if v.is_zero() {
            continue;
        }
        if let Some(r) = rational_cube_root(&v) {
            return Some(KnownPoint::Finite {
                x: FieldElem::new(r, int(0), int(0)),
                t: t0,
            });
        }
    }
    None
}

/// `(m, a2, a1, a0)` for `f = t^{3m} + a2tᵐ + a1t + a0`. With `m = 1` the two
/// linear terms merge; the split puts the whole coefficient in `a1`.
pub fn trinomial_shape(f: &UPoly, m: Option<u32>) -> Result<(u32, Rational, Rational, Rational)> {
    let shape = |msg: &str| Error::WrongShape(msg.to_string());
    let d = f.degree().ok_or_else(|| shape("f = 0"))?;
    if d == 0 || d % 3 != 0 {
        return Err(shape("trinomial needs deg f = 3m"));
    }
    let mm = (d / 3) as u32;
    if m.is_some_and(|m| m != mm) {
        return Err(shape("deg f is not 3m for the given m"));
    }
    if !f.lead().unwrap().is_one() {
        return Err(shape("trinomial needs a monic f"));
    }
    let mu = mm as usize;
    let allowed = |i: usize| i == d || i == mu || i <= 1;
    if (0..=d).any(|i| !allowed(i) && !f.coeff(i).is_zero()) {
        return Err(shape("f has terms outside t^(3m), t^m, t, 1"));
    }
    let a0 = f.coeff(0);
    if mm == 1 {
        let c = f.coeff(1);
        return Ok(if c.is_zero() {
            (1, int(-1), int(1), a0)
        } else {
            (1, int(0), c, a0)
        });
    }
    let a1 = f.coeff(1);
    if a1.is_zero() {
        return Err(Error::ZeroA1);
    }
    Ok((mm, f.coeff(mu), a1, a0))
}

fn general_shape(f: &UPoly) -> Result<(Rational, Rational, Rational)> {
    let ok = f.degree() == Some(6) && f.lead().unwrap().is_one() && [2, 3, 5].iter().all(|&i| f.coeff(i).is_zero());
    if !ok {
        return Err(Error::WrongShape("expected t^6 + a4*t^4 + a1*t + a0".into()));
    }
    Ok((f.coeff(4), f.coeff(1), f.coeff(0)))
}

fn genform_shape(f: &UPoly) -> Result<[Rational; 5]> {
    if f.degree() != Some(6) || !f.lead().unwrap().is_one() || !f.coeff(5).is_zero() {
        return Err(Error::WrongShape(
            "expected t^6 + a4*t^4 + a3*t^3 + a2*t^2 + a1*t + a0".into(),
        ));
    }
    Ok(std::array::from_fn(|i| f.coeff(i)))
}

/// A certified construction together with the resolved instance.
#[derive(Clone, Debug)]
pub struct Construction {
    pub instance: Instance,
    pub curve: RationalCurve,
    pub report: Option<ConstructionReport>,
    pub surface: Hypersurface,
    pub certificate: Certificate,
}

impl Construction {
    pub fn method(&self) -> Method {
        self.curve.method
    }
}

fn finite_point(inst: &Instance) -> Result<KnownPoint> {
    match &inst.point {
        Some(p @ KnownPoint::Finite { .. }) => Ok(p.clone()),
        Some(KnownPoint::AtInfinity { .. }) => Err(Error::TrivialPoint("this method needs a finite point".into())),
        None => find_point(&inst.f, false).ok_or(Error::MissingPoint),
    }
}

fn via_normalize(
    inst: &mut Instance,
    method: Method,
    build: impl FnOnce(&CubicField, &[Rational; 6]) -> Result<(RationalCurve, ConstructionReport)>,
) -> Result<(RationalCurve, Option<ConstructionReport>)> {
    let field = inst.pure_field()?.clone();
    let point = finite_point(inst)?;
    let problem = inst.problem(Some(point.clone()))?;
    let nt = normalize(&problem)?;
    inst.point = Some(point);
    let (curve, rep) = build(&field, &nt.c)?;
    let back = curve.back.clone().compose(&nt.back);
    let method = if curve.method == Method::Deg4Exceptional {
        curve.method
    } else {
        method
    };
    Ok((RationalCurve::new(curve.components, back, method), Some(rep)))
}

fn pick_auto(inst: &Instance) -> MethodChoice {
    if inst.form.is_some() {
        return MethodChoice::Genform;
    }
    match &inst.field {
        Some(k) if k.is_pure() => {
            if inst.f.degree() == Some(4) {
                MethodChoice::Deg4
            } else if trinomial_shape(&inst.f, inst.m).is_ok() {
                MethodChoice::Trinomial
            } else if inst.f.degree() == Some(6) {
                MethodChoice::Deg6
            } else {
                MethodChoice::Pure6
            }
        }
        _ => MethodChoice::General,
    }
}

/// Runs the chosen construction and certifies the result.
pub fn construct(inst: &Instance, choice: MethodChoice) -> Result<Construction> {
    let mut inst = inst.clone();
    let choice = if choice == MethodChoice::Auto {
        pick_auto(&inst)
    } else {
        choice
    };
    let (curve, report) = match choice {
        MethodChoice::Auto => unreachable!("resolved above"),
        MethodChoice::Pure6 => {
            if inst.f.degree().is_some_and(|d| d > 6) {
                return Err(Error::UnsupportedDegree("pure6 needs deg f <= 6".into()));
            }
            via_normalize(&mut inst, Method::Pure6, curve_pure_cubic_deg6)?
        }
        MethodChoice::Deg4 => {
            if inst.f.degree() != Some(4) {
                return Err(Error::UnsupportedDegree("deg4 needs deg f = 4".into()));
            }
            via_normalize(&mut inst, Method::Deg4, |k, c| {
                curve_deg4(k, &[c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
            })?
        }
        MethodChoice::Deg6 => {
            inst.pure_field()?;
            if inst.f.degree() != Some(6) {
                return Err(Error::UnsupportedDegree("deg6 needs deg f = 6".into()));
            }
            if inst.point.is_none() {
                inst.point = Some(find_point(&inst.f, true).ok_or(Error::MissingPoint)?);
            }
            let problem = inst.problem(inst.point.clone())?;
            let (curve, rep) = curve_deg6_monic(&problem)?;
            (curve, Some(rep))
        }
        MethodChoice::Trinomial => {
            let k = inst.pure_field()?.clone();
            let (m, a2, a1, a0) = trinomial_shape(&inst.f, inst.m)?;
            inst.m = Some(m);
            (curve_trinomial(&k, m, &a2, &a1, &a0)?, None)
        }
        MethodChoice::General => {
            let k = inst.field()?.clone();
            let (a4, a1, a0) = general_shape(&inst.f)?;
            let (curve, rep) = curve_general_cubic(&k, &a4, &a1, &a0)?;
            (curve, Some(rep))
        }
        MethodChoice::Genform => {
            let form = inst
                .form
                .clone()
                .ok_or_else(|| Error::InvalidInput("genform needs --form".into()))?;
            let coeffs = genform_shape(&inst.f)?;
            let (curve, rep) = curve_genform(&form, &coeffs)?;
            (curve, Some(rep))
        }
    };
    if !fiber_check(&curve) {
        return Err(Error::ConditionFailed);
    }
    let surface = inst.surface()?;
    let certificate = verify_curve_identity(&curve, &surface)?;
    Ok(Construction {
        instance: inst,
        curve,
        report,
        surface,
        certificate,
    })
}
