//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use normcurve::constructions::except_condition;
use normcurve::exactmath::rational::is_rational_cube;
use normcurve::exactmath::{int, rat, Rational, UPoly};
use normcurve::normform::{FormParams, KnownPoint, ProblemInstance};
use normcurve::{CubicField, FieldElem};
use num_traits::Zero;
use rand::Rng;

pub const HEIGHT: i64 = 20;

/// `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 20`.
pub fn rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-HEIGHT..=HEIGHT), rng.gen_range(1..=HEIGHT))
}

pub fn nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `Q(∛−b)` with `b` a non-cube.
pub fn pure_field(rng: &mut impl Rng) -> CubicField {
    loop {
        let b = nonzero(rng);
        if !is_rational_cube(&b) {
            return CubicField::pure(b).unwrap();
        }
    }
}

/// `x³ + ax + b` irreducible with `a ≠ 0`.
pub fn general_field(rng: &mut impl Rng) -> CubicField {
    loop {
        if let Ok(k) = CubicField::new(nonzero(rng), rational(rng)) {
            return k;
        }
    }
}

pub fn any_field(rng: &mut impl Rng) -> CubicField {
    if rng.gen_bool(0.5) {
        pure_field(rng)
    } else {
        general_field(rng)
    }
}

pub fn elem(rng: &mut impl Rng) -> FieldElem {
    FieldElem::new(rational(rng), rational(rng), rational(rng))
}

pub fn nonzero_elem(rng: &mut impl Rng) -> FieldElem {
    loop {
        let e = elem(rng);
        if !e.is_zero() {
            return e;
        }
    }
}

/// `c1..c6` satisfying the non-degeneracy condition.
pub fn pure6_coeffs(rng: &mut impl Rng) -> [Rational; 6] {
    loop {
        let c: [Rational; 6] = std::array::from_fn(|_| rational(rng));
        if except_condition(&[c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone()]) {
            return c;
        }
    }
}

/// The degenerate family for `c1, c3`, with a free `c6`.
pub fn forced_family(c1: &Rational, c3: &Rational, c6: Rational) -> [Rational; 6] {
    let c1_2 = c1 * c1;
    let c1_3 = &c1_2 * c1;
    [
        c1.clone(),
        &c1_2 * rat(5, 12),
        c3.clone(),
        -c1 * (&c1_3 * int(5) - c3 * int(72)) / int(144),
        -&c1_2 * (&c1_3 - c3 * int(12)) / int(144),
        c6,
    ]
}

pub fn g_poly(c: &[Rational]) -> UPoly {
    let mut coeffs = vec![int(1)];
    coeffs.extend(c.iter().cloned());
    UPoly::from_coeffs(coeffs)
}

/// Quartic coefficients: mostly generic, sometimes the square family
/// `(1 + c1t/2 + c1²t²/12)²` that needs the exceptional branch.
pub fn deg4_coeffs(rng: &mut impl Rng, exceptional: bool) -> [Rational; 4] {
    if exceptional {
        let c1 = nonzero(rng);
        let c1_2 = &c1 * &c1;
        return [
            c1.clone(),
            &c1_2 * rat(5, 12),
            &c1_2 * &c1 / int(12),
            &c1_2 * &c1_2 / int(144),
        ];
    }
    loop {
        let c: [Rational; 4] = std::array::from_fn(|_| rational(rng));
        if !c[3].is_zero() {
            return c;
        }
    }
}

/// A sextic with a nontrivial point, finite or over `t = ∞`.
pub fn sextic_instance(rng: &mut impl Rng, field: &CubicField, at_infinity: bool) -> ProblemInstance {
    loop {
        let p = nonzero_elem(rng);
        let n = field.norm(&p);
        let mut coeffs: Vec<Rational> = (0..7).map(|_| rational(rng)).collect();
        let point = if at_infinity {
            coeffs[6] = n;
            KnownPoint::AtInfinity { x: p }
        } else {
            if coeffs[6].is_zero() {
                continue;
            }
            let t0 = rational(rng);
            let f = UPoly::from_coeffs(coeffs.clone());
            coeffs[0] = &coeffs[0] + (&n - f.eval(&t0));
            KnownPoint::Finite { x: p, t: t0 }
        };
        if let Ok(inst) = ProblemInstance::new(field.clone(), UPoly::from_coeffs(coeffs), Some(point)) {
            return inst;
        }
    }
}

pub fn form_params(rng: &mut impl Rng) -> FormParams {
    FormParams {
        a: nonzero(rng),
        b: nonzero(rng),
        c: nonzero(rng),
        d: rational(rng),
        e: nonzero(rng),
    }
}

/// Form parameters away from the loci where the leading coefficients of
/// `C1` or `C0` vanish.
pub fn generic_form_params(rng: &mut impl Rng) -> FormParams {
    loop {
        let p = form_params(rng);
        let (a, b, d, e) = (&p.a, &p.b, &p.d, &p.e);
        let c1_lead = b * d * int(4) - e * e;
        let c0_lead = a * b * b * int(8) - b * d * e * int(4) + e * e * e;
        if !c1_lead.is_zero() && !c0_lead.is_zero() {
            return p;
        }
    }
}

/// `[a0, a1, a2, a3, a4]` with `a3 ≠ 0`.
pub fn genform_coeffs(rng: &mut impl Rng) -> [Rational; 5] {
    [rational(rng), rational(rng), rational(rng), nonzero(rng), rational(rng)]
}

pub fn sextic(a: &[Rational; 5]) -> UPoly {
    let mut c = a.to_vec();
    c.push(int(0));
    c.push(int(1));
    UPoly::from_coeffs(c)
}
