//! JSON and plain-text rendering. Every rational is written as a string.

use std::fmt::Write as _;

use serde_json::{json, Value};

use super::dispatch::Construction;
use crate::constructions::ConstructionReport;
use crate::exactmath::{RatFunc, Rational, UPoly};
use crate::verify::{Certificate, PointRecord};

const NAMES: [&str; 4] = ["X1", "X2", "X3", "t"];

fn rats<'a>(v: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(v.into_iter().map(|r| Value::String(r.to_string())).collect())
}

/// Ascending coefficients.
pub fn poly_json(p: &UPoly) -> Value {
    rats(p.coeffs())
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({ "num": poly_json(r.num()), "den": poly_json(r.den()) })
}

fn components_json(c: &[RatFunc; 4]) -> Value {
    let mut m = serde_json::Map::new();
    for (n, r) in NAMES.iter().zip(c) {
        m.insert(n.to_string(), ratfunc_json(r));
    }
    Value::Object(m)
}

fn report_json(r: &ConstructionReport) -> Value {
    let ansatz = r.ansatz.as_ref().map(|a| {
        json!({
            "p": ratfunc_json(&a.p),
            "q": ratfunc_json(&a.q),
            "r": a.r.as_ref().map(ratfunc_json),
            "s": a.s.as_ref().map(ratfunc_json),
        })
    });
    let conic = r.conic.as_ref().map(|c| {
        json!({
            "equation": c.equation.to_string(),
            "base_point": rats([&c.base_point.0, &c.base_point.1]),
            "parametrization": [ratfunc_json(&c.parametrization.0), ratfunc_json(&c.parametrization.1)],
        })
    });
    json!({
        "order": r.order,
        "denominator": poly_json(&r.denominator),
        "low": poly_json(&r.low),
        "high": poly_json(&r.high),
        "ansatz": ansatz,
        "conic": conic,
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "status": if c.cleared_residual.is_zero() { "ok" } else { "failed" },
        "digest": c.digest,
        "cleared_residual": poly_json(&c.cleared_residual),
        "denominator": poly_json(&c.denominator),
        "checked_at": rats(&c.checked_at),
    })
}

pub fn construction_json(c: &Construction) -> Value {
    json!({
        "method": c.method().name(),
        "instance": serde_json::to_value(c.instance.to_file()).expect("serializable"),
        "curve": components_json(c.curve.image()),
        "working_curve": components_json(&c.curve.components),
        "back_transform": serde_json::to_value(&c.curve.back.steps).expect("serializable"),
        "poles": rats(c.curve.poles()),
        "irrational_poles": c.curve.has_irrational_poles(),
        "report": c.report.as_ref().map(report_json),
        "certificate": certificate_json(&c.certificate),
    })
}

pub fn construction_text(c: &Construction) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "method: {}", c.method());
    let _ = writeln!(s, "f(t) = {}", c.instance.f);
    for (n, r) in NAMES.iter().zip(c.curve.image()) {
        let _ = writeln!(s, "{n}(u) = {r}");
    }
    let poles: Vec<String> = c.curve.poles().iter().map(ToString::to_string).collect();
    let _ = writeln!(
        s,
        "rational poles: {}",
        if poles.is_empty() {
            "none".into()
        } else {
            poles.join(", ")
        }
    );
    s.push_str(&certificate_text(c));
    s
}

pub fn certificate_text(c: &Construction) -> String {
    let cert = &c.certificate;
    let status = if cert.cleared_residual.is_zero() {
        "ok"
    } else {
        "FAILED"
    };
    format!(
        "certificate: {status} (cleared residual = {}, {} spot checks)\ndigest: {}\n",
        cert.cleared_residual,
        cert.checked_at.len(),
        cert.digest
    )
}

pub fn points_text(points: &[PointRecord]) -> String {
    let mut s = String::from("u\tX1\tX2\tX3\tt\tnorm\n");
    for p in points {
        let [x1, x2, x3, t] = &p.point;
        let _ = writeln!(s, "{}\t{x1}\t{x2}\t{x3}\t{t}\t{}", p.u, p.norm_value);
    }
    s
}
