//! Exact certification of curves and generation of rational points on them.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::constructions::{Method, RationalCurve};
use crate::error::{Error, Result};
use crate::exactmath::rational::common_denominator;
use crate::exactmath::{MPoly, RatFunc, Rational, UPoly};
use crate::normform::Hypersurface;

const SPOT_CHECKS: usize = 10;
const SPOT_SEED: u64 = 0x5eed;

/// Proof object: substituting the curve into `G` and multiplying by
/// `denominator` gives `cleared_residual`, which is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub cleared_residual: UPoly,
    pub denominator: UPoly,
    pub method: Method,
    pub checked_at: Vec<Rational>,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    #[serde(with = "crate::serde_rational")]
    pub u: Rational,
    #[serde(serialize_with = "ser_point")]
    pub point: [Rational; 4],
    #[serde(with = "crate::serde_rational")]
    pub norm_value: Rational,
}

fn ser_point<S: serde::Serializer>(p: &[Rational; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|r| r.to_string()))
}

/// Deterministic walk `1, 1 ± n/d, …` with `1 ≤ n, d ≤ 9`.
struct Walk {
    rng: ChaCha8Rng,
    next: Rational,
}

impl Walk {
    fn new(seed: u64) -> Self {
        Walk {
            rng: ChaCha8Rng::seed_from_u64(seed),
            next: Rational::one(),
        }
    }
}

impl Iterator for Walk {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let n: i64 = self.rng.gen_range(1..=9);
        let d: i64 = self.rng.gen_range(1..=9);
        let step = Rational::new(n.into(), d.into());
        let step = if self.rng.gen_bool(0.5) { step } else { -step };
        let out = self.next.clone();
        self.next = &out + step;
        Some(out)
    }
}

fn digest(curve: &RationalCurve, denominator: &UPoly) -> String {
    let mut h = Sha256::new();
    h.update(curve.method.name());
    for c in curve.image() {
        for part in [c.num(), c.den()] {
            h.update(b"|");
            for coeff in part.coeffs() {
                h.update(coeff.to_string());
                h.update(b",");
            }
        }
    }
    h.update(b"|");
    for coeff in denominator.coeffs() {
        h.update(coeff.to_string());
        h.update(b",");
    }
    hex::encode(h.finalize())
}

type ZPoly = Vec<BigInt>;

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zadd_scaled(acc: &mut ZPoly, c: &BigInt, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += c * x;
    }
}

fn zpowers(p: &[BigInt], n: usize) -> Vec<ZPoly> {
    let mut out = vec![vec![BigInt::one()]];
    for _ in 0..n {
        let next = zmul(out.last().unwrap(), p);
        out.push(next);
    }
    out
}

fn to_z(p: &UPoly) -> ZPoly {
    p.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// `(N, D)` over Z with `r = N/D` and `D` having positive leading coefficient.
fn integral_parts(r: &RatFunc) -> (ZPoly, ZPoly, BigInt) {
    let (sd, d) = r.den().to_primitive();
    if r.is_zero() {
        return (Vec::new(), d, BigInt::one());
    }
    let (sn, n) = r.num().to_primitive();
    let s = sn / sd;
    let (p, q) = (s.numer().clone(), s.denom().clone());
    let n = n.into_iter().map(|c| c * &p).collect();
    (n, d, q)
}

/// Clears denominators of `G(X1(u), X2(u), X3(u), t(u))` with
/// `D = L^E · den(t)^F`, where `L` is the lcm of the `Xᵢ` denominators and
/// `E`, `F` are the degrees of `G` in the `Xᵢ` jointly and in `t`. All
/// products are taken over Z.
fn clear_residual(g: &MPoly, image: &[RatFunc; 4]) -> Result<(UPoly, UPoly)> {
    let idx: Vec<usize> = ["X1", "X2", "X3", "t"]
        .iter()
        .map(|n| g.index_of(n).ok_or_else(|| Error::UnknownVariable(n.to_string())))
        .collect::<Result<_>>()?;
    let e_max = g.degree_in_group(&idx[..3]).unwrap_or(0) as usize;
    let f_max = g.degree_in(idx[3]).unwrap_or(0) as usize;

    let parts: Vec<(ZPoly, ZPoly, BigInt)> = image.iter().map(integral_parts).collect();
    // L = lcm(q1, q2, q3) · lcm of the primitive denominators
    let mut lq = BigInt::one();
    let mut lp = UPoly::one();
    for (_, d, q) in &parts[..3] {
        lq = lq.lcm(q);
        lp = lp.lcm(&UPoly::from_integers(d));
    }
    let (_, lprim) = lp.to_primitive();
    let l: ZPoly = lprim.iter().map(|c| c * &lq).collect();
    let lpoly = UPoly::from_integers(&l);
    // Xᵢ = Nᵢ·Mᵢ / L
    let mut xs = Vec::with_capacity(3);
    for (n, d, q) in &parts[..3] {
        let di = UPoly::from_integers(&d.iter().map(|c| c * q).collect::<Vec<_>>());
        let m = lpoly.div_exact(&di)?.ok_or(Error::DegenerateDenominator("lcm"))?;
        xs.push(zpowers(&zmul(n, &to_z(&m)), e_max));
    }
    let (nt, dt, qt) = &parts[3];
    let dt: ZPoly = dt.iter().map(|c| c * qt).collect();
    let l_pows = zpowers(&l, e_max);
    let nt_pows = zpowers(nt, f_max);
    let dt_pows = zpowers(&dt, f_max);

    let kappa = common_denominator(g.terms().map(|(_, c)| c));
    let mut acc = ZPoly::new();
    for (e, c) in g.terms() {
        let ex: Vec<usize> = idx.iter().map(|&i| e[i] as usize).collect();
        let x_deg = ex[0] + ex[1] + ex[2];
        if e.iter().enumerate().any(|(i, &k)| k > 0 && !idx.contains(&i)) {
            return Err(Error::UnknownVariable("extra variable in G".into()));
        }
        let mut prod = zmul(&l_pows[e_max - x_deg], &dt_pows[f_max - ex[3]]);
        for i in 0..3 {
            if ex[i] > 0 {
                prod = zmul(&prod, &xs[i][ex[i]]);
            }
        }
        if ex[3] > 0 {
            prod = zmul(&prod, &nt_pows[ex[3]]);
        }
        let ci = (c * Rational::from_integer(kappa.clone())).to_integer();
        zadd_scaled(&mut acc, &ci, &prod);
    }
    let residual = UPoly::from_integers(&acc).scale(&Rational::new(BigInt::one(), kappa));
    let denominator = UPoly::from_integers(&zmul(&l_pows[e_max], &dt_pows[f_max]));
    Ok((residual, denominator))
}

/// Substitutes the curve into `G`, clears denominators and checks that the
/// result is the zero polynomial; then re-checks a few parameter values by
/// direct evaluation.
pub fn verify_curve_identity(curve: &RationalCurve, surface: &Hypersurface) -> Result<Certificate> {
    let (cleared_residual, denominator) = clear_residual(&surface.defining_poly(), curve.image())?;
    if !cleared_residual.is_zero() {
        return Err(Error::IdentityFailed {
            residual: cleared_residual,
        });
    }

    let mut checked_at = Vec::with_capacity(SPOT_CHECKS);
    for u in Walk::new(SPOT_SEED).take(SPOT_CHECKS * 20) {
        if checked_at.len() == SPOT_CHECKS {
            break;
        }
        if curve.is_pole(&u) || checked_at.contains(&u) {
            continue;
        }
        let p = curve.eval(&u)?;
        let r = surface.residual(&p);
        if !r.is_zero() {
            return Err(Error::IdentityFailed {
                residual: UPoly::constant(r),
            });
        }
        checked_at.push(u);
    }
    let digest = digest(curve, &denominator);
    Ok(Certificate {
        cleared_residual,
        denominator,
        method: curve.method,
        checked_at,
        digest,
    })
}

/// `count` points at distinct parameter values with pairwise distinct `t`
/// and `f(t) ≠ 0`, each re-verified exactly.
pub fn sample_points(
    curve: &RationalCurve,
    surface: &Hypersurface,
    count: usize,
    seed: u64,
) -> Result<Vec<PointRecord>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    // keyed by the reduced pair: hashing a `Ratio` directly is slow for
    // large values
    let key = |r: &Rational| (r.numer().clone(), r.denom().clone());
    let mut seen_u = HashSet::new();
    let mut seen_t = HashSet::new();
    let budget = 1000 + 50 * count;
    for u in Walk::new(seed).take(budget) {
        if !seen_u.insert(key(&u)) || curve.is_pole(&u) {
            continue;
        }
        let point = curve.eval(&u)?;
        let norm_value = surface.f.eval(&point[3]);
        if norm_value.is_zero() || seen_t.contains(&key(&point[3])) {
            continue;
        }
        let r = surface.residual(&point);
        if !r.is_zero() {
            return Err(Error::IdentityFailed {
                residual: UPoly::constant(r),
            });
        }
        seen_t.insert(key(&point[3]));
        out.push(PointRecord { u, point, norm_value });
        if out.len() == count {
            return Ok(out);
        }
    }
    Err(Error::PoleExhaustion)
}

/// Whether the curve leaves the fibres of `(X, t) ↦ t`, i.e. `t(u)` is not
/// constant.
pub fn fiber_check(curve: &RationalCurve) -> bool {
    !curve.t().derivative_numerator().is_zero()
}
