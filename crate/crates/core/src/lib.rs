//! Explicit rational curves on cubic norm-form hypersurfaces
//! `N_{K/Q}(X1 + αX2 + α²X3) = f(t)`, with exact certification and
//! rational point generation.

pub mod cli;
pub mod constructions;
pub mod cubicfield;
pub mod error;
pub mod exactmath;
pub mod normform;
pub mod verify;

pub use cubicfield::{CubicField, FieldElem};
pub use error::{Error, Result};
pub use exactmath::{MPoly, RatFunc, Rational, UPoly};

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactmath::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
