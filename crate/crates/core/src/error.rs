use crate::exactmath::{Rational, UPoly};

pub type Result<T> = std::result::Result<T, Error>;

/// A rational root of `x³ + ax + b`, which makes the cubic reducible.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalRoot {
    pub a: Rational,
    pub b: Rational,
    pub root: Rational,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("variable universes differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("binding references unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("x^3 + ({})x + ({}) has the rational root {}; the norm form factors", .0.a, .0.b, .0.root)]
    Reducible(Box<RationalRoot>),

    #[error("cubic discriminant vanishes")]
    DegenerateDiscriminant,

    #[error("zero element has no inverse")]
    ZeroElement,

    #[error("point is trivial or not on the hypersurface: {0}")]
    TrivialPoint(String),

    #[error("this construction needs a known rational point")]
    MissingPoint,

    #[error("unsupported polynomial degree: {0}")]
    UnsupportedDegree(String),

    #[error("coefficients fail the non-degeneracy condition; g factors as a quadratic times a cubic")]
    ConditionFailed,

    #[error("internal denominator vanished identically: {0}")]
    DegenerateDenominator(&'static str),

    #[error("f is equivalent to a polynomial invariant under t -> zeta3*t (c2 = c4 = c5 = 0)")]
    ExceptionalForm,

    #[error("linear coefficient a1 must be nonzero")]
    ZeroA1,

    #[error("required coefficient vanishes: {0}")]
    ZeroCoefficient(&'static str),

    #[error("a = 0 is a pure cubic field; use the pure-cubic constructions")]
    UsePureCubicMethod,

    #[error("form parameters violate a*b*c*e*a3 != 0")]
    ZeroParameter,

    #[error("substituted residual has t-degree {0} > 1")]
    ResidualDegreeError(usize),

    #[error("curve does not lie on the hypersurface; cleared residual = {residual}")]
    IdentityFailed { residual: UPoly },

    #[error("certificate digest {stored} does not match recomputed {computed}")]
    CertificateMismatch { stored: String, computed: String },

    #[error("could not find enough non-pole parameter values")]
    PoleExhaustion,

    #[error("f does not have the shape required by this method: {0}")]
    WrongShape(String),

    #[error("syntax error at offset {offset}: expected one of {expected:?}")]
    Syntax { offset: usize, expected: Vec<String> },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VariableMismatch { .. } => "VariableMismatch",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::DivisionByZero => "DivisionByZero",
            Error::GcdOfZeros => "GcdOfZeros",
            Error::Reducible(_) => "Reducible",
            Error::DegenerateDiscriminant => "DegenerateDiscriminant",
            Error::ZeroElement => "ZeroElement",
            Error::TrivialPoint(_) => "TrivialPoint",
            Error::MissingPoint => "MissingPoint",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::ConditionFailed => "ConditionFailed",
            Error::DegenerateDenominator(_) => "DegenerateDenominator",
            Error::ExceptionalForm => "ExceptionalForm",
            Error::ZeroA1 => "ZeroA1",
            Error::ZeroCoefficient(_) => "ZeroCoefficient",
            Error::UsePureCubicMethod => "UsePureCubicMethod",
            Error::ZeroParameter => "ZeroParameter",
            Error::ResidualDegreeError(_) => "ResidualDegreeError",
            Error::IdentityFailed { .. } => "IdentityFailed",
            Error::CertificateMismatch { .. } => "CertificateMismatch",
            Error::PoleExhaustion => "PoleExhaustion",
            Error::WrongShape(_) => "WrongShape",
            Error::Syntax { .. } => "SyntaxError",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::InvalidInput(_))
    }
}
