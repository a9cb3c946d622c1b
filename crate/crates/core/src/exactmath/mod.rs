//! Exact scalar, polynomial, and rational-function arithmetic over Q.
//!
//! Dense univariate polynomials (`UPoly`), sparse named-variable
//! polynomials (`MPoly`), and reduced rational functions (`RatFunc`). No
//! floating point is used anywhere.

mod mpoly;
mod ratfunc;
pub mod rational;
pub mod roots;
mod upoly;

pub use mpoly::{Binding, Exponents, MPoly};
pub use ratfunc::RatFunc;
pub use rational::{int, parse_rational, rat, Rational};
pub use roots::rational_roots;
pub use upoly::UPoly;
