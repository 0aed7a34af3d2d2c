//! Exact arithmetic: rationals, polynomials over Q, Laurent polynomials and
//! reduced rational functions.
//!
//! Rationals are `num_rational::BigRational`. Polynomials over Q are dense
//! (`Poly`); the heavy lifting (multiplication, exact division, gcd) happens
//! on primitive integer polynomials (`IntPoly`) behind them.

mod intpoly;
mod laurent;
pub(crate) mod modp;
mod poly;
mod ratfunc;
mod serial;

pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use serial::{format_rational, parse_rational};

/// Exact rational number. Always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use crate::error::{Error, Result};
