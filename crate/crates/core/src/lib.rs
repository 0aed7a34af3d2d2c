//! Exact computer algebra for q-supercongruences.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, dense polynomials over Q, Laurent polynomials
//!   and reduced rational functions, plus the integer polynomial kernel
//!   (modular gcd, Kronecker multiplication) that backs them.
//! * [`qobjects`]: q-integers, q-shifted factorials, Gaussian binomials,
//!   cyclotomic polynomials, and [`qobjects::QProduct`], a cyclotomically
//!   factored representation of products of those objects.
//! * [`congruence`]: congruences of rational functions modulo monic
//!   polynomials and the auxiliary lemmas.
//! * [`wzengine`]: the q-WZ pair, telescoping, theorem instances, boundary
//!   congruences and the Laurent-polynomial conjecture.
//! * [`numeric`]: the q = 1 world, i.e. classical supercongruences modulo
//!   prime powers and divisibility claims.
//!
//! No floating point is used anywhere.

pub mod congruence;
pub mod error;
pub mod exactalg;
pub mod numeric;
pub mod qobjects;
pub mod wzengine;

pub use error::{Error, Result};
pub use exactalg::{LaurentPoly, Poly, RatFunc, Rational};
