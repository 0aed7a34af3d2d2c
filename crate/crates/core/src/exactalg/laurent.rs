use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Poly, RatFunc, Rational};
use crate::error::Result;

/// `body * q^offset`, where `body` has a nonzero constant term unless the
/// whole value is zero (then `offset = 0`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    body: Poly,
    offset: i64,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { body: Poly::zero(), offset: 0 }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// `c * q^e` for any integer `e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::new(Poly::constant(c), e)
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::new(p, 0)
    }

    /// Builds `body * q^offset` and moves vanishing low coefficients of the
    /// body into the offset.
    pub fn new(body: Poly, offset: i64) -> Self {
        if body.is_zero() {
            return Self::zero();
        }
        let z = body.coeffs().iter().take_while(|c| c.is_zero()).count();
        if z == 0 {
            return LaurentPoly { body, offset };
        }
        let body = Poly::from_coeffs(body.coeffs()[z..].to_vec());
        LaurentPoly { body, offset: offset + z as i64 }
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.offset {
            return Rational::zero();
        }
        self.body.coeff((e - self.offset) as usize)
    }

    /// Lowest and highest exponent, `None` for zero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let d = self.body.degree()? as i64;
        Some((self.offset, self.offset + d))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { body: self.body.clone(), offset: self.offset + e }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.body.scale(c), self.offset)
    }

    /// The ordinary polynomial when no negative exponent occurs.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.offset < 0 {
            return None;
        }
        Some(self.body.shift(self.offset as usize))
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::from_laurent(self)
    }

    /// Reduced quotient `self / den`.
    pub fn over(&self, den: &LaurentPoly) -> Result<RatFunc> {
        RatFunc::make(self, den)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let a = self.body.shift((self.offset - lo) as usize);
        let b = rhs.body.shift((rhs.offset - lo) as usize);
        LaurentPoly::new(&a + &b, lo)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { body: -&self.body, offset: self.offset }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(&self.body * &rhs.body, self.offset + rhs.offset)
    }
}

impl From<Poly> for LaurentPoly {
    fn from(p: Poly) -> Self {
        LaurentPoly::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_offset() {
        let l = LaurentPoly::new(Poly::from_ints(&[0, 0, 3, 1]), -5);
        assert_eq!(l.offset(), -3);
        assert_eq!(l.body(), &Poly::from_ints(&[3, 1]));
        assert_eq!(LaurentPoly::new(Poly::zero(), 7), LaurentPoly::zero());
    }

    #[test]
    fn arithmetic_across_offsets() {
        let a = LaurentPoly::new(Poly::from_ints(&[1, 0, 1]), -1); // q^-1 + q
        let b = LaurentPoly::monomial(Rational::from_integer((-1).into()), 1);
        assert_eq!(&a + &b, LaurentPoly::monomial(Rational::from_integer(1.into()), -1));
        assert_eq!((&a * &a).exponent_range(), Some((-2, 2)));
    }
}
