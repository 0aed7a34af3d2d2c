use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPoly, LaurentPoly, Poly, Rational};
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials over Q.
///
/// Stored as `scale * num / den` with `num` and `den` coprime primitive
/// integer polynomials with positive leading coefficients. The public view
/// ([`RatFunc::num`], [`RatFunc::den`]) is the canonical form over Q: monic
/// denominator, zero as `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    scale: Rational,
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { scale: Rational::zero(), num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { scale: c, num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `q^e` for any integer `e`.
    pub fn q_power(e: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RatFunc { scale: Rational::one(), num: m, den: IntPoly::one() }
        } else {
            RatFunc { scale: Rational::one(), num: IntPoly::one(), den: m }
        }
    }

    pub fn from_poly(p: &Poly) -> Self {
        let (scale, num) = p.to_int_primitive();
        if num.is_zero() {
            return Self::zero();
        }
        RatFunc { scale, num, den: IntPoly::one() }
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        let body = Self::from_poly(l.body());
        if body.is_zero() {
            return body;
        }
        &body * &Self::q_power(l.offset())
    }

    /// Reduced form of `num / den`.
    pub fn new(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (sn, n) = num.to_int_primitive();
        let (sd, d) = den.to_int_primitive();
        Ok(Self::from_int_parts(sn / sd, n, d))
    }

    /// Reduced form of a quotient of Laurent polynomials: negative exponents
    /// are cleared by a power of q, then the gcd is cancelled.
    pub fn make(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let shift = num.offset() - den.offset();
        let (n, d) = if shift >= 0 {
            (num.body().shift(shift as usize), den.body().clone())
        } else {
            (num.body().clone(), den.body().shift((-shift) as usize))
        };
        Self::new(&n, &d)
    }

    /// `scale * n / d` with arbitrary integer polynomials; cancels the gcd.
    pub fn from_int_parts(scale: Rational, n: IntPoly, d: IntPoly) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() || scale.is_zero() {
            return Self::zero();
        }
        let g = n.gcd(&d);
        if g.degree() == Some(0) {
            return Self::from_coprime_parts(scale, n, d);
        }
        let n = n.div_exact(&g).expect("gcd divides numerator");
        let d = d.div_exact(&g).expect("gcd divides denominator");
        Self::from_coprime_parts(scale, n, d)
    }

    /// `scale * n / d` where the caller guarantees `gcd(n, d) = 1` in Q[q].
    pub fn from_coprime_parts(scale: Rational, n: IntPoly, d: IntPoly) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        if n.is_zero() || scale.is_zero() {
            return Self::zero();
        }
        let (cn, n) = n.primitive();
        let (cd, d) = d.primitive();
        RatFunc { scale: scale * Rational::new(cn, cd), num: n, den: d }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scale.is_one() && self.num.is_one() && self.den.is_one()
    }

    /// Canonical numerator over Q (denominator made monic).
    pub fn num(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.den.lead().expect("nonzero denominator");
        Poly::from_int_scaled(&self.num, &(&self.scale / Rational::from_integer(lead.clone())))
    }

    /// Canonical monic denominator.
    pub fn den(&self) -> Poly {
        let lead = self.den.lead().expect("nonzero denominator");
        Poly::from_int_scaled(&self.den, &Rational::new(BigInt::one(), lead.clone()))
    }

    /// Primitive integer numerator with positive leading coefficient.
    pub fn int_num(&self) -> &IntPoly {
        &self.num
    }

    /// Primitive integer denominator with positive leading coefficient.
    pub fn int_den(&self) -> &IntPoly {
        &self.den
    }

    /// The rational factor `c` in `self = c * int_num / int_den`.
    pub fn scale_factor(&self) -> &Rational {
        &self.scale
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// True iff the reduced denominator is `q^t` for some `t >= 0`.
    pub fn is_laurent(&self) -> bool {
        let d = self.den.coeffs();
        d.last().is_some_and(One::is_one) && d[..d.len() - 1].iter().all(Zero::is_zero)
    }

    /// The Laurent polynomial this function equals, if any.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.is_laurent() {
            return None;
        }
        let t = self.den.degree().unwrap() as i64;
        Some(LaurentPoly::new(Poly::from_int_scaled(&self.num, &self.scale), -t))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime_parts(self.scale.recip(), self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at a rational point; fails at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = Poly::from_int_poly(&self.den).eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.scale * Poly::from_int_poly(&self.num).eval(x) / d)
    }

    /// Primitive integer numerator of the reduced form: content 1 and
    /// positive leading coefficient. Zero maps to zero.
    pub fn integer_primitive_numerator(&self) -> Poly {
        Poly::from_int_poly(&self.num)
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let l = self.scale.denom().lcm(rhs.scale.denom());
        let a1 = self.scale.numer() * (&l / self.scale.denom());
        let a2 = rhs.scale.numer() * (&l / rhs.scale.denom());
        let mut t = self.num.mul(&d2).scale(&a1);
        t.add_scaled_shifted(&rhs.num.mul(&d1), &a2, 0);
        if t.is_zero() {
            return Self::zero();
        }
        let scale = Rational::new(BigInt::one(), l);
        if g.degree() == Some(0) {
            return Self::from_coprime_parts(scale, t, self.den.mul(&d2));
        }
        // with both inputs reduced, any common factor of t and the new
        // denominator already divides g
        let h = t.gcd(&g);
        let t = t.div_exact(&h).expect("gcd divides");
        let den = d1.mul(&rhs.den.div_exact(&h).expect("h divides g"));
        Self::from_coprime_parts(scale, t, den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::from_coprime_parts(&self.scale * &rhs.scale, n1.mul(&n2), d1.mul(&d2))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(rhs)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_impl(&-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.mul_impl(rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { scale: -&self.scale, num: self.num.clone(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(&p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        if den.is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / ({})", self.num(), den)
        }
    }
}
