use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q; `coeffs[i]` is the coefficient of
/// `q^i`. The zero polynomial has no coefficients, and otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Poly { coeffs: p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect() }
    }

    /// `scale * p`.
    pub fn from_int_scaled(p: &IntPoly, scale: &Rational) -> Self {
        if scale.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: p.coeffs().iter().map(|c| Rational::from_integer(c.clone()) * scale).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Split as `c * P` with `P` a primitive integer polynomial with positive
    /// leading coefficient. Zero gives `(0, 0)`.
    pub fn to_int_primitive(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::zero(), IntPoly::zero());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let (content, prim) = IntPoly::from_coeffs(ints).primitive();
        (Rational::new(content, lcm), prim)
    }

    /// The integer-primitive associate: scaled by the unique positive rational
    /// making the coefficients coprime integers, then sign-normalised so the
    /// leading coefficient is positive.
    pub fn integer_primitive(&self) -> IntPoly {
        self.to_int_primitive().1
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// Euclidean division: `self = b * quotient + remainder` with
    /// `deg(remainder) < deg(b)`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        if self.degree().is_none_or(|d| d < db) {
            return Ok((Poly::zero(), self.clone()));
        }
        // integer fast path: rescale both sides so the divisor is an integer
        // monic polynomial whenever that is possible.
        if b.is_monic() && b.is_integral() {
            let (c, p) = self.to_int_primitive();
            let m = IntPoly::from_coeffs(b.coeffs.iter().map(|x| x.numer().clone()).collect());
            let (q, r) = p.divrem_monic(&m);
            return Ok((Poly::from_int_scaled(&q, &c), Poly::from_int_scaled(&r, &c)));
        }
        let inv_lead = b.coeffs[db].recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - db];
        for top in (db..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = &r[top] * &inv_lead;
            let shift = top - db;
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    r[shift + j] -= &c * bj;
                }
            }
            q[shift] = c;
        }
        r.truncate(db);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    /// Monic greatest common divisor over Q.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let g = self.integer_primitive().gcd(&other.integer_primitive());
        Ok(Poly::from_int_poly(&g).monic())
    }

    /// Exact quotient when `d` divides `self`, otherwise `None`.
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divrem(d)?;
        Ok(r.is_zero().then_some(q))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (ca, a) = self.to_int_primitive();
        let (cb, b) = rhs.to_int_primitive();
        Poly::from_int_scaled(&a.mul(&b), &(ca * cb))
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<IntPoly> for Poly {
    fn from(p: IntPoly) -> Self {
        Poly::from_int_poly(&p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let a = c.abs();
            let unit = a.is_one() && i > 0;
            if !unit {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match i {
                0 => {}
                1 if unit => write!(f, "q")?,
                1 => write!(f, "*q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "*q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use proptest::test_runner::RngSeed;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn display_examples() {
        assert_eq!(p(&[1, 0, -1, 0, 1]).to_string(), "1 - q^2 + q^4");
        assert_eq!(p(&[0, -3, 1]).to_string(), "-3*q + q^2");
        assert_eq!(Poly::from_coeffs(vec![Rational::new(1.into(), 2.into())]).shift(1).to_string(), "(1/2)*q");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap(), (p(&[1, 1]), Poly::zero()));
        // long division by hand: q^3 = (q - 1)(q^2 + q + 1) + 1
        assert_eq!(p(&[0, 0, 0, 1]).divrem(&p(&[-1, 1])).unwrap(), (p(&[1, 1, 1]), p(&[1])));
        assert_eq!(p(&[5]).divrem(&p(&[1, 1])).unwrap(), (Poly::zero(), p(&[5])));
        assert_eq!(p(&[1]).divrem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn divrem_rational_divisor() {
        // q^2 + 1 = (2q + 1) (q/2 - 1/4) + 5/4
        let (q, rem) = p(&[1, 0, 1]).divrem(&p(&[1, 2])).unwrap();
        assert_eq!(q, Poly::from_coeffs(vec![r(-1, 4), r(1, 2)]));
        assert_eq!(rem, Poly::constant(r(5, 4)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 1, 1]).gcd(&p(&[-1, 0, 0, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[3]).gcd(&p(&[1, 1])).unwrap(), p(&[1]));
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::GcdOfZeros));
        assert_eq!(Poly::zero().gcd(&p(&[2, 4])).unwrap(), Poly::from_coeffs(vec![r(1, 2), r(1, 1)]));
    }

    #[test]
    fn integer_primitive_examples() {
        let half = Poly::from_coeffs(vec![r(1, 2), r(1, 2)]);
        assert_eq!(half.integer_primitive(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(p(&[-4, -6]).integer_primitive(), IntPoly::from_i64s(&[2, 3]));
    }

    fn small_rat_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..12)
            .prop_map(|v| Poly::from_coeffs(v.into_iter().map(|(n, d)| r(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 128, rng_seed: RngSeed::Fixed(11), ..ProptestConfig::default() })]

        #[test]
        fn divrem_reconstructs(a in small_rat_poly(), b in small_rat_poly()) {
            prop_assume!(!b.is_zero());
            let (q, rem) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&b * &q) + &rem, a);
            prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_and_is_greatest(g in small_rat_poly(), u in small_rat_poly(), v in small_rat_poly()) {
            prop_assume!(!g.is_zero() && !u.is_zero() && !v.is_zero());
            let a = &g * &u;
            let b = &g * &v;
            let h = a.gcd(&b).unwrap();
            prop_assert!(h.is_monic());
            prop_assert!(a.div_exact(&h).unwrap().is_some());
            prop_assert!(b.div_exact(&h).unwrap().is_some());
            prop_assert!(h.div_exact(&g).unwrap().is_some());
        }
    }
}
