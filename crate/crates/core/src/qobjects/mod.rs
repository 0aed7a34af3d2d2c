//! q-integers, q-shifted factorials, Gaussian binomials and cyclotomic
//! polynomials.
//!
//! The free functions here build the objects directly as polynomials; the
//! same objects in factored form come from [`QProduct`], which is what the
//! summation code uses.

mod cyclotomic;
mod product;

pub use cyclotomic::{cyclotomic_int, divisors, mobius};
pub use product::{expand_phi_product, QProduct, QSum};

use num_traits::One;

use crate::error::{invalid, Result};
use crate::exactalg::{LaurentPoly, Poly, RatFunc, Rational};

/// Parameters of `(±q^base_exp; q^step)_length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QPochhammerSpec {
    pub base_exp: i64,
    pub step: u32,
    pub length: u32,
    /// Base `-q^a` instead of `q^a`, e.g. `(-q; q)_k`.
    pub negated_base: bool,
}

impl QPochhammerSpec {
    pub fn new(base_exp: i64, step: u32, length: u32) -> Result<Self> {
        if step == 0 {
            return Err(invalid("q-Pochhammer step must be at least 1"));
        }
        Ok(QPochhammerSpec { base_exp, step, length, negated_base: false })
    }

    pub fn negated(mut self) -> Self {
        self.negated_base = true;
        self
    }

    pub fn with_length(mut self, length: u32) -> Self {
        self.length = length;
        self
    }

    /// The same product in factored form.
    pub fn to_product(&self) -> QProduct {
        QProduct::pochhammer(self.negated_base, self.base_exp, self.step, self.length)
    }
}

/// `[n] = 1 + q + ... + q^{n-1}`; `[0] = 0`.
pub fn q_integer(n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(invalid(format!("q-integer needs n >= 0, got {n}")));
    }
    Ok(Poly::from_coeffs(vec![Rational::one(); n as usize]))
}

/// `∏_{i<k} (1 ∓ q^{a + i d})`, expanded factor by factor.
pub fn q_pochhammer(spec: &QPochhammerSpec) -> LaurentPoly {
    let sign = if spec.negated_base { Rational::one() } else { -Rational::one() };
    let mut acc = LaurentPoly::one();
    for i in 0..spec.length as i64 {
        let e = spec.base_exp + i * spec.step as i64;
        let factor = &LaurentPoly::one() + &LaurentPoly::monomial(sign.clone(), e);
        acc = &acc * &factor;
    }
    acc
}

/// Reciprocal of a q-shifted factorial under the convention that
/// `1 / (a; q)_n = 0` for negative `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GuardedReciprocal {
    Zero,
    Value(RatFunc),
}

impl GuardedReciprocal {
    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            GuardedReciprocal::Zero => RatFunc::zero(),
            GuardedReciprocal::Value(r) => r.clone(),
        }
    }
}

/// `1 / (q^a; q^d)_n` with `n = signed_length` (the length stored in `spec`
/// is ignored). Negative lengths give [`GuardedReciprocal::Zero`].
pub fn q_pochhammer_inverse_guard(spec: &QPochhammerSpec, signed_length: i64) -> Result<GuardedReciprocal> {
    if signed_length < 0 {
        return Ok(GuardedReciprocal::Zero);
    }
    let len = u32::try_from(signed_length).map_err(|_| invalid("q-Pochhammer length too large"))?;
    let value = q_pochhammer(&spec.with_length(len));
    Ok(GuardedReciprocal::Value(RatFunc::make(&LaurentPoly::one(), &value)?))
}

/// Gaussian binomial coefficient via the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> Poly {
    if n < 0 || k < 0 || k > n {
        return Poly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] = [i, j] for the current i
    let mut row: Vec<Poly> = vec![Poly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(k) {
            let left = if j >= 1 { row[j - 1].clone() } else { Poly::zero() };
            let right = if j < row.len() { row[j].shift(j) } else { Poly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `Φ_n(q)` for `n >= 1`.
pub fn cyclotomic(n: i64) -> Result<Poly> {
    if n < 1 {
        return Err(invalid(format!("cyclotomic index must be >= 1, got {n}")));
    }
    let n = u32::try_from(n).map_err(|_| invalid("cyclotomic index too large"))?;
    Ok(Poly::from_int_poly(&cyclotomic_int(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(1).unwrap(), p(&[1]));
        assert_eq!(q_integer(0).unwrap(), Poly::zero());
        assert_eq!(q_integer(3).unwrap(), p(&[1, 1, 1]));
        assert!(q_integer(-1).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let s = QPochhammerSpec::new(1, 1, 0).unwrap();
        assert_eq!(q_pochhammer(&s), LaurentPoly::one());
        // 1 - q^{-1}
        let s = QPochhammerSpec::new(-1, 2, 1).unwrap();
        assert_eq!(q_pochhammer(&s), LaurentPoly::new(p(&[-1, 1]), -1));
        // (1 - q)(1 - q^3), expanded by hand
        let s = QPochhammerSpec::new(1, 2, 2).unwrap();
        assert_eq!(q_pochhammer(&s), LaurentPoly::from_poly(p(&[1, -1, 0, -1, 1])));
        assert!(QPochhammerSpec::new(1, 0, 2).is_err());
    }

    #[test]
    fn pochhammer_agrees_with_factored_form() {
        for (neg, a, d, k) in [(false, 1, 1, 6), (true, 1, 1, 5), (false, -3, 2, 4), (false, 5, 2, 3), (true, -2, 3, 3)] {
            let mut spec = QPochhammerSpec::new(a, d, k).unwrap();
            if neg {
                spec = spec.negated();
            }
            assert_eq!(q_pochhammer(&spec).to_ratfunc(), spec.to_product().to_ratfunc(), "{spec:?}");
        }
    }

    #[test]
    fn inverse_guard_examples() {
        let s = QPochhammerSpec::new(2, 2, 0).unwrap();
        assert_eq!(q_pochhammer_inverse_guard(&s, -1).unwrap(), GuardedReciprocal::Zero);
        assert_eq!(q_pochhammer_inverse_guard(&s, 0).unwrap().to_ratfunc(), RatFunc::one());
        let one_over = RatFunc::new(&p(&[1]), &p(&[1, 0, -1])).unwrap();
        assert_eq!(q_pochhammer_inverse_guard(&s, 1).unwrap().to_ratfunc(), one_over);
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        // (q;q)_4 / (q;q)_2^2 expanded
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), p(&[1]));
        }
        assert_eq!(q_binomial(3, 4), Poly::zero());
        assert_eq!(q_binomial(3, -1), Poly::zero());
    }

    #[test]
    fn q_binomial_symmetry_and_specialization() {
        for n in 0..=20i64 {
            let mut binom = BigInt::from(1);
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial(n, n - k));
                assert!(b.coeffs().iter().all(|c| c.is_integer() && *c.numer() >= BigInt::from(0)));
                assert_eq!(b.eval_one(), Rational::from_integer(binom.clone()), "n={n} k={k}");
                binom = binom * (n - k) / (k + 1);
            }
        }
    }

    #[test]
    fn q_binomial_matches_factored_form() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(RatFunc::from_poly(&q_binomial(n, k)), QProduct::q_binomial(n, k).to_ratfunc());
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn cyclotomic_product_is_q_n_minus_one() {
        for n in 1..=200u32 {
            let mut prod = Poly::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic(d as i64).unwrap();
            }
            let expect = &Poly::monomial(Rational::one(), n as usize) - &Poly::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn q_integer_is_product_of_cyclotomics() {
        for n in 1..=100i64 {
            let mut prod = Poly::one();
            for d in divisors(n as u32).into_iter().filter(|&d| d > 1) {
                prod = &prod * &cyclotomic(d as i64).unwrap();
            }
            assert_eq!(prod, q_integer(n).unwrap());
        }
    }

    #[test]
    fn pochhammer_degree_matches_exponent_sum() {
        for (a, d, k) in [(1i64, 1u32, 7u32), (2, 3, 5), (1, 2, 6)] {
            let l = q_pochhammer(&QPochhammerSpec::new(a, d, k).unwrap());
            let (lo, hi) = l.exponent_range().unwrap();
            let sum: i64 = (0..k as i64).map(|i| a + i * d as i64).sum();
            assert_eq!((lo, hi), (0, sum));
        }
    }

    #[test]
    fn fermat_analogue_instances() {
        // (-q; q)_{n-1} - 1 is divisible by Φ_n for odd n
        for n in (3..=41).step_by(2) {
            let l = q_pochhammer(&QPochhammerSpec::new(1, 1, n as u32 - 1).unwrap().negated());
            let diff = &l.to_poly().unwrap() - &Poly::one();
            let (_, r) = diff.divrem(&cyclotomic(n).unwrap()).unwrap();
            assert!(r.is_zero(), "n = {n}");
        }
    }
}
