//! Products of q-objects kept in cyclotomic factored form.
//!
//! Every q-integer, q-shifted factorial and Gaussian binomial that occurs in
//! the identities is, up to a rational constant and a power of `q`, a product
//! of cyclotomic polynomials with integer exponents. [`QProduct`] stores
//! exactly that, so products and quotients cancel symbolically. A [`QSum`]
//! is expanded only once, over the common denominator of its terms, and
//! reduced by trial division against the (known, irreducible) denominator
//! factors. Because each `Φ_d` is irreducible over Q and the denominator
//! contains nothing else besides powers of `q`, the result is the reduced
//! form without any general polynomial gcd.

use std::collections::BTreeMap;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic_int, divisors, mobius};
use crate::error::{Error, Result};
use crate::exactalg::{modp, IntPoly, RatFunc, Rational};

/// `coeff * q^qpow * ∏ Φ_d(q)^{e_d}`; zero is `coeff = 0` with no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QProduct {
    coeff: Rational,
    qpow: i64,
    phi: BTreeMap<u32, i64>,
}

impl QProduct {
    pub fn zero() -> Self {
        QProduct { coeff: Rational::zero(), qpow: 0, phi: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QProduct { coeff: c, qpow: 0, phi: BTreeMap::new() }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(Rational::new(n.into(), d.into()))
    }

    pub fn q_power(e: i64) -> Self {
        QProduct { coeff: Rational::one(), qpow: e, phi: BTreeMap::new() }
    }

    /// `Φ_d(q)^e`.
    pub fn cyclotomic(d: u32, e: i64) -> Self {
        assert!(d >= 1);
        let mut phi = BTreeMap::new();
        if e != 0 {
            phi.insert(d, e);
        }
        QProduct { coeff: Rational::one(), qpow: 0, phi }
    }

    /// `q^a - 1` for `a >= 1`, i.e. `∏_{d | a} Φ_d`.
    fn q_pow_minus_one(a: u32) -> Self {
        let phi = divisors(a).into_iter().map(|d| (d, 1)).collect();
        QProduct { coeff: Rational::one(), qpow: 0, phi }
    }

    /// `[n] = (1 - q^n) / (1 - q)` for any integer `n`; `[-m] = -q^{-m} [m]`.
    pub fn q_integer(n: i64) -> Self {
        match n {
            0 => Self::zero(),
            n if n > 0 => Self::q_pow_minus_one(n as u32) * Self::cyclotomic(1, -1),
            n => -(Self::q_power(n) * Self::q_integer(-n)),
        }
    }

    /// `1 - q^a` for any integer `a` (zero when `a = 0`).
    pub fn one_minus_q_pow(a: i64) -> Self {
        match a {
            0 => Self::zero(),
            a if a > 0 => -Self::q_pow_minus_one(a as u32),
            a => -(Self::q_power(a) * Self::one_minus_q_pow(-a)),
        }
    }

    /// `1 + q^a` for any integer `a`.
    pub fn one_plus_q_pow(a: i64) -> Self {
        match a {
            0 => Self::int(2),
            a if a > 0 => {
                // (q^{2a} - 1) / (q^a - 1): the Φ_d with d | 2a, d ∤ a
                let a = a as u32;
                let phi = divisors(2 * a).into_iter().filter(|d| !a.is_multiple_of(*d)).map(|d| (d, 1)).collect();
                QProduct { coeff: Rational::one(), qpow: 0, phi }
            }
            a => Self::q_power(a) * Self::one_plus_q_pow(-a),
        }
    }

    /// `(±q^base; q^step)_len = ∏_{i<len} (1 ∓ q^{base + i·step})`.
    pub fn pochhammer(negated_base: bool, base: i64, step: u32, len: u32) -> Self {
        let mut acc = Self::one();
        for i in 0..len as i64 {
            let e = base + i * step as i64;
            let factor =
                if negated_base { Self::one_plus_q_pow(e) } else { Self::one_minus_q_pow(e) };
            acc = acc * factor;
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `(q; q)_n`.
    pub fn q_factorial(n: u32) -> Self {
        Self::pochhammer(false, 1, 1, n)
    }

    /// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside
    /// `0 <= k <= n`.
    pub fn q_binomial(n: i64, k: i64) -> Self {
        if n < 0 || k < 0 || k > n {
            return Self::zero();
        }
        let (n, k) = (n as u32, k as u32);
        Self::q_factorial(n)
            .div(&Self::q_factorial(k).mul(Self::q_factorial(n - k)))
            .expect("q-factorials are nonzero")
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn q_exponent(&self) -> i64 {
        self.qpow
    }

    /// Nonzero cyclotomic exponents, keyed by index.
    pub fn phi_exponents(&self) -> &BTreeMap<u32, i64> {
        &self.phi
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.coeff *= c;
        out
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.recip()?)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QProduct {
            coeff: self.coeff.recip(),
            qpow: -self.qpow,
            phi: self.phi.iter().map(|(&d, &e)| (d, -e)).collect(),
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        if self.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        let mut coeff = Rational::one();
        for _ in 0..e {
            coeff *= &self.coeff;
        }
        Ok(QProduct {
            coeff,
            qpow: self.qpow * e,
            phi: if e == 0 { BTreeMap::new() } else { self.phi.iter().map(|(&d, &x)| (d, x * e)).collect() },
        })
    }

    /// Reduced rational function. Numerator and denominator are coprime by
    /// construction, so no gcd is needed.
    pub fn to_ratfunc(&self) -> RatFunc {
        QSum::from(vec![self.clone()]).to_ratfunc()
    }
}

impl Mul for QProduct {
    type Output = QProduct;
    fn mul(mut self, rhs: QProduct) -> QProduct {
        if self.is_zero() || rhs.is_zero() {
            return QProduct::zero();
        }
        self.coeff *= rhs.coeff;
        self.qpow += rhs.qpow;
        for (d, e) in rhs.phi {
            let slot = self.phi.entry(d).or_insert(0);
            *slot += e;
            if *slot == 0 {
                self.phi.remove(&d);
            }
        }
        self
    }
}

impl Mul<&QProduct> for &QProduct {
    type Output = QProduct;
    fn mul(self, rhs: &QProduct) -> QProduct {
        self.clone() * rhs.clone()
    }
}

impl Neg for QProduct {
    type Output = QProduct;
    fn neg(mut self) -> QProduct {
        self.coeff = -self.coeff;
        self
    }
}

/// Expands `∏ Φ_d^{e_d}` (all `e_d >= 0`) through the Möbius form
/// `Φ_d = ∏_{j | d} (1 - q^j)^{μ(d/j)}` (times `-1` for `d = 1`), so every
/// step is a two-term multiplication or exact division.
pub fn expand_phi_product(exps: &BTreeMap<u32, i64>) -> IntPoly {
    let mut powers: BTreeMap<u32, i64> = BTreeMap::new();
    let mut negate = false;
    for (&d, &e) in exps {
        assert!(e >= 0, "negative exponent in polynomial expansion");
        if d == 1 && e % 2 == 1 {
            negate = true;
        }
        for j in divisors(d) {
            let mu = mobius(d / j);
            if mu != 0 {
                *powers.entry(j).or_insert(0) += mu * e;
            }
        }
    }
    let mut acc = IntPoly::one();
    for (&j, &a) in &powers {
        for _ in 0..a.max(0) {
            acc.mul_one_minus_qj(j as usize);
        }
    }
    for (&j, &a) in powers.iter().rev() {
        for _ in 0..(-a).max(0) {
            let ok = acc.div_one_minus_qj(j as usize);
            assert!(ok, "Möbius expansion must divide exactly");
        }
    }
    if negate {
        acc.neg()
    } else {
        acc
    }
}

/// Multiplicity of `Φ_d` in `s`, capped at `cap`, after dividing it out.
fn strip_factor(s: &mut IntPoly, s_mod: &mut Vec<u64>, d: u32, cap: i64, p: u64) -> i64 {
    let phi = cyclotomic_int(d);
    let phi_mod = phi.to_modp(p);
    // an upper bound from the image mod p, then confirmed exactly
    let mut probe = s_mod.clone();
    let mut bound = 0;
    while bound < cap {
        match modp::div_if_divisible(&probe, &phi_mod, p) {
            Some(q) => {
                probe = q;
                bound += 1;
            }
            None => break,
        }
    }
    let mut count = 0;
    while count < bound {
        let (q, r) = s.divrem_monic(&phi);
        if !r.is_zero() {
            break;
        }
        *s = q;
        count += 1;
    }
    if count == bound {
        *s_mod = probe;
    } else {
        *s_mod = s.to_modp(p);
    }
    count
}

/// A finite sum of [`QProduct`] terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QSum {
    terms: Vec<QProduct>,
}

impl QSum {
    pub fn new() -> Self {
        QSum { terms: Vec::new() }
    }

    pub fn push(&mut self, t: QProduct) {
        if !t.is_zero() {
            self.terms.push(t);
        }
    }

    pub fn terms(&self) -> &[QProduct] {
        &self.terms
    }

    pub fn extend(&mut self, other: QSum) {
        self.terms.extend(other.terms);
    }

    pub fn negated(&self) -> QSum {
        QSum { terms: self.terms.iter().cloned().map(Neg::neg).collect() }
    }

    /// Reduced rational function of the sum.
    ///
    /// All terms are brought over the common denominator
    /// `q^T ∏ Φ_d^{E_d}` (exponent-wise maximum), the numerators are expanded
    /// and added as integer polynomials, and then each `Φ_d` and `q` is
    /// divided out of the total as often as it divides.
    pub fn to_ratfunc(&self) -> RatFunc {
        if self.terms.is_empty() {
            return RatFunc::zero();
        }
        let mut den: BTreeMap<u32, i64> = BTreeMap::new();
        let mut t = 0i64;
        let mut l = BigInt::one();
        for term in &self.terms {
            for (&d, &e) in &term.phi {
                if e < 0 {
                    let slot = den.entry(d).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
            t = t.max(-term.qpow);
            l = l.lcm(term.coeff.denom());
        }
        let mut total = IntPoly::zero();
        for term in &self.terms {
            let mut exps = den.clone();
            for (&d, &e) in &term.phi {
                *exps.entry(d).or_insert(0) += e;
            }
            exps.retain(|_, e| *e != 0);
            let body = expand_phi_product(&exps);
            let scale = term.coeff.numer() * (&l / term.coeff.denom());
            total.add_scaled_shifted(&body, &scale, (term.qpow + t) as usize);
        }
        if total.is_zero() {
            return RatFunc::zero();
        }
        let p = modp::large_prime(0);
        let mut total_mod = total.to_modp(p);
        for (&d, e) in den.iter_mut() {
            *e -= strip_factor(&mut total, &mut total_mod, d, *e, p);
        }
        den.retain(|_, e| *e != 0);
        let z = (total.low_zeros() as i64).min(t);
        let total = total.unshift(z as usize);
        let den_poly = expand_phi_product(&den).shift((t - z) as usize);
        RatFunc::from_coprime_parts(Rational::new(BigInt::one(), l), total, den_poly)
    }
}

impl From<Vec<QProduct>> for QSum {
    fn from(terms: Vec<QProduct>) -> Self {
        let mut s = QSum::new();
        for t in terms {
            s.push(t);
        }
        s
    }
}

impl FromIterator<QProduct> for QSum {
    fn from_iter<I: IntoIterator<Item = QProduct>>(iter: I) -> Self {
        QSum::from(iter.into_iter().collect::<Vec<_>>())
    }
}
