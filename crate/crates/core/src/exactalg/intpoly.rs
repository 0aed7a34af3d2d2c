//! Dense polynomials over Z.
//!
//! This is the performance kernel underneath [`Poly`](super::Poly) and
//! [`RatFunc`](super::RatFunc): multiplication switches to Kronecker
//! substitution for large operands, and the gcd is Brown's modular algorithm
//! over word-size primes with an exact trial-division check at the end.

use std::cmp::min;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;

/// Below this operand length multiplication stays schoolbook.
const KRONECKER_MIN_LEN: usize = 24;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
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

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of vanishing low-order coefficients (0 for the zero polynomial).
    pub fn low_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &BigInt::one(), 0);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled_shifted(other, &BigInt::from(-1), 0);
        out
    }

    /// `self += scale * other * q^shift`.
    pub fn add_scaled_shifted(&mut self, other: &Self, scale: &BigInt, shift: usize) {
        if other.is_zero() || scale.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        let unit = scale.is_one();
        for (i, c) in other.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if unit {
                self.coeffs[i + shift] += c;
            } else {
                self.coeffs[i + shift] += c * scale;
            }
        }
        self.trim();
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() || s == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divide by `q^s`; the low `s` coefficients must vanish.
    pub fn unshift(&self, s: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(s).all(Zero::is_zero));
        if self.coeffs.len() <= s {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs[s..].to_vec() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if min(self.coeffs.len(), other.coeffs.len()) < KRONECKER_MIN_LEN {
            self.mul_schoolbook(other)
        } else {
            self.mul_kronecker(other)
        }
    }

    pub(crate) fn mul_schoolbook(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplication through one big-integer product: both operands are
    /// evaluated at `2^B`, with `B` wide enough that every product
    /// coefficient fits in a balanced `B`-bit digit.
    fn mul_kronecker(&self, other: &Self) -> Self {
        let bits = |p: &Self| p.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
        let terms = min(self.coeffs.len(), other.coeffs.len()) as u64;
        let need = bits(self) + bits(other) + (64 - terms.leading_zeros()) as u64 + 2;
        let words = need.div_ceil(32) as usize;
        let prod = pack(self, words) * pack(other, words);
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        unpack(&prod, words, len)
    }

    /// In-place multiplication by `1 - q^j`, `j >= 1`.
    pub fn mul_one_minus_qj(&mut self, j: usize) {
        debug_assert!(j >= 1);
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + j, BigInt::zero());
        for i in (j..n + j).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - j];
        }
        self.trim();
    }

    /// In-place exact division by `1 - q^j`. Returns `false` (leaving `self`
    /// unspecified) if the division is not exact.
    pub fn div_one_minus_qj(&mut self, j: usize) -> bool {
        debug_assert!(j >= 1);
        if self.is_zero() {
            return true;
        }
        let n = self.coeffs.len();
        if n <= j {
            return false;
        }
        // quotient r satisfies r[i] = p[i] + r[i - j]; the top j coefficients
        // of p must then cancel exactly.
        for i in j..n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - j];
        }
        if !self.coeffs[n - j..].iter().all(Zero::is_zero) {
            return false;
        }
        self.coeffs.truncate(n - j);
        self.trim();
        true
    }

    /// Division with remainder by a monic divisor.
    pub fn divrem_monic(&self, m: &Self) -> (Self, Self) {
        let dm = m.degree().expect("divisor must be nonzero");
        assert!(m.coeffs[dm].is_one(), "divisor must be monic");
        if self.coeffs.len() <= dm {
            return (Self::zero(), self.clone());
        }
        let nonzero: Vec<(usize, &BigInt)> =
            m.coeffs[..dm].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dm];
        for top in (dm..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut r[top]);
            let shift = top - dm;
            for &(j, mj) in &nonzero {
                r[shift + j] -= &c * mj;
            }
            q[shift] = c;
        }
        r.truncate(dm);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    /// Exact quotient by an arbitrary nonzero integer polynomial, or `None`
    /// if the divisor does not divide `self` in Z[q].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree().expect("divisor must be nonzero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() <= dd {
            return None;
        }
        if d.coeffs[dd].is_one() {
            let (q, r) = self.divrem_monic(d);
            return r.is_zero().then_some(q);
        }
        let lead = &d.coeffs[dd];
        let nonzero: Vec<(usize, &BigInt)> =
            d.coeffs[..dd].iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let (c, rest) = r[top].div_rem(lead);
            if !rest.is_zero() {
                return None;
            }
            r[top] = BigInt::zero();
            let shift = top - dd;
            for &(j, dj) in &nonzero {
                r[shift + j] -= &c * dj;
            }
            q[shift] = c;
        }
        if r[..dd].iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_scalar_exact(&self, s: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % s).is_zero());
                    c / s
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Split into `(c, P)` with `self = c * P`, `P` primitive with positive
    /// leading coefficient. The zero polynomial gives `(0, 0)`.
    pub fn primitive(&self) -> (BigInt, Self) {
        let Some(lead) = self.lead() else {
            return (BigInt::zero(), Self::zero());
        };
        let mut c = self.content();
        if lead.is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        let p = self.div_scalar_exact(&c);
        (c, p)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub(crate) fn to_modp(&self, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self.coeffs.iter().map(|c| modp::bigint_mod(c, p)).collect();
        modp::trim(&mut v);
        v
    }

    /// Greatest common divisor in Z[q], normalised to be primitive with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive().1;
        }
        if other.is_zero() {
            return self.primitive().1;
        }
        let (_, a) = self.primitive();
        let (_, b) = other.primitive();
        if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
            return Self::one();
        }
        if a == b {
            return a;
        }
        // common powers of q are split off first; they are cheap and would
        // otherwise cost modular iterations.
        let z = min(a.low_zeros(), b.low_zeros());
        let (a, b) = (a.unshift(z), b.unshift(z));
        modular_gcd(&a, &b).shift(z)
    }
}

fn modular_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
        return IntPoly::one();
    }
    let gamma = a.lead().unwrap().gcd(b.lead().unwrap());
    let mut deg_bound = min(a.coeffs.len(), b.coeffs.len()) - 1;
    // CRT image of gamma / lc(g) * g, its modulus, and its last symmetric lift
    let mut image: Option<(Vec<BigInt>, BigInt)> = None;
    let mut last_lift: Option<IntPoly> = None;
    let mut idx = 0usize;
    loop {
        let p = modp::large_prime(idx);
        idx += 1;
        let gamma_p = modp::bigint_mod(&gamma, p);
        if gamma_p == 0 {
            continue;
        }
        let ap = a.to_modp(p);
        let bp = b.to_modp(p);
        if ap.len() != a.coeffs.len() || bp.len() != b.coeffs.len() {
            continue;
        }
        let mut gp = modp::gcd(&ap, &bp, p);
        let d = gp.len() - 1;
        if d == 0 {
            return IntPoly::one();
        }
        if d > deg_bound {
            continue;
        }
        for c in gp.iter_mut() {
            *c = modp::mul_mod(*c, gamma_p, p);
        }
        let fresh = image.is_none() || d < deg_bound;
        deg_bound = d;
        if fresh {
            image = Some((gp.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(p)));
            last_lift = None;
            continue;
        }
        let (residues, modulus) = image.as_mut().unwrap();
        let m_inv = modp::inv_mod(modp::bigint_mod(modulus, p), p);
        for (r, &g) in residues.iter_mut().zip(gp.iter()) {
            let diff = modp::sub_mod(g, modp::bigint_mod(r, p), p);
            let t = modp::mul_mod(diff, m_inv, p);
            if t != 0 {
                *r += &*modulus * t;
            }
        }
        *modulus *= p;
        let half = &*modulus >> 1;
        let lift = IntPoly::from_coeffs(
            residues.iter().map(|r| if r > &half { r - &*modulus } else { r.clone() }).collect(),
        );
        if last_lift.as_ref() == Some(&lift) {
            let cand = lift.primitive().1;
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return cand;
            }
        }
        last_lift = Some(lift);
    }
}

fn pack(p: &IntPoly, words: usize) -> BigInt {
    let mut pos = vec![0u32; p.coeffs.len() * words];
    let mut neg = vec![0u32; p.coeffs.len() * words];
    let mut any_neg = false;
    for (i, c) in p.coeffs.iter().enumerate() {
        let target = if c.is_negative() {
            any_neg = true;
            &mut neg
        } else {
            &mut pos
        };
        for (k, d) in c.magnitude().iter_u32_digits().enumerate() {
            target[i * words + k] = d;
        }
    }
    let pos = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if any_neg {
        pos - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        pos
    }
}

fn unpack(x: &BigInt, words: usize, len: usize) -> IntPoly {
    let negate = x.is_negative();
    let digits = x.magnitude().to_u32_digits();
    let width = (words * 32) as u64;
    let full = BigInt::one() << width;
    let half = BigInt::one() << (width - 1);
    let mut carry = false;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let lo = min(i * words, digits.len());
        let hi = min((i + 1) * words, digits.len());
        let mut v = BigInt::from_biguint(Sign::Plus, BigUint::new(digits[lo..hi].to_vec()));
        if carry {
            v += 1;
        }
        if v >= half {
            v -= &full;
            carry = true;
        } else {
            carry = false;
        }
        out.push(if negate { -v } else { v });
    }
    IntPoly::from_coeffs(out)
}
