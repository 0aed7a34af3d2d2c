//! The `q → 1` side: classical supercongruences modulo prime powers,
//! integer divisibility claims, and evaluation of rational functions at
//! `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{RatFunc, Rational};

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        x += Rational::one();
    }
    acc
}

/// Trial division; inputs here are small.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact value at `q = 1`; a remaining pole there is reported as
/// [`Error::PoleAtOne`].
pub fn eval_at_one(r: &RatFunc) -> Result<Rational> {
    r.eval(&Rational::one()).map_err(|e| match e {
        Error::DivisionByZero => Error::PoleAtOne,
        other => other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupercongruenceId {
    /// `Σ_{k<=(p-1)/2} (3k+1) C(2k,k)^3 / 16^k ≡ p (mod p^3)`.
    Div1Half,
    /// Same series summed to `p-1`.
    Div1Full,
    /// `Σ_{k<p} 6k^4 C(2k,k)^3 / (16^k (2k-1)) ≡ p + 2p^3 (mod p^4)`.
    Guo1,
    /// `Σ_{k<p} (3k-1) (1/2)_k (-1/2)_k^2 4^k / k!^3 ≡ p - 2p^3 (mod p^4)`.
    Wang,
    /// `guo1` series summed to `p^r - 1`, `≡ p^r (mod p^{r+3})`.
    Guo1Pr,
    /// `wang` series summed to `p^r - 1`, `≡ p^r (mod p^{r+3})`.
    WangPr,
}

impl SupercongruenceId {
    pub const ALL: [SupercongruenceId; 6] = [
        SupercongruenceId::Div1Half,
        SupercongruenceId::Div1Full,
        SupercongruenceId::Guo1,
        SupercongruenceId::Wang,
        SupercongruenceId::Guo1Pr,
        SupercongruenceId::WangPr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SupercongruenceId::Div1Half => "div1_half",
            SupercongruenceId::Div1Full => "div1_full",
            SupercongruenceId::Guo1 => "guo1",
            SupercongruenceId::Wang => "wang",
            SupercongruenceId::Guo1Pr => "guo1_pr",
            SupercongruenceId::WangPr => "wang_pr",
        }
    }

    pub fn needs_r(&self) -> bool {
        matches!(self, SupercongruenceId::Guo1Pr | SupercongruenceId::WangPr)
    }

    fn min_p(&self) -> u64 {
        match self {
            SupercongruenceId::Div1Half | SupercongruenceId::Div1Full => 3,
            _ => 5,
        }
    }
}

impl FromStr for SupercongruenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SupercongruenceId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown supercongruence id {s:?}")))
    }
}

impl fmt::Display for SupercongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupercongruenceSpec {
    pub id: SupercongruenceId,
    pub p: u64,
    /// Only for the prime-power variants, `r >= 2`.
    pub r: Option<u32>,
}

impl SupercongruenceSpec {
    pub fn new(id: SupercongruenceId, p: u64, r: Option<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(invalid(format!("p = {p} is not prime")));
        }
        if p < id.min_p() {
            return Err(invalid(format!("{id} needs p >= {}, got {p}", id.min_p())));
        }
        match (id.needs_r(), r) {
            (true, Some(r)) if r >= 2 => {}
            (true, _) => return Err(invalid(format!("{id} needs r >= 2"))),
            (false, Some(_)) => return Err(invalid(format!("{id} takes no r"))),
            (false, None) => {}
        }
        Ok(SupercongruenceSpec { id, p, r })
    }
}

/// Everything computed by [`evaluate_supercongruence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupercongruenceOutcome {
    pub pass: bool,
    pub sum: Rational,
    pub modulus: BigInt,
    pub residue: BigInt,
    pub target: BigInt,
}

fn central_binomials(count: u64) -> impl Iterator<Item = BigInt> {
    let mut c = BigInt::one();
    (0..count).map(move |k| {
        let out = c.clone();
        // C(2k+2, k+1) = C(2k, k) (2k+1)(2k+2) / (k+1)^2
        c = &c * (2 * k + 1) * (2 * k + 2) / ((k + 1) * (k + 1));
        out
    })
}

fn div1_sum(terms: u64) -> Rational {
    let sixteen = BigInt::from(16);
    let mut pow16 = BigInt::one();
    let mut acc = Rational::zero();
    for (k, c) in central_binomials(terms).enumerate() {
        acc += Rational::new(BigInt::from(3 * k + 1) * c.pow(3u32), pow16.clone());
        pow16 *= &sixteen;
    }
    acc
}

fn guo1_sum(terms: u64) -> Rational {
    let sixteen = BigInt::from(16);
    let mut pow16 = BigInt::one();
    let mut acc = Rational::zero();
    for (k, c) in central_binomials(terms).enumerate() {
        let k = k as i64;
        let num = BigInt::from(6) * BigInt::from(k).pow(4u32) * c.pow(3u32);
        acc += Rational::new(num, &pow16 * (2 * k - 1));
        pow16 *= &sixteen;
    }
    acc
}

fn wang_sum(terms: u64) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let mut a = Rational::one(); // (1/2)_k
    let mut b = Rational::one(); // (-1/2)_k
    let mut fact = BigInt::one();
    let mut pow4 = BigInt::one();
    let mut acc = Rational::zero();
    for k in 0..terms {
        let ki = BigInt::from(k);
        let t = &a * &b * &b * Rational::from_integer(&pow4 * (3 * &ki - 1)) / Rational::from_integer(fact.pow(3u32));
        acc += t;
        let kr = Rational::from_integer(ki.clone());
        a *= &half + &kr;
        b *= &kr - &half;
        fact *= &ki + 1;
        pow4 *= 4;
    }
    acc
}

/// `(3k+1) C(2k,k)^3 / 16^k`.
pub fn div1_summand(k: u32) -> Rational {
    let c = central_binomials(k as u64 + 1).last().expect("nonempty");
    Rational::new(BigInt::from(3 * k + 1) * c.pow(3u32), BigInt::from(16).pow(k))
}

/// `(3k-1) (1/2)_k (-1/2)_k^2 4^k / k!^3`.
pub fn wang_summand(k: u32) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    Rational::from_integer(BigInt::from(3 * k as i64 - 1) * BigInt::from(4).pow(k))
        * pochhammer(&half, k)
        * pochhammer(&-half, k).pow(2)
        / Rational::from_integer(fact.pow(3u32))
}

/// `x mod m` for a rational `x` whose denominator is prime to `p`.
fn reduce_mod(x: &Rational, p: u64, m: &BigInt) -> Result<BigInt> {
    let den = x.denom();
    if (den % BigInt::from(p)).is_zero() {
        return Err(Error::NotPIntegral { p });
    }
    let inv = den.modinv(m).ok_or(Error::NotPIntegral { p })?;
    Ok((x.numer() * inv).mod_floor(m))
}

pub fn evaluate_supercongruence(spec: &SupercongruenceSpec) -> Result<SupercongruenceOutcome> {
    let p = spec.p;
    let pb = BigInt::from(p);
    let (sum, target, modulus) = match spec.id {
        SupercongruenceId::Div1Half => (div1_sum(p.div_ceil(2)), pb.clone(), pb.pow(3u32)),
        SupercongruenceId::Div1Full => (div1_sum(p), pb.clone(), pb.pow(3u32)),
        SupercongruenceId::Guo1 => (guo1_sum(p), &pb + 2 * pb.pow(3u32), pb.pow(4u32)),
        SupercongruenceId::Wang => (wang_sum(p), &pb - 2 * pb.pow(3u32), pb.pow(4u32)),
        SupercongruenceId::Guo1Pr | SupercongruenceId::WangPr => {
            let r = spec.r.ok_or_else(|| invalid("missing r"))?;
            let pr = pb.pow(r);
            let terms = u64::try_from(&pr).map_err(|_| invalid("p^r too large"))?;
            let sum = if spec.id == SupercongruenceId::Guo1Pr { guo1_sum(terms) } else { wang_sum(terms) };
            (sum, pr, pb.pow(r + 3))
        }
    };
    let residue = reduce_mod(&sum, p, &modulus)?;
    let target = target.mod_floor(&modulus);
    Ok(SupercongruenceOutcome { pass: residue == target, sum, modulus, residue, target })
}

pub fn check_supercongruence(spec: &SupercongruenceSpec) -> Result<bool> {
    Ok(evaluate_supercongruence(spec)?.pass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisibilityId {
    /// `2n C(2n,n) | Σ_{k<n} (3k+1) C(2k,k)^3 16^{n-k-1}`.
    #[serde(rename = "sun_3k1")]
    Sun3k1,
    /// `2n C(2n,n) | Σ_{k<n} 6k^4 C(2k,k)^3 16^{n-k-1} / (2k-1)`.
    #[serde(rename = "sunby")]
    Sunby,
    /// Same sum as `sunby`, divisor `4n C(2n,n)`.
    #[serde(rename = "strong")]
    Strong,
}

impl DivisibilityId {
    pub const ALL: [DivisibilityId; 3] = [DivisibilityId::Sun3k1, DivisibilityId::Sunby, DivisibilityId::Strong];

    pub fn as_str(&self) -> &'static str {
        match self {
            DivisibilityId::Sun3k1 => "sun_3k1",
            DivisibilityId::Sunby => "sunby",
            DivisibilityId::Strong => "strong",
        }
    }
}

impl FromStr for DivisibilityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DivisibilityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown divisibility id {s:?}")))
    }
}

impl fmt::Display for DivisibilityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisibilitySpec {
    pub id: DivisibilityId,
    pub n: u32,
}

impl DivisibilitySpec {
    pub fn new(id: DivisibilityId, n: i64) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("divisibility needs n >= 2, got {n}")));
        }
        let n = u32::try_from(n).map_err(|_| invalid("n too large"))?;
        Ok(DivisibilitySpec { id, n })
    }
}

/// The integer sum `Σ_{k<n} term_k 16^{n-k-1}`.
pub fn divisibility_sum(id: DivisibilityId, n: u32) -> BigInt {
    let n = n as u64;
    let mut acc = BigInt::zero();
    for (k, c) in central_binomials(n).enumerate() {
        let k = k as u64;
        let c3 = c.pow(3u32);
        let term = match id {
            DivisibilityId::Sun3k1 => BigInt::from(3 * k + 1) * c3,
            DivisibilityId::Sunby | DivisibilityId::Strong => {
                let num = BigInt::from(6) * BigInt::from(k).pow(4u32) * c3;
                let (q, r) = num.div_rem(&(BigInt::from(2 * k as i64 - 1)));
                assert!(r.is_zero(), "6k^4 C(2k,k)^3 not divisible by 2k-1 at k = {k}");
                q
            }
        };
        acc += term * BigInt::from(16).pow((n - k - 1) as u32);
    }
    acc
}

/// `2n C(2n,n)` or `4n C(2n,n)`.
pub fn divisibility_divisor(id: DivisibilityId, n: u32) -> BigInt {
    let c = central_binomials(n as u64 + 1).last().expect("nonempty");
    let factor = if id == DivisibilityId::Strong { 4 } else { 2 };
    c * factor * n
}

pub fn check_divisibility(spec: &DivisibilitySpec) -> bool {
    divisibility_sum(spec.id, spec.n).is_multiple_of(&divisibility_divisor(spec.id, spec.n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Poly;
    use crate::qobjects::q_binomial;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(1, 2), 0), Rational::one());
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&rat(-1, 2), 3), rat(-3, 8));
    }

    #[test]
    fn supercongruence_examples() {
        let s = SupercongruenceSpec::new(SupercongruenceId::Div1Half, 3, None).unwrap();
        let out = evaluate_supercongruence(&s).unwrap();
        assert_eq!(out.sum, Rational::from_integer(3.into()));
        assert!(out.pass);
        let out = evaluate_supercongruence(&SupercongruenceSpec::new(SupercongruenceId::Guo1, 5, None).unwrap()).unwrap();
        assert_eq!((out.residue.clone(), out.target.clone()), (255.into(), 255.into()));
        let out = evaluate_supercongruence(&SupercongruenceSpec::new(SupercongruenceId::Wang, 5, None).unwrap()).unwrap();
        assert_eq!((out.residue.clone(), out.target.clone()), (380.into(), 380.into()));
    }

    #[test]
    fn spec_validation() {
        assert!(SupercongruenceSpec::new(SupercongruenceId::Guo1, 9, None).is_err());
        assert!(SupercongruenceSpec::new(SupercongruenceId::Guo1, 3, None).is_err());
        assert!(SupercongruenceSpec::new(SupercongruenceId::Guo1Pr, 5, None).is_err());
        assert!(SupercongruenceSpec::new(SupercongruenceId::Guo1Pr, 5, Some(1)).is_err());
        assert!(SupercongruenceSpec::new(SupercongruenceId::Wang, 5, Some(2)).is_err());
        assert!(DivisibilitySpec::new(DivisibilityId::Sunby, 1).is_err());
    }

    #[test]
    fn p_in_denominator_is_rejected() {
        assert_eq!(reduce_mod(&rat(1, 5), 5, &BigInt::from(125)), Err(Error::NotPIntegral { p: 5 }));
        assert_eq!(reduce_mod(&rat(1, 2), 5, &BigInt::from(125)).unwrap(), BigInt::from(63));
    }

    #[test]
    fn wang_series_matches_pochhammer_definition() {
        let mut acc = Rational::zero();
        let mut fact = BigInt::one();
        for k in 0..12u32 {
            if k > 0 {
                fact *= k;
            }
            acc += rat(3 * k as i64 - 1, 1) * pochhammer(&rat(1, 2), k) * pochhammer(&rat(-1, 2), k).pow(2i32)
                * Rational::from_integer(BigInt::from(4).pow(k))
                / Rational::from_integer(fact.pow(3u32));
            assert_eq!(wang_sum(k as u64 + 1), acc);
        }
    }

    #[test]
    fn summands_match_series() {
        let mut acc = Rational::zero();
        for k in 0..10 {
            acc += wang_summand(k);
            assert_eq!(acc, wang_sum(k as u64 + 1));
        }
        assert_eq!(div1_summand(1), rat(2, 1));
        assert_eq!((0..4).map(div1_summand).sum::<Rational>(), div1_sum(4));
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility_sum(DivisibilityId::Sunby, 2), BigInt::from(48));
        assert_eq!(divisibility_sum(DivisibilityId::Sun3k1, 2), BigInt::from(48));
        assert_eq!(divisibility_divisor(DivisibilityId::Sunby, 2), BigInt::from(24));
        assert_eq!(divisibility_divisor(DivisibilityId::Strong, 2), BigInt::from(48));
        for id in DivisibilityId::ALL {
            assert!(check_divisibility(&DivisibilitySpec::new(id, 2).unwrap()));
        }
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(eval_at_one(&RatFunc::one()).unwrap(), Rational::one());
        let r = RatFunc::new(&Poly::from_ints(&[1, 0, 1]), &Poly::from_ints(&[0, 1])).unwrap();
        assert_eq!(eval_at_one(&r).unwrap(), rat(2, 1));
        assert_eq!(eval_at_one(&RatFunc::from_poly(&q_binomial(4, 2))).unwrap(), rat(6, 1));
        let pole = RatFunc::new(&Poly::one(), &Poly::from_ints(&[1, -1])).unwrap();
        assert_eq!(eval_at_one(&pole), Err(Error::PoleAtOne));
    }
}
