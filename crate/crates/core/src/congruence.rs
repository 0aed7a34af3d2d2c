//! Congruences of rational functions modulo polynomials.
//!
//! `A ≡ B (mod P)` means that `P` divides the numerator of the reduced form
//! of `A - B` in Z[q]. Every modulus used here is monic with integer
//! coefficients, and dividing an integer polynomial by a monic integer
//! polynomial stays in Z[q], so divisibility can be tested by plain
//! Euclidean division of the primitive integer numerator.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exactalg::{IntPoly, LaurentPoly, Poly, RatFunc};
use crate::qobjects::{cyclotomic_int, q_pochhammer, QPochhammerSpec, QProduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusKind {
    QInteger,
    Cyclotomic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulusFactor {
    pub kind: ModulusKind,
    pub n: u32,
    pub power: u32,
}

/// Product of q-integers and cyclotomic polynomials, e.g. `[n] Φ_n(q)^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulusSpec {
    factors: Vec<ModulusFactor>,
}

impl ModulusSpec {
    pub fn new(factors: Vec<ModulusFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("modulus needs at least one factor"));
        }
        if let Some(f) = factors.iter().find(|f| f.n < 1 || f.power < 1) {
            return Err(invalid(format!("bad modulus factor {f:?}")));
        }
        Ok(ModulusSpec { factors })
    }

    /// `[n]^qint_power Φ_n^phi_power`; zero powers are omitted.
    pub fn qint_phi(n: u32, qint_power: u32, phi_power: u32) -> Result<Self> {
        let mut factors = Vec::new();
        if qint_power > 0 {
            factors.push(ModulusFactor { kind: ModulusKind::QInteger, n, power: qint_power });
        }
        if phi_power > 0 {
            factors.push(ModulusFactor { kind: ModulusKind::Cyclotomic, n, power: phi_power });
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[ModulusFactor] {
        &self.factors
    }
}

impl fmt::Display for ModulusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            match fac.kind {
                ModulusKind::QInteger => write!(f, "[{}]", fac.n)?,
                ModulusKind::Cyclotomic => write!(f, "Φ_{}", fac.n)?,
            }
            if fac.power > 1 {
                write!(f, "^{}", fac.power)?;
            }
        }
        Ok(())
    }
}

fn build_int(spec: &ModulusSpec) -> IntPoly {
    let mut acc = IntPoly::one();
    for f in &spec.factors {
        let base = match f.kind {
            ModulusKind::QInteger => IntPoly::from_coeffs(vec![1.into(); f.n as usize]),
            ModulusKind::Cyclotomic => (*cyclotomic_int(f.n)).clone(),
        };
        for _ in 0..f.power {
            acc = acc.mul(&base);
        }
    }
    assert!(acc.lead().is_some_and(|l| *l == 1.into()), "modulus {spec} is not monic");
    acc
}

/// Expanded modulus polynomial; always monic.
pub fn modulus_build(spec: &ModulusSpec) -> Poly {
    Poly::from_int_poly(&build_int(spec))
}

/// Outcome of a congruence test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceResult {
    pub pass: bool,
    /// Quotient `numerator / modulus` on success, remainder on failure.
    pub witness: Poly,
    /// The zero polynomial stands for an exact identity check.
    pub modulus: Poly,
    /// The reduced denominator of `A - B` shares a factor with the modulus.
    /// Diagnostic only: the relation constrains the numerator alone.
    pub denominator_shares_modulus_factor: bool,
}

/// `a ≡ b (mod modulus)` for a monic integer modulus.
pub fn congruent(a: &RatFunc, b: &RatFunc, modulus: &Poly) -> Result<CongruenceResult> {
    congruent_difference(&(a - b), modulus)
}

/// `diff ≡ 0 (mod modulus)`.
pub fn congruent_difference(diff: &RatFunc, modulus: &Poly) -> Result<CongruenceResult> {
    if !modulus.is_monic() || !modulus.is_integral() {
        return Err(invalid("modulus must be a monic integer polynomial"));
    }
    let m = modulus.integer_primitive();
    let (quot, rem) = diff.int_num().divrem_monic(&m);
    let shares = m.degree().is_some_and(|d| d > 0) && diff.int_den().gcd(&m).degree().is_some_and(|d| d > 0);
    let pass = rem.is_zero();
    Ok(CongruenceResult {
        pass,
        witness: Poly::from_int_poly(if pass { &quot } else { &rem }),
        modulus: modulus.clone(),
        denominator_shares_modulus_factor: shares,
    })
}

/// Exact equality `a = b`, reported as a congruence modulo 0; the witness
/// is the primitive numerator of `a - b` (zero on success).
pub fn exact_equality(a: &RatFunc, b: &RatFunc) -> CongruenceResult {
    let diff = a - b;
    CongruenceResult {
        pass: diff.is_zero(),
        witness: diff.integer_primitive_numerator(),
        modulus: Poly::zero(),
        denominator_shares_modulus_factor: false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// `(-q;q)_{n-1} ≡ 1 (mod Φ_n)`.
    Fermat,
    /// `(q;q^2)_n / ((1-q)(q;q)_{n-1}) ≡ [n] (mod [n]Φ_n)`.
    ModN,
    /// `(q;q^2)_{n-1} / (q;q)_{n-1} ≡ -[n] q (mod [n]Φ_n)`.
    ModNNew,
    /// `(q;q^2)_n / ((1-q)(q;q)_{n-1}) = [n] [2n, n] / (-q;q)_n` exactly.
    ModNIdentity,
    /// `[2n, n] / (-q;q)_n ≡ 1 (mod Φ_n)`.
    ModN2,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] =
        [LemmaId::Fermat, LemmaId::ModN, LemmaId::ModNNew, LemmaId::ModNIdentity, LemmaId::ModN2];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::Fermat => "fermat",
            LemmaId::ModN => "mod_n",
            LemmaId::ModNNew => "mod_n_new",
            LemmaId::ModNIdentity => "mod_n_identity",
            LemmaId::ModN2 => "mod_n_2",
        }
    }
}

impl FromStr for LemmaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown lemma id {s:?}")))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn require_odd(n: i64, min_exclusive: i64) -> Result<u32> {
    if n % 2 == 0 || n <= min_exclusive {
        return Err(invalid(format!("n must be odd and > {min_exclusive}, got {n}")));
    }
    u32::try_from(n).map_err(|_| invalid("n too large"))
}

fn neg_q_factorial(n: u32) -> QProduct {
    QProduct::pochhammer(true, 1, 1, n)
}

/// `(q;q^2)_n / ((1-q)(q;q)_{n-1})`.
fn mod_n_lhs(n: u32) -> QProduct {
    let den = QProduct::one_minus_q_pow(1) * QProduct::q_factorial(n - 1);
    QProduct::pochhammer(false, 1, 2, n).div(&den).expect("nonzero")
}

/// Same quotient built from expanded Laurent polynomials.
fn mod_n_lhs_expanded(n: u32) -> Result<RatFunc> {
    let num = q_pochhammer(&QPochhammerSpec::new(1, 2, n)?);
    let den = &LaurentPoly::from_poly(Poly::from_ints(&[1, -1])) * &q_pochhammer(&QPochhammerSpec::new(1, 1, n - 1)?);
    RatFunc::make(&num, &den)
}

pub fn verify_lemma(id: LemmaId, n: i64) -> Result<CongruenceResult> {
    let n = require_odd(n, 1)?;
    let qint = QProduct::q_integer(n as i64);
    let central = QProduct::q_binomial(2 * n as i64, n as i64).div(&neg_q_factorial(n))?;
    match id {
        LemmaId::Fermat => congruent(
            &neg_q_factorial(n - 1).to_ratfunc(),
            &RatFunc::one(),
            &modulus_build(&ModulusSpec::qint_phi(n, 0, 1)?),
        ),
        LemmaId::ModN => congruent(
            &mod_n_lhs(n).to_ratfunc(),
            &qint.to_ratfunc(),
            &modulus_build(&ModulusSpec::qint_phi(n, 1, 1)?),
        ),
        LemmaId::ModNNew => {
            let lhs = QProduct::pochhammer(false, 1, 2, n - 1).div(&QProduct::q_factorial(n - 1))?;
            let rhs = -(qint * QProduct::q_power(1));
            congruent(&lhs.to_ratfunc(), &rhs.to_ratfunc(), &modulus_build(&ModulusSpec::qint_phi(n, 1, 1)?))
        }
        LemmaId::ModNIdentity => Ok(exact_equality(&mod_n_lhs_expanded(n)?, &(qint * central).to_ratfunc())),
        LemmaId::ModN2 => congruent(
            &central.to_ratfunc(),
            &RatFunc::one(),
            &modulus_build(&ModulusSpec::qint_phi(n, 0, 1)?),
        ),
    }
}
