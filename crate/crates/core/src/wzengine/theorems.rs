use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{choose2, common_ratio, half_exact, poch2, wz_f_product, WZPoint};
use crate::congruence::{congruent_difference, modulus_build, require_odd, CongruenceResult, ModulusSpec};
use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::qobjects::{QProduct, QSum};

/// The five truncated sums checked modulo `[n] Φ_n(q)^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// Summand `[3k][2k][k]^2 / ([2k-1](-q;q)_k^4) [2k,k]^3 q^{-(k^2+3k)/2}`.
    #[serde(rename = "thm_1_1")]
    Thm11,
    /// Summand `[3k-1] (q;q^2)_k (q^{-1};q^2)_k^2 q^{(3k-k^2)/2} / (...)`.
    #[serde(rename = "thm_1_2")]
    Thm12,
    /// Summand `[3k+1] (q;q^2)_k^3 q^{-C(k+1,2)} / (...)`.
    QDiv,
    /// Summand `[3k+5] (q;q^2)_k (q^5;q^2)_k^2 q^{-(k^2+9k)/2} / (...)`.
    #[serde(rename = "thm_5_1")]
    Thm51,
    /// Summand `[3k-3] (q;q^2)_k (q^{-3};q^2)_k^2 q^{(7k-k^2)/2} / (...)`.
    #[serde(rename = "thm_5_2")]
    Thm52,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [TheoremId::Thm11, TheoremId::Thm12, TheoremId::QDiv, TheoremId::Thm51, TheoremId::Thm52];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Thm11 => "thm_1_1",
            TheoremId::Thm12 => "thm_1_2",
            TheoremId::QDiv => "qdiv",
            TheoremId::Thm51 => "thm_5_1",
            TheoremId::Thm52 => "thm_5_2",
        }
    }

    /// `n` must be odd and strictly above this bound.
    pub fn min_n_exclusive(&self) -> i64 {
        match self {
            TheoremId::Thm51 | TheoremId::Thm52 => 3,
            _ => 1,
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The `k`-th summand of the theorem's left side.
pub fn theorem_summand(id: TheoremId, k: u32) -> QProduct {
    let ki = k as i64;
    match id {
        TheoremId::Thm11 => {
            let num = QProduct::q_integer(3 * ki)
                * QProduct::q_integer(2 * ki)
                * QProduct::q_integer(ki).pow(2).expect("nonnegative power")
                * QProduct::q_binomial(2 * ki, ki).pow(3).expect("nonnegative power")
                * QProduct::q_power(-half_exact(ki * ki + 3 * ki));
            if num.is_zero() {
                return num;
            }
            let den = QProduct::q_integer(2 * ki - 1) * QProduct::pochhammer(true, 1, 1, k).pow(4).expect("nonnegative power");
            num.div(&den).expect("nonzero")
        }
        TheoremId::Thm12 => shifted_summand(k, 3 * ki - 1, -1, half_exact(3 * ki - ki * ki)),
        TheoremId::QDiv => shifted_summand(k, 3 * ki + 1, 1, -choose2(ki + 1)),
        TheoremId::Thm51 => shifted_summand(k, 3 * ki + 5, 5, -half_exact(ki * ki + 9 * ki)),
        TheoremId::Thm52 => shifted_summand(k, 3 * ki - 3, -3, half_exact(7 * ki - ki * ki)),
    }
}

/// `[a] (q;q^2)_k (q^b;q^2)_k^2 q^e / ((q;q)_k^2 (q^2;q^2)_k)`.
fn shifted_summand(k: u32, a: i64, b: i64, e: i64) -> QProduct {
    QProduct::q_integer(a) * common_ratio(k) * poch2(b, k).pow(2).expect("nonnegative power") * QProduct::q_power(e)
}

fn check_n(id: TheoremId, n: i64) -> Result<u32> {
    require_odd(n, id.min_n_exclusive())
}

/// Left-side summands for `k = 0..n-1`, unreduced.
pub fn theorem_lhs_terms(id: TheoremId, n: i64) -> Result<QSum> {
    let n = check_n(id, n)?;
    Ok((0..n).map(|k| theorem_summand(id, k)).collect())
}

/// Right side as a list of factored terms.
pub fn theorem_rhs_terms(id: TheoremId, n: i64) -> Result<QSum> {
    check_n(id, n)?;
    let qn = QProduct::q_integer(n);
    let qn3 = qn.pow(3).expect("nonnegative power");
    // (n^2 - 1)(1 - q)^2 / 24, with (1 - q)^2 = Φ_1^2
    let corr = QProduct::ratio(n * n - 1, 24) * QProduct::cyclotomic(1, 2) * qn3.clone();
    let phi3_sq = QProduct::cyclotomic(3, -2);
    let shift = |e: i64| QProduct::q_power(e);
    let one_plus_q = QProduct::one_plus_q_pow(1);
    let terms = match id {
        TheoremId::Thm11 | TheoremId::Thm12 => {
            let e = -half_exact(n + 1);
            let middle = one_plus_q * qn3.clone();
            let middle = if id == TheoremId::Thm11 { middle } else { -middle };
            vec![qn * shift(e), middle, corr * shift(e)]
        }
        TheoremId::QDiv => {
            let e = half_exact(1 - n);
            vec![qn * shift(e), corr * shift(e)]
        }
        TheoremId::Thm51 => {
            let e = half_exact(5 - n);
            vec![
                qn * shift(e),
                one_plus_q * shift(3) * qn3.clone(),
                QProduct::one_plus_q_pow(3) * shift(4) * phi3_sq * qn3.clone(),
                corr * shift(e),
            ]
        }
        TheoremId::Thm52 => {
            let e = -half_exact(n + 3);
            vec![
                qn * shift(e),
                -(one_plus_q * shift(-1) * qn3.clone()),
                -(QProduct::one_plus_q_pow(3) * phi3_sq * qn3.clone()),
                corr * shift(e),
            ]
        }
    };
    Ok(terms.into())
}

pub fn theorem_lhs(id: TheoremId, n: i64) -> Result<RatFunc> {
    Ok(theorem_lhs_terms(id, n)?.to_ratfunc())
}

pub fn theorem_rhs(id: TheoremId, n: i64) -> Result<RatFunc> {
    Ok(theorem_rhs_terms(id, n)?.to_ratfunc())
}

/// `lhs ≡ rhs (mod [n] Φ_n(q)^3)` with both sides given as term lists.
/// The difference is put over one denominator and reduced once.
pub fn verify_theorem_sums(lhs: &QSum, rhs: &QSum, n: u32) -> Result<CongruenceResult> {
    let mut diff = lhs.clone();
    diff.extend(rhs.negated());
    congruent_difference(&diff.to_ratfunc(), &modulus_build(&ModulusSpec::qint_phi(n, 1, 3)?))
}

pub fn verify_theorem(id: TheoremId, n: i64) -> Result<CongruenceResult> {
    let lhs = theorem_lhs_terms(id, n)?;
    let rhs = theorem_rhs_terms(id, n)?;
    verify_theorem_sums(&lhs, &rhs, n as u32)
}

/// The `k = m` summand of the first theorem is `≡ 0 (mod [m]^4)`.
pub fn verify_summand_vanishing(m: i64) -> Result<CongruenceResult> {
    let m = require_odd(m, 1)?;
    let term = theorem_summand(TheoremId::Thm11, m).to_ratfunc();
    congruent_difference(&term, &modulus_build(&ModulusSpec::qint_phi(m, 4, 0)?))
}

/// Reindexing identities linking `Σ_{n<m} F(n, ±1)` to the theorem sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReindexId {
    /// `Σ_{n<m} F(n,1) = q Σ_{k=1}^{m} T_k` with `T_k` the first theorem's summand.
    #[serde(rename = "sum_F_n1")]
    SumFN1,
    /// `Σ_{n<m} F(n,-1) = q Σ_{k<m} T'_k` with `T'_k` the second theorem's summand.
    #[serde(rename = "sum_F_nneg1")]
    SumFNNeg1,
}

impl ReindexId {
    pub const ALL: [ReindexId; 2] = [ReindexId::SumFN1, ReindexId::SumFNNeg1];

    pub fn as_str(&self) -> &'static str {
        match self {
            ReindexId::SumFN1 => "sum_F_n1",
            ReindexId::SumFNNeg1 => "sum_F_nneg1",
        }
    }
}

impl FromStr for ReindexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReindexId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown reindex id {s:?}")))
    }
}

impl fmt::Display for ReindexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `[3n] (q;q^2)_{n-1} (q^3;q^2)_{n-1}^2 q^{-C(n,2)-(2n-1)} / ((q;q)_{n-1}^2 (q^2;q^2)_{n-1})`,
/// the shifted-index form of `F(n-1, 1)`.
fn shifted_f1(n: u32) -> QProduct {
    let ni = n as i64;
    QProduct::q_integer(3 * ni)
        * common_ratio(n - 1)
        * poch2(3, n - 1).pow(2).expect("nonnegative power")
        * QProduct::q_power(-choose2(ni) - (2 * ni - 1))
}

/// Checks each displayed step of the reindexing exactly. For `sum_F_n1`
/// the shifted-index middle form is compared as well.
pub fn reindex_identity_check(id: ReindexId, m: i64) -> Result<bool> {
    let m = require_odd(m, 1)?;
    let q = QProduct::q_power(1);
    match id {
        ReindexId::SumFN1 => {
            let direct: QSum = (0..m).map(|n| wz_f_product(WZPoint::new(n, 1))).collect();
            let middle: QSum = (1..=m).map(shifted_f1).collect();
            let reindexed: QSum = (0..=m).map(|k| &q * &theorem_summand(TheoremId::Thm11, k)).collect();
            if !theorem_summand(TheoremId::Thm11, 0).is_zero() {
                return Ok(false);
            }
            let direct = direct.to_ratfunc();
            Ok(direct == middle.to_ratfunc() && direct == reindexed.to_ratfunc())
        }
        ReindexId::SumFNNeg1 => {
            let direct: QSum = (0..m).map(|n| wz_f_product(WZPoint::new(n, -1))).collect();
            let reindexed: QSum = (0..m).map(|k| &q * &theorem_summand(TheoremId::Thm12, k)).collect();
            Ok(direct.to_ratfunc() == reindexed.to_ratfunc())
        }
    }
}
