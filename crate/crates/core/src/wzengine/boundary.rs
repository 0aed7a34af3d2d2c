use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{wz_g, WZPoint};
use crate::congruence::{congruent, modulus_build, require_odd, CongruenceResult, ModulusSpec};
use crate::error::{Error, Result};
use crate::qobjects::QProduct;

/// Congruences for `G(m, k)` at the boundary values of `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryId {
    /// `G(m,1) ≡ -(1+q) q [m]^3 (mod [m]^3 Φ_m)`.
    #[serde(rename = "g_m_1")]
    GM1,
    /// `G(m,0) ≡ -(1+q^{-1}) q^2 [m]^3 (mod [m]^3 Φ_m)`.
    #[serde(rename = "g_m_0")]
    GM0,
    /// `G(m,2) ≡ -(1+q^3) q^2 / (1+q+q^2)^2 [m]^3 (mod [m] Φ_m^3)`.
    #[serde(rename = "g_m_2")]
    GM2,
    /// `G(m,-1)`, same right side and modulus as `g_m_2`.
    #[serde(rename = "g_m_neg1")]
    GMNeg1,
}

impl BoundaryId {
    pub const ALL: [BoundaryId; 4] = [BoundaryId::GM1, BoundaryId::GM0, BoundaryId::GM2, BoundaryId::GMNeg1];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryId::GM1 => "g_m_1",
            BoundaryId::GM0 => "g_m_0",
            BoundaryId::GM2 => "g_m_2",
            BoundaryId::GMNeg1 => "g_m_neg1",
        }
    }

    /// `m` must be odd and strictly above this bound.
    pub fn min_m_exclusive(&self) -> i64 {
        match self {
            BoundaryId::GM1 | BoundaryId::GM0 => 1,
            BoundaryId::GM2 | BoundaryId::GMNeg1 => 3,
        }
    }

    fn k(&self) -> i64 {
        match self {
            BoundaryId::GM1 => 1,
            BoundaryId::GM0 => 0,
            BoundaryId::GM2 => 2,
            BoundaryId::GMNeg1 => -1,
        }
    }
}

impl FromStr for BoundaryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundaryId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown boundary id {s:?}")))
    }
}

impl fmt::Display for BoundaryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn verify_boundary(id: BoundaryId, m: i64) -> Result<CongruenceResult> {
    let mu = require_odd(m, id.min_m_exclusive())?;
    let qm3 = QProduct::q_integer(m).pow(3)?;
    let (rhs, modulus) = match id {
        BoundaryId::GM1 => (-(QProduct::one_plus_q_pow(1) * QProduct::q_power(1) * qm3), ModulusSpec::qint_phi(mu, 3, 1)?),
        BoundaryId::GM0 => (-(QProduct::one_plus_q_pow(-1) * QProduct::q_power(2) * qm3), ModulusSpec::qint_phi(mu, 3, 1)?),
        BoundaryId::GM2 | BoundaryId::GMNeg1 => (
            -(QProduct::one_plus_q_pow(3) * QProduct::q_power(2) * QProduct::cyclotomic(3, -2) * qm3),
            ModulusSpec::qint_phi(mu, 1, 3)?,
        ),
    };
    congruent(&wz_g(WZPoint::new(mu, id.k())), &rhs.to_ratfunc(), &modulus_build(&modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(verify_boundary(BoundaryId::GM1, 5).unwrap().pass);
        assert!(verify_boundary(BoundaryId::GM0, 3).unwrap().pass);
        assert!(verify_boundary(BoundaryId::GM2, 5).unwrap().pass);
    }

    #[test]
    fn range_checks() {
        assert!(verify_boundary(BoundaryId::GM2, 3).is_err());
        assert!(verify_boundary(BoundaryId::GM1, 4).is_err());
        assert!(verify_boundary(BoundaryId::GM1, 3).is_ok());
    }

    #[test]
    fn ids_round_trip() {
        for id in BoundaryId::ALL {
            assert_eq!(id.as_str().parse::<BoundaryId>().unwrap(), id);
        }
    }
}
