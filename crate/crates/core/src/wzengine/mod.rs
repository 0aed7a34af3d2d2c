//! The q-WZ pair `F(n, k)`, `G(n, k)` and everything verified through it.
//!
//! ```text
//! F(n,k) = [3n+2k+1] (q;q^2)_n (q^{2k+1};q^2)_n^2 q^{-C(n+1,2)-(2n+1)k}
//!          / ((q;q)_n^2 (q^2;q^2)_n)
//! G(n,k) = -(1+q^{n+2k-1}) (q;q^2)_n (q^{2k+1};q^2)_{n-1}^2 q^{-C(n,2)-(2n-1)k}
//!          / ((1-q) (q;q)_{n-1}^2 (q^2;q^2)_{n-1})
//! ```
//!
//! with `1/(q^2;q^2)_m = 0` for negative `m`, so `G(0, k) = 0`. They satisfy
//! `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)` identically.

mod boundary;
mod conjecture;
mod theorems;

pub use boundary::{verify_boundary, BoundaryId};
pub use conjecture::{conjecture61_expression, conjecture61_terms, is_laurent};
pub use theorems::{
    reindex_identity_check, theorem_lhs, theorem_lhs_terms, theorem_rhs, theorem_rhs_terms, theorem_summand,
    verify_summand_vanishing, verify_theorem, verify_theorem_sums, ReindexId, TheoremId,
};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactalg::RatFunc;
use crate::qobjects::QProduct;

/// Argument `(n, k)` of `F` and `G`; `k` may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WZPoint {
    pub n: u32,
    pub k: i64,
}

impl WZPoint {
    pub fn new(n: u32, k: i64) -> Self {
        WZPoint { n, k }
    }
}

/// `C(n, 2)` for any integer `n`.
pub(crate) fn choose2(n: i64) -> i64 {
    half_exact(n * (n - 1))
}

/// Exact halving of a q-exponent; an odd value means a transcription bug.
pub(crate) fn half_exact(x: i64) -> i64 {
    assert!(x % 2 == 0, "q-exponent {x}/2 is not an integer");
    x / 2
}

/// `(q^a; q^2)_len`.
pub(crate) fn poch2(a: i64, len: u32) -> QProduct {
    QProduct::pochhammer(false, a, 2, len)
}

/// `(q; q^2)_k / ((q;q)_k^2 (q^2;q^2)_k)`, shared by every summand.
pub(crate) fn common_ratio(k: u32) -> QProduct {
    let den = QProduct::q_factorial(k).pow(2).expect("nonzero") * QProduct::pochhammer(false, 2, 2, k);
    poch2(1, k).div(&den).expect("nonzero")
}

/// `1 / (q^a; q^d)_len`, zero for negative `len`.
fn guarded_recip(a: i64, d: u32, len: i64) -> QProduct {
    if len < 0 {
        return QProduct::zero();
    }
    QProduct::pochhammer(false, a, d, len as u32).recip().expect("nonzero q-Pochhammer")
}

/// `F(n, k)` in factored form.
pub fn wz_f_product(p: WZPoint) -> QProduct {
    let (n, k) = (p.n as i64, p.k);
    let qexp = -choose2(n + 1) - (2 * n + 1) * k;
    QProduct::q_integer(3 * n + 2 * k + 1)
        * common_ratio(p.n)
        * poch2(2 * k + 1, p.n).pow(2).expect("nonnegative power")
        * QProduct::q_power(qexp)
}

/// `G(n, k)` in factored form.
pub fn wz_g_product(p: WZPoint) -> QProduct {
    let (n, k) = (p.n as i64, p.k);
    let tail = guarded_recip(2, 2, n - 1);
    if tail.is_zero() {
        return QProduct::zero();
    }
    let m = p.n - 1;
    let qexp = -choose2(n) - (2 * n - 1) * k;
    let num = QProduct::one_plus_q_pow(n + 2 * k - 1)
        * poch2(1, p.n)
        * poch2(2 * k + 1, m).pow(2).expect("nonnegative power")
        * QProduct::q_power(qexp);
    let den = QProduct::one_minus_q_pow(1) * QProduct::q_factorial(m).pow(2).expect("nonnegative power");
    -(num.div(&den).expect("nonzero") * tail)
}

pub fn wz_f(p: WZPoint) -> RatFunc {
    wz_f_product(p).to_ratfunc()
}

pub fn wz_g(p: WZPoint) -> RatFunc {
    wz_g_product(p).to_ratfunc()
}

/// `F(n,k-1) - F(n,k) - G(n+1,k) + G(n,k)`, evaluated with general
/// rational-function arithmetic; zero exactly when the pair identity holds.
pub fn wz_pair_difference(p: WZPoint) -> RatFunc {
    let lhs = &wz_f(WZPoint::new(p.n, p.k - 1)) - &wz_f(p);
    let rhs = &wz_g(WZPoint::new(p.n + 1, p.k)) - &wz_g(p);
    &lhs - &rhs
}

/// `F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k)` as an exact identity.
pub fn wz_pair_check(p: WZPoint) -> bool {
    wz_pair_difference(p).is_zero()
}

/// `Σ_{n=0}^{m-1} [F(n,k-1) - F(n,k)] - G(m,k)`.
pub fn telescope_difference(m: i64, k: i64) -> Result<RatFunc> {
    if m < 1 {
        return Err(invalid(format!("telescoping needs m >= 1, got {m}")));
    }
    let m = u32::try_from(m).map_err(|_| invalid("m too large"))?;
    let mut acc = RatFunc::zero();
    for n in 0..m {
        acc = &acc + &(&wz_f(WZPoint::new(n, k - 1)) - &wz_f(WZPoint::new(n, k)));
    }
    Ok(&acc - &wz_g(WZPoint::new(m, k)))
}

/// `Σ_{n=0}^{m-1} [F(n,k-1) - F(n,k)] = G(m,k)` exactly.
pub fn telescope_check(m: i64, k: i64) -> Result<bool> {
    Ok(telescope_difference(m, k)?.is_zero())
}
