use super::half_exact;
use crate::error::{invalid, Result};
use crate::exactalg::RatFunc;
use crate::qobjects::{QProduct, QSum};

/// Terms of
/// `1/((1+q)^3 [2n+1] [2n,n]) Σ_{k=1}^{n} [3k][2k][k]^2 (-q;q)_n^4
///  / ([2k-1] (-q;q)_k^4) [2k,k]^3 q^{-(k^2+3k)/2}`.
pub fn conjecture61_terms(n: i64) -> Result<QSum> {
    if n < 1 {
        return Err(invalid(format!("conjecture expression needs n >= 1, got {n}")));
    }
    let nu = u32::try_from(n).map_err(|_| invalid("n too large"))?;
    let neg_n4 = QProduct::pochhammer(true, 1, 1, nu).pow(4)?;
    let pre_den = QProduct::one_plus_q_pow(1).pow(3)? * QProduct::q_integer(2 * n + 1) * QProduct::q_binomial(2 * n, n);
    let pre = neg_n4.div(&pre_den)?;
    let mut terms = QSum::new();
    for k in 1..=n {
        let ku = k as u32;
        let num = QProduct::q_integer(3 * k)
            * QProduct::q_integer(2 * k)
            * QProduct::q_integer(k).pow(2)?
            * QProduct::q_binomial(2 * k, k).pow(3)?
            * QProduct::q_power(-half_exact(k * k + 3 * k));
        let den = QProduct::q_integer(2 * k - 1) * QProduct::pochhammer(true, 1, 1, ku).pow(4)?;
        terms.push(&pre * &num.div(&den)?);
    }
    Ok(terms)
}

pub fn conjecture61_expression(n: i64) -> Result<RatFunc> {
    Ok(conjecture61_terms(n)?.to_ratfunc())
}

/// The reduced denominator is a power of `q` (a constant included).
pub fn is_laurent(r: &RatFunc) -> bool {
    r.is_laurent()
}
