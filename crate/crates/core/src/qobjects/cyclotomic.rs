use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::IntPoly;

type Cache = RwLock<HashMap<u32, Arc<IntPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Möbius function.
pub fn mobius(mut n: u32) -> i64 {
    let mut result = 1;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= n as u64 {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `Φ_n(q)` with integer coefficients, `n >= 1`, memoized.
///
/// Computed as `(q^n - 1) / ∏_{d | n, d < n} Φ_d(q)` by exact division.
pub fn cyclotomic_int(n: u32) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(hit) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return Arc::clone(hit);
    }
    let mut acc = IntPoly::monomial(BigInt::one(), n as usize).sub(&IntPoly::one());
    for d in divisors(n) {
        if d == n {
            break;
        }
        let phi = cyclotomic_int(d);
        let (q, r) = acc.divrem_monic(&phi);
        assert!(r.is_zero(), "Φ_{d} must divide q^{n} - 1");
        acc = q;
    }
    let value = Arc::new(acc);
    // write-once: a concurrent writer computed the same polynomial
    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    Arc::clone(guard.entry(n).or_insert(value))
}
