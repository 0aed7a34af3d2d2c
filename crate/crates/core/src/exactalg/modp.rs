//! Word-size prime field helpers used by the modular gcd and by fast
//! divisibility pre-checks.

use std::sync::Mutex;

use num_bigint::{BigInt, Sign};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &sp in &SMALL {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

/// The `i`-th prime below 2^62, counting downwards.
pub(crate) fn large_prime(i: usize) -> u64 {
    let mut primes = PRIMES.lock().unwrap_or_else(|e| e.into_inner());
    while primes.len() <= i {
        let mut cand = primes.last().copied().unwrap_or(1u64 << 62) - 1;
        while !is_prime_u64(cand) {
            cand -= 1;
        }
        primes.push(cand);
    }
    primes[i]
}

/// Residue of an arbitrary-precision integer in `[0, p)`.
pub(crate) fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let digits: Vec<u64> = x.magnitude().iter_u64_digits().collect();
    let mut r: u128 = 0;
    for &d in digits.iter().rev() {
        r = ((r << 64) | d as u128) % p as u128;
    }
    let r = r as u64;
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` modulo `b` over F_p; `b` must be nonzero.
pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv_lead = inv_mod(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = mul_mod(r[top], inv_lead, p);
        if c != 0 {
            let shift = top - db;
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    r[shift + j] = sub_mod(r[shift + j], mul_mod(c, bj, p), p);
                }
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Exact quotient of `a` by monic `b` over F_p if the remainder vanishes.
pub(crate) fn div_if_divisible(a: &[u64], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= db {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for top in (db..a.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        let shift = top - db;
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                r[shift + j] = sub_mod(r[shift + j], mul_mod(c, bj, p), p);
            }
        }
    }
    if r[..db].iter().all(|&x| x == 0) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Monic gcd over F_p.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        for c in x.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}
