//! Small integer helpers: primality by trial division, factoring, gcd.
//!
//! Everything here runs on numbers below 2^40 or so; no clever algorithms
//! are warranted.

/// Deterministic primality test by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n % 2 == 0 {
        out.push(2);
        while n % 2 == 0 {
            n /= 2;
        }
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Product of the distinct prime factors of `n` (the squarefree part used
/// when shifting binomial constants).
pub fn radical(n: u64) -> u64 {
    distinct_prime_factors(n).iter().product()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `base^exp mod m` without overflow for m < 2^32.
pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m < 1 << 32);
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `base^exp` checked against overflow; `None` when it does not fit u64.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// All prime powers q = p^e with lo <= q <= hi, ascending.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for q in lo.max(2)..=hi {
        let f = distinct_prime_factors(q);
        if f.len() == 1 {
            out.push(q);
        }
    }
    out
}

/// Splits a prime power into (p, e); `None` if `q` is not a prime power.
pub fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = distinct_prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut e = 0u32;
    let mut n = q;
    while n > 1 {
        if n % p != 0 {
            return None;
        }
        n /= p;
        e += 1;
    }
    Some((p, e))
}
