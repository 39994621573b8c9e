//! Integer helpers: factorization, gcd/lcm, prime powers, primitive roots.

use alloc::vec::Vec;

use crate::linalg::pow_mod;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// `Some((p, e))` when `q = p^e` with `e ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power(n).is_some()
}

/// Smallest generator of the multiplicative group of `F_ell`.
pub fn primitive_root(ell: u32) -> u32 {
    if ell == 2 {
        return 1;
    }
    let factors = prime_divisors(ell as u64 - 1);
    (2..ell)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (ell as u64 - 1) / q, ell) != 1))
        .expect("every prime field has a primitive root")
}

pub fn isqrt_ceil(n: u64) -> u64 {
    let mut r = 0u64;
    while r * r < n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_powers() {
        assert_eq!(factorize(360), alloc::vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(lcm(4, 6), 12);
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(61), 2);
        assert_eq!(isqrt_ceil(48), 7);
        assert_eq!(isqrt_ceil(49), 7);
    }
}
