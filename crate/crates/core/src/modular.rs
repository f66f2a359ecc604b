//! Scalar arithmetic mod a prime, primality and factorization helpers.
//!
//! Everything here is exact u64 arithmetic; products widen through u128.

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime p, via Fermat. Panics on 0.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of 0 mod {p}");
    pow_mod(a % p, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % n == 0 {
            continue;
        }
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

/// Prime factorization by trial division, as (prime, exponent) pairs in ascending order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
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

/// Least primitive root mod a prime p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_divisors(p - 1);
    'candidate: for g in 2..p {
        for &q in &factors {
            if pow_mod(g, (p - 1) / q, p) == 1 {
                continue 'candidate;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod {p}")
}

/// Smallest prime p with p ≡ 1 (mod e) and p > bound, plus a primitive e-th root of unity in GF(p).
///
/// The root is the (p-1)/e power of the least primitive root, so it is deterministic.
pub fn dixon_prime(order: u64, exponent: u64) -> (u64, u64) {
    assert!(order >= 1 && exponent >= 1);
    // p > 2*sqrt(order): compare p^2 > 4*order exactly.
    let exceeds = |p: u64| (p as u128) * (p as u128) > 4 * order as u128;
    let mut p = exponent + 1;
    loop {
        if exceeds(p) && is_prime(p) {
            let z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
            return (p, z);
        }
        p += exponent;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_examples() {
        assert_eq!(dixon_prime(24, 12).0, 13);
        assert_eq!(dixon_prime(2, 2).0, 3);
        assert_eq!(dixon_prime(21, 21).0, 43);
        assert_eq!(dixon_prime(6, 6).0, 7);
    }

    #[test]
    fn dixon_root_has_exact_order() {
        for (order, e) in [(24u64, 12u64), (21, 21), (60, 30), (201810, 6510)] {
            let (p, z) = dixon_prime(order, e);
            assert_eq!(p % e, 1);
            assert_eq!(pow_mod(z, e, p), 1);
            for q in prime_divisors(e) {
                assert_ne!(pow_mod(z, e / q, p), 1, "z order too small for e={e}");
            }
        }
    }

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(19531));
        assert!(!is_prime(6511)); // 17 * 383
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..500u64 {
            let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn inverse_law() {
        for p in [3u64, 7, 31, 19531] {
            for a in 1..p.min(50) {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }
}
