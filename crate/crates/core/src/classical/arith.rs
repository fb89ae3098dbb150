//! Modular arithmetic on machine integers, shared by RSA and DH.

use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn mod_mul(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn mod_exp(base: u64, mut exp: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return Err(Error::Range(alloc::format!(
            "modulus {modulus} must be at least 2"
        )));
    }
    let mut result = 1;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mod_mul(result, b, modulus);
        }
        b = mod_mul(b, b, modulus);
        exp >>= 1;
    }
    Ok(result)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

/// Smallest prime factor of `n ≥ 2` by trial division.
pub fn smallest_factor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_factor(n) == n
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let f = smallest_factor(n);
        out.push(f);
        while n % f == 0 {
            n /= f;
        }
    }
    out
}

/// Primes in `[lo, hi)` by a segmented sieve with trial-division base primes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let mut composite = alloc::vec![false; (hi - lo) as usize];
    let mut d = 2;
    while d * d < hi {
        if is_prime(d) {
            let start = core::cmp::max(d * d, lo.div_ceil(d) * d);
            let mut x = start;
            while x < hi {
                composite[(x - lo) as usize] = true;
                x += d;
            }
        }
        d += 1;
    }
    (lo..hi)
        .filter(|&x| x >= 2 && !composite[(x - lo) as usize])
        .collect()
}
