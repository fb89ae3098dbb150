use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::classical::arith::{gcd, is_prime, mod_exp, mod_inverse, primes_in};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsaPublicKey {
    pub n: u64,
    pub e: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsaSecretKey {
    pub n: u64,
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsaKeyPair {
    pub pk: RsaPublicKey,
    pub sk: RsaSecretKey,
    pub p: u64,
    pub q: u64,
}

const SAMPLE_ATTEMPTS: usize = 10_000;

fn check_exponent(e: u64) -> Result<()> {
    if e <= 2 || e % 2 == 0 {
        return Err(Error::Parameter(alloc::format!(
            "public exponent must be odd and above 2, got {e}"
        )));
    }
    Ok(())
}

/// Builds a key pair from given primes.
pub fn rsa_from_primes(p: u64, q: u64, e: u64) -> Result<RsaKeyPair> {
    check_exponent(e)?;
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::Parameter(alloc::format!(
            "{p} and {q} must be distinct primes"
        )));
    }
    if p >= 1 << 32 || q >= 1 << 32 {
        return Err(Error::Parameter("primes must be below 2^32".into()));
    }
    let phi = (p - 1) * (q - 1);
    let d = mod_inverse(e, phi).ok_or_else(|| {
        Error::Parameter(alloc::format!("e = {e} is not invertible modulo {phi}"))
    })?;
    let n = p * q;
    Ok(RsaKeyPair {
        pk: RsaPublicKey { n, e },
        sk: RsaSecretKey { n, d },
        p,
        q,
    })
}

/// Generates a key pair whose modulus has exactly `bit_len` bits, from
/// primes of `⌈ℓ/2⌉` and `⌊ℓ/2⌋` bits.
pub fn rsa_gen<R: RngCore + ?Sized>(bit_len: u32, e: u64, rng: &mut R) -> Result<RsaKeyPair> {
    check_exponent(e)?;
    if !(8..=32).contains(&bit_len) {
        return Err(Error::Parameter(alloc::format!(
            "modulus bit length must be in 8..=32, got {bit_len}"
        )));
    }
    let span = |bits: u32| primes_in(1 << (bits - 1), 1 << bits);
    let ps = span(bit_len.div_ceil(2));
    let qs = span(bit_len / 2);
    let valid =
        |p: u64, q: u64| p != q && (p * q) >> (bit_len - 1) == 1 && gcd(e, (p - 1) * (q - 1)) == 1;
    for _ in 0..SAMPLE_ATTEMPTS {
        let p = ps[rng.gen_range(0..ps.len())];
        let q = qs[rng.gen_range(0..qs.len())];
        if valid(p, q) {
            return rsa_from_primes(p, q, e);
        }
    }
    let pairs: Vec<(u64, u64)> = ps
        .iter()
        .flat_map(|&p| qs.iter().map(move |&q| (p, q)))
        .filter(|&(p, q)| valid(p, q))
        .collect();
    if pairs.is_empty() {
        return Err(Error::Parameter(alloc::format!(
            "no {bit_len}-bit modulus admits exponent {e}"
        )));
    }
    let (p, q) = pairs[rng.gen_range(0..pairs.len())];
    rsa_from_primes(p, q, e)
}

fn check_operand(x: u64, n: u64) -> Result<()> {
    if x >= n {
        return Err(Error::Range(alloc::format!("{x} is outside Z_{n}")));
    }
    Ok(())
}

pub fn rsa_enc(pk: &RsaPublicKey, x: u64) -> Result<u64> {
    check_operand(x, pk.n)?;
    mod_exp(x, pk.e, pk.n)
}

pub fn rsa_dec(sk: &RsaSecretKey, c: u64) -> Result<u64> {
    check_operand(c, sk.n)?;
    mod_exp(c, sk.d, sk.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;

    #[test]
    fn textbook_key() {
        let kp = rsa_from_primes(61, 53, 17).unwrap();
        assert_eq!(kp.pk.n, 3233);
        assert_eq!(kp.sk.d, 2753);
        assert_eq!(rsa_enc(&kp.pk, 65).unwrap(), 2790);
        assert_eq!(rsa_dec(&kp.sk, 2790).unwrap(), 65);
        assert_eq!(rsa_enc(&kp.pk, 0).unwrap(), 0);
        assert_eq!(rsa_enc(&kp.pk, 1).unwrap(), 1);
        assert!(matches!(rsa_enc(&kp.pk, 3233), Err(Error::Range(_))));
    }

    #[test]
    fn generated_keys_are_consistent() {
        let mut rng = rng_from_seed(20);
        for i in 0..100 {
            let bits = 8 + (i % 25) as u32;
            let kp = rsa_gen(bits, 17, &mut rng).unwrap();
            let phi = (kp.p - 1) * (kp.q - 1);
            assert_eq!(kp.pk.n, kp.p * kp.q);
            assert_eq!(64 - kp.pk.n.leading_zeros(), bits);
            assert_eq!((kp.pk.e as u128 * kp.sk.d as u128) % phi as u128, 1);
            for x in [2, 3, kp.pk.n - 1, kp.pk.n / 2] {
                assert_eq!(rsa_dec(&kp.sk, rsa_enc(&kp.pk, x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn parameter_errors() {
        let mut rng = rng_from_seed(21);
        assert!(matches!(rsa_gen(16, 4, &mut rng), Err(Error::Parameter(_))));
        assert!(matches!(rsa_gen(16, 1, &mut rng), Err(Error::Parameter(_))));
        assert!(matches!(rsa_gen(7, 3, &mut rng), Err(Error::Parameter(_))));
        assert!(matches!(rsa_gen(33, 3, &mut rng), Err(Error::Parameter(_))));
        // Every 8-bit modulus from 4-bit primes is 11·13 = 143 with φ = 120.
        assert!(matches!(rsa_gen(8, 5, &mut rng), Err(Error::Parameter(_))));
        assert!(rsa_from_primes(61, 61, 17).is_err());
        assert!(rsa_from_primes(61, 51, 17).is_err());
        assert!(rsa_from_primes(61, 53, 7).is_ok());
        assert!(rsa_from_primes(61, 53, 3).is_err());
        assert!(rsa_from_primes(7, 11, 3).is_err());
    }
}
