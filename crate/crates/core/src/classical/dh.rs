use rand::{Rng, RngCore};

use crate::classical::arith::{is_prime, mod_exp, prime_factors};
use crate::error::{Error, Result};

/// The multiplicative group `Z_p^*` with a generator `g` of order `p−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DhGroup {
    p: u64,
    g: u64,
}

impl DhGroup {
    pub fn new(p: u64, g: u64) -> Result<Self> {
        if !(5..1 << 62).contains(&p) || !is_prime(p) {
            return Err(Error::Parameter(alloc::format!(
                "{p} is not a prime in 5..2^62"
            )));
        }
        if !(2..p).contains(&g) {
            return Err(Error::Parameter(alloc::format!(
                "generator {g} is outside 2..{p}"
            )));
        }
        for r in prime_factors(p - 1) {
            if mod_exp(g, (p - 1) / r, p)? == 1 {
                return Err(Error::Parameter(alloc::format!(
                    "{g} does not generate Z_{p}^*"
                )));
            }
        }
        Ok(Self { p, g })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    pub fn order(&self) -> u64 {
        self.p - 1
    }

    /// `g^x mod p` for any exponent.
    pub fn pow_g(&self, x: u64) -> u64 {
        self.pow(self.g, x)
    }

    pub fn pow(&self, base: u64, x: u64) -> u64 {
        mod_exp(base, x, self.p).expect("modulus is at least 5")
    }

    /// Uniform exponent in `[1, p−2]`.
    pub fn random_exponent<R: RngCore + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..=self.p - 2)
    }

    fn check_secret(&self, secret: u64) -> Result<()> {
        if !(1..=self.p - 2).contains(&secret) {
            return Err(Error::Range(alloc::format!(
                "secret {secret} is outside [1, {}]",
                self.p - 2
            )));
        }
        Ok(())
    }
}

pub fn dh_public(group: &DhGroup, secret: u64) -> Result<u64> {
    group.check_secret(secret)?;
    Ok(group.pow_g(secret))
}

/// Samples a secret exponent and its public value `g^α`.
pub fn dh_keygen<R: RngCore + ?Sized>(group: &DhGroup, rng: &mut R) -> (u64, u64) {
    let secret = group.random_exponent(rng);
    (secret, group.pow_g(secret))
}

pub fn dh_shared(group: &DhGroup, secret: u64, peer_public: u64) -> Result<u64> {
    group.check_secret(secret)?;
    if !(1..group.p).contains(&peer_public) {
        return Err(Error::Range(alloc::format!(
            "public value {peer_public} is outside Z_{}^*",
            group.p
        )));
    }
    Ok(group.pow(peer_public, secret))
}
