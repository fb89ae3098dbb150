use alloc::string::String;

use rand::{Rng, RngCore};

use super::{single_game, AdvantageEstimate};
use crate::classical::{mod_exp, mod_inverse, rsa_enc, rsa_gen, smallest_factor, RsaPublicKey};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RsaGameParams {
    pub bit_len: u32,
    pub e: u64,
}

/// Given `(n, e)` and `c = x^e mod n`, tries to output `x`.
pub trait RsaAdversary {
    fn name(&self) -> String;
    fn invert(&self, pk: &RsaPublicKey, c: u64, rng: &mut dyn RngCore) -> u64;
}

/// `RSAadv = P(x′ = x)` with a fresh key pair per trial.
pub fn estimate_rsa_advantage<R: RngCore + ?Sized>(
    params: &RsaGameParams,
    adv: &dyn RsaAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    single_game("rsa", trials, 0.0, rng, |r| {
        let kp = rsa_gen(params.bit_len, params.e, r)?;
        let x = r.gen_range(0..kp.pk.n);
        let c = rsa_enc(&kp.pk, x)?;
        Ok(adv.invert(&kp.pk, c, r) == x)
    })
}

#[derive(Debug, Clone, Copy)]
pub struct RandomGuessRsa;

impl RsaAdversary for RandomGuessRsa {
    fn name(&self) -> String {
        "random-guess".into()
    }

    fn invert(&self, pk: &RsaPublicKey, _: u64, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..pk.n)
    }
}

/// Factors `n` by trial division and decrypts with the recovered `d`.
#[derive(Debug, Clone, Copy)]
pub struct FactoringRsa;

impl RsaAdversary for FactoringRsa {
    fn name(&self) -> String {
        "factoring".into()
    }

    fn invert(&self, pk: &RsaPublicKey, c: u64, _: &mut dyn RngCore) -> u64 {
        let p = smallest_factor(pk.n);
        let q = pk.n / p;
        let Some(d) = mod_inverse(pk.e, (p - 1) * (q - 1)) else {
            return 0;
        };
        mod_exp(c, d, pk.n).unwrap_or(0)
    }
}

/// Searches `Z_n` for an `e`-th root of `c`.
#[derive(Debug, Clone, Copy)]
pub struct EthRootRsa;

impl RsaAdversary for EthRootRsa {
    fn name(&self) -> String {
        "eth-root".into()
    }

    fn invert(&self, pk: &RsaPublicKey, c: u64, _: &mut dyn RngCore) -> u64 {
        (0..pk.n)
            .find(|&y| mod_exp(y, pk.e, pk.n) == Ok(c))
            .unwrap_or(0)
    }
}
