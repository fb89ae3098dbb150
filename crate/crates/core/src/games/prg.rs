use alloc::string::String;

use rand::RngCore;

use super::{two_branch_game, AdvantageEstimate};
use crate::classical::{BitString, Prg};
use crate::error::Result;

/// Sees `r`, either `G(s)` (b = 0) or uniform (b = 1), and outputs a bit.
pub trait PrgAdversary {
    fn name(&self) -> String;
    fn distinguish(&self, prg: &dyn Prg, r: &BitString, rng: &mut dyn RngCore) -> bool;
}

/// `PRGadv = |P(W₀) − P(W₁)|`.
pub fn estimate_prg_advantage<R: RngCore + ?Sized>(
    prg: &dyn Prg,
    adv: &dyn PrgAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    two_branch_game("prg", trials, rng, |b, r| {
        let sample = if b {
            BitString::random(prg.out_len(), r)
        } else {
            prg.expand(&BitString::random(prg.seed_len(), r))?
        };
        Ok(adv.distinguish(prg, &sample, r))
    })
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantPrg {
    pub output: bool,
}

impl PrgAdversary for ConstantPrg {
    fn name(&self) -> String {
        alloc::format!("constant-{}", self.output as u8)
    }

    fn distinguish(&self, _: &dyn Prg, _: &BitString, _: &mut dyn RngCore) -> bool {
        self.output
    }
}

/// Outputs 1 iff every bit after the first `ℓ` is zero.
#[derive(Debug, Clone, Copy)]
pub struct SuffixZeroPrg;

impl PrgAdversary for SuffixZeroPrg {
    fn name(&self) -> String {
        "suffix-zero".into()
    }

    fn distinguish(&self, prg: &dyn Prg, r: &BitString, _: &mut dyn RngCore) -> bool {
        r.bits()[prg.seed_len()..].iter().all(|&bit| !bit)
    }
}
