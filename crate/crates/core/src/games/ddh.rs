use alloc::collections::BTreeMap;
use alloc::string::String;

use rand::RngCore;

use super::{two_branch_game, AdvantageEstimate};
use crate::classical::{mod_mul, DhGroup};
use crate::error::Result;

/// Sees `(u, v, w)` and outputs 1 for "`w = g^{αβ}`".
pub trait DdhAdversary {
    fn name(&self) -> String;
    fn distinguish(&self, group: &DhGroup, u: u64, v: u64, w: u64, rng: &mut dyn RngCore) -> bool;
}

/// `DDHadv = |P(W₀) − P(W₁)|` where experiment 0 gives `w = g^{αβ}` and
/// experiment 1 gives `w = g^γ`, all exponents uniform in `[1, p−2]`.
pub fn estimate_ddh_advantage<R: RngCore + ?Sized>(
    group: &DhGroup,
    adv: &dyn DdhAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    let order = group.order();
    two_branch_game("ddh", trials, rng, |b, r| {
        let alpha = group.random_exponent(r);
        let beta = group.random_exponent(r);
        let w = if b {
            group.pow_g(group.random_exponent(r))
        } else {
            group.pow_g(mod_mul(alpha, beta, order))
        };
        Ok(adv.distinguish(group, group.pow_g(alpha), group.pow_g(beta), w, r))
    })
}

/// Baby-step giant-step: the `x ∈ [0, p−1)` with `g^x = h`.
pub fn discrete_log(group: &DhGroup, h: u64) -> Option<u64> {
    let order = group.order();
    let m = libm::ceil(libm::sqrt(order as f64)) as u64;
    let mut baby = BTreeMap::new();
    let mut x = 1;
    for j in 0..m {
        baby.entry(x).or_insert(j);
        x = mod_mul(x, group.generator(), group.modulus());
    }
    let giant = group.pow_g(order - m % order);
    let mut gamma = h % group.modulus();
    for i in 0..m {
        if let Some(&j) = baby.get(&gamma) {
            return Some((i * m + j) % order);
        }
        gamma = mod_mul(gamma, giant, group.modulus());
    }
    None
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantDdh {
    pub output: bool,
}

impl DdhAdversary for ConstantDdh {
    fn name(&self) -> String {
        alloc::format!("constant-{}", self.output as u8)
    }

    fn distinguish(&self, _: &DhGroup, _: u64, _: u64, _: u64, _: &mut dyn RngCore) -> bool {
        self.output
    }
}

/// Recovers `α` from `u` and checks `w = v^α`.
#[derive(Debug, Clone, Copy)]
pub struct DlogDdh;

impl DdhAdversary for DlogDdh {
    fn name(&self) -> String {
        "dlog".into()
    }

    fn distinguish(&self, group: &DhGroup, u: u64, v: u64, w: u64, _: &mut dyn RngCore) -> bool {
        discrete_log(group, u).is_some_and(|alpha| group.pow(v, alpha) == w)
    }
}

/// `g^{αβ}` is a square iff `α` or `β` is even, which the Legendre symbols
/// of `u` and `v` reveal.
#[derive(Debug, Clone, Copy)]
pub struct LegendreDdh;

fn is_square(group: &DhGroup, x: u64) -> bool {
    group.pow(x, group.order() / 2) == 1
}

impl DdhAdversary for LegendreDdh {
    fn name(&self) -> String {
        "legendre".into()
    }

    fn distinguish(&self, group: &DhGroup, u: u64, v: u64, w: u64, _: &mut dyn RngCore) -> bool {
        is_square(group, w) == (is_square(group, u) || is_square(group, v))
    }
}
