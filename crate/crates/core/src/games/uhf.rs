use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use super::{single_game, AdvantageEstimate};
use crate::classical::PolyUhf;
use crate::error::Result;

/// Chooses a message pair without seeing the key.
pub trait UhfAdversary {
    fn name(&self) -> String;
    fn pair(&self, uhf: &PolyUhf, rng: &mut dyn RngCore) -> (Vec<u64>, Vec<u64>);
}

/// `UHFadv = P[H(k, m₁) = H(k, m₂)]` over a uniform nonzero key.
pub fn uhf_collision_game<R: RngCore + ?Sized>(
    uhf: &PolyUhf,
    adv: &dyn UhfAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    single_game("uhf", trials, 0.0, rng, |r| {
        let key = r.gen_range(1..uhf.modulus());
        let (m1, m2) = adv.pair(uhf, r);
        uhf.check_pair(&m1, &m2)?;
        Ok(uhf.eval(key, &m1)? == uhf.eval(key, &m2)?)
    })
}

fn random_message(uhf: &PolyUhf, rng: &mut dyn RngCore) -> Vec<u64> {
    (0..uhf.max_blocks())
        .map(|_| rng.gen_range(0..uhf.modulus()))
        .collect()
}

/// Two independent uniform messages, redrawn until distinct.
#[derive(Debug, Clone, Copy)]
pub struct RandomPair;

impl UhfAdversary for RandomPair {
    fn name(&self) -> String {
        "random-pair".into()
    }

    fn pair(&self, uhf: &PolyUhf, rng: &mut dyn RngCore) -> (Vec<u64>, Vec<u64>) {
        let m1 = random_message(uhf, rng);
        loop {
            let m2 = random_message(uhf, rng);
            if m2 != m1 {
                return (m1, m2);
            }
        }
    }
}

/// A uniform message and a copy differing in its first symbol.
#[derive(Debug, Clone, Copy)]
pub struct OneBlockPair;

impl UhfAdversary for OneBlockPair {
    fn name(&self) -> String {
        "one-block".into()
    }

    fn pair(&self, uhf: &PolyUhf, rng: &mut dyn RngCore) -> (Vec<u64>, Vec<u64>) {
        let p = uhf.modulus();
        let m1 = random_message(uhf, rng);
        let mut m2 = m1.clone();
        m2[0] = (m2[0] + rng.gen_range(1..p)) % p;
        (m1, m2)
    }
}

/// Plants `L−1` random nonzero roots in the difference polynomial, so the
/// pair collides with probability exactly `ε`.
#[derive(Debug, Clone, Copy)]
pub struct RootPair;

impl UhfAdversary for RootPair {
    fn name(&self) -> String {
        "root-pair".into()
    }

    fn pair(&self, uhf: &PolyUhf, rng: &mut dyn RngCore) -> (Vec<u64>, Vec<u64>) {
        let p = uhf.modulus();
        let n = uhf.max_blocks();
        let degree = core::cmp::min(n - 1, p as usize - 1);
        let mut roots: Vec<u64> = Vec::new();
        while roots.len() < degree {
            let r = rng.gen_range(1..p);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        // Coefficients of Π(k − r), lowest degree first.
        let mut coeffs = alloc::vec![0u64; n];
        coeffs[0] = 1;
        for (done, &r) in roots.iter().enumerate() {
            for i in (0..=done + 1).rev() {
                let shifted = if i > 0 { coeffs[i - 1] } else { 0 };
                let scaled = coeffs[i] * (p - r) % p;
                coeffs[i] = (shifted + scaled) % p;
            }
        }
        (coeffs, alloc::vec![0; n])
    }
}
