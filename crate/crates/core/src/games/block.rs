use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;

use rand::{Rng, RngCore};

use super::{two_branch_game, AdvantageEstimate};
use crate::classical::FeistelCipher;
use crate::error::{Error, Result};
use crate::seed::{rng_from_seed, SimRng};

/// Bound on `q · trials` for one estimate.
pub const ORACLE_CALL_LIMIT: u64 = 1_000_000;

/// A function on 16-bit blocks that answers at most a fixed number of
/// queries.
pub trait BlockOracle {
    fn query(&mut self, x: u16) -> Result<u16>;
}

fn spend(remaining: &mut usize) -> Result<()> {
    if *remaining == 0 {
        return Err(Error::QueryBudget("oracle query budget exhausted".into()));
    }
    *remaining -= 1;
    Ok(())
}

/// `f(s) = Enc(k, s)` under a hidden key.
#[derive(Debug, Clone)]
pub struct CipherOracle {
    cipher: FeistelCipher,
    key: u16,
    remaining: usize,
}

impl CipherOracle {
    pub fn new(cipher: FeistelCipher, key: u16, budget: usize) -> Self {
        Self {
            cipher,
            key,
            remaining: budget,
        }
    }
}

impl BlockOracle for CipherOracle {
    fn query(&mut self, x: u16) -> Result<u16> {
        spend(&mut self.remaining)?;
        Ok(self.cipher.encrypt(self.key, x))
    }
}

/// A uniformly random permutation of the block space, sampled lazily:
/// each new input gets an output drawn from the values not yet used.
#[derive(Debug, Clone)]
pub struct RandomPermutationOracle {
    table: BTreeMap<u16, u16>,
    used: BTreeSet<u16>,
    rng: SimRng,
    remaining: usize,
}

impl RandomPermutationOracle {
    pub fn new(seed: u64, budget: usize) -> Self {
        Self {
            table: BTreeMap::new(),
            used: BTreeSet::new(),
            rng: rng_from_seed(seed),
            remaining: budget,
        }
    }
}

impl BlockOracle for RandomPermutationOracle {
    fn query(&mut self, x: u16) -> Result<u16> {
        spend(&mut self.remaining)?;
        if let Some(&y) = self.table.get(&x) {
            return Ok(y);
        }
        let y = loop {
            let y: u16 = self.rng.gen();
            if self.used.insert(y) {
                break y;
            }
        };
        self.table.insert(x, y);
        Ok(y)
    }
}

/// A `q`-query adversary against a block cipher.
pub trait BcAdversary {
    fn name(&self) -> String;
    fn queries(&self) -> usize;
    fn distinguish(&self, oracle: &mut dyn BlockOracle, rng: &mut dyn RngCore) -> Result<bool>;
}

/// `BCadv = |P(W₀) − P(W₁)|`: experiment 0 queries the cipher under a
/// random key, experiment 1 a random permutation.
pub fn estimate_bc_advantage<R: RngCore + ?Sized>(
    cipher: &FeistelCipher,
    adv: &dyn BcAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    let q = adv.queries();
    let calls = (q as u64).saturating_mul(trials);
    if calls > ORACLE_CALL_LIMIT {
        return Err(Error::QueryBudget(alloc::format!(
            "{q} queries × {trials} trials exceeds {ORACLE_CALL_LIMIT} oracle calls"
        )));
    }
    two_branch_game("bc", trials, rng, |b, r| {
        if b {
            let mut oracle = RandomPermutationOracle::new(r.next_u64(), q);
            adv.distinguish(&mut oracle, r)
        } else {
            let mut oracle = CipherOracle::new(*cipher, r.gen(), q);
            adv.distinguish(&mut oracle, r)
        }
    })
}

/// Queries one input twice and outputs 1 iff the answers agree.
#[derive(Debug, Clone, Copy)]
pub struct RepeatQueryAdversary;

impl BcAdversary for RepeatQueryAdversary {
    fn name(&self) -> String {
        "repeat-query".into()
    }

    fn queries(&self) -> usize {
        2
    }

    fn distinguish(&self, oracle: &mut dyn BlockOracle, rng: &mut dyn RngCore) -> Result<bool> {
        let x: u16 = rng.gen();
        Ok(oracle.query(x)? == oracle.query(x)?)
    }
}

/// Outputs 1 iff, for every query, the left output half equals the right
/// input half, as a single Feistel round guarantees.
#[derive(Debug, Clone, Copy)]
pub struct FeistelStructureAdversary {
    pub queries: usize,
}

impl BcAdversary for FeistelStructureAdversary {
    fn name(&self) -> String {
        "feistel-structure".into()
    }

    fn queries(&self) -> usize {
        self.queries
    }

    fn distinguish(&self, oracle: &mut dyn BlockOracle, rng: &mut dyn RngCore) -> Result<bool> {
        let mut all = true;
        for _ in 0..self.queries {
            let x: u16 = rng.gen();
            all &= oracle.query(x)? >> 8 == x & 0xFF;
        }
        Ok(all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;

    #[test]
    fn random_permutation_is_injective_and_consistent() {
        let mut oracle = RandomPermutationOracle::new(9, 1 << 16);
        let mut seen = BTreeSet::new();
        for x in 0..=u16::MAX {
            assert!(seen.insert(oracle.query(x).unwrap()));
        }
        assert_eq!(seen.len(), 1 << 16);
        assert!(matches!(oracle.query(0), Err(Error::QueryBudget(_))));
        let mut again = RandomPermutationOracle::new(9, 4);
        let y = again.query(77).unwrap();
        assert_eq!(again.query(77).unwrap(), y);
    }

    #[test]
    fn budget_enforced() {
        let mut oracle = CipherOracle::new(FeistelCipher::toy(), 1, 1);
        oracle.query(5).unwrap();
        assert!(oracle.query(5).is_err());
        let greedy = FeistelStructureAdversary { queries: 200 };
        let err = estimate_bc_advantage(
            &FeistelCipher::toy(),
            &greedy,
            10_000,
            &mut rng_from_seed(0),
        );
        assert!(matches!(err, Err(Error::QueryBudget(_))));
    }

    #[test]
    fn one_round_is_distinguishable() {
        let cipher = FeistelCipher::new(1).unwrap();
        let adv = FeistelStructureAdversary { queries: 2 };
        let e = estimate_bc_advantage(&cipher, &adv, 10_000, &mut rng_from_seed(1)).unwrap();
        assert!(e.advantage >= 0.99);
    }

    #[test]
    fn four_rounds_hide_the_structure() {
        let adv = FeistelStructureAdversary { queries: 2 };
        let e = estimate_bc_advantage(&FeistelCipher::toy(), &adv, 10_000, &mut rng_from_seed(2))
            .unwrap();
        assert!(e.advantage <= 0.03);
    }

    #[test]
    fn consistency_check_learns_nothing() {
        let e = estimate_bc_advantage(
            &FeistelCipher::toy(),
            &RepeatQueryAdversary,
            1000,
            &mut rng_from_seed(3),
        )
        .unwrap();
        assert_eq!(e.advantage, 0.0);
        assert!(e.advantage <= e.ci_half_width);
    }
}
