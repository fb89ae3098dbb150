//! Challenger/adversary experiments with Monte-Carlo advantage estimates.
//!
//! Every trial draws from its own generator, derived from one base seed and
//! the trial index, so counts do not depend on execution order. Two-branch
//! games alternate `b = 0, 1` by trial index.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use rand::RngCore;

use crate::error::{Error, Result};
use crate::seed::{derived_rng, SimRng};

mod block;
mod ddh;
mod prg;
mod rsa;
mod semantic;
mod suite;
mod uhf;

pub use block::{
    estimate_bc_advantage, BcAdversary, BlockOracle, CipherOracle, FeistelStructureAdversary,
    RandomPermutationOracle, RepeatQueryAdversary, ORACLE_CALL_LIMIT,
};
pub use ddh::{
    discrete_log, estimate_ddh_advantage, ConstantDdh, DdhAdversary, DlogDdh, LegendreDdh,
};
pub use prg::{estimate_prg_advantage, ConstantPrg, PrgAdversary, SuffixZeroPrg};
pub use rsa::{
    estimate_rsa_advantage, EthRootRsa, FactoringRsa, RandomGuessRsa, RsaAdversary, RsaGameParams,
};
pub use semantic::{
    estimate_mr_advantage, estimate_parity_advantage, estimate_ss_advantage, CiphertextParity,
    CoinFlipParity, ConstantSs, EcbEqualitySs, KeystreamXorMr, MrAdversary, MrToSs,
    ParityAdversary, ParityToSs, RandomGuessMr, ReadOffMr, SsAdversary, ZerosOnesSs,
};
pub use suite::{
    default_suite, entry_seed, named_suite, run_game_suite, run_suite_entry, validate_suite,
    SuiteConfig, SuiteEntry, SuiteReport, SuiteRow,
};
pub use uhf::{uhf_collision_game, OneBlockPair, RandomPair, RootPair, UhfAdversary};

/// Smallest accepted trial count.
pub const MIN_TRIALS: u64 = 100;

const Z_95: f64 = 1.96;

#[derive(Debug, Clone, PartialEq)]
pub struct AdvantageEstimate {
    pub game: String,
    pub trials: u64,
    /// Per-branch counts: `n0, n1, w0, w1` (trials and 1-outputs per branch)
    /// for two-branch games, `wins` for single-experiment games.
    pub wins: BTreeMap<String, u64>,
    pub advantage: f64,
    /// Half-width of the 95% normal-approximation interval.
    pub ci_half_width: f64,
}

impl AdvantageEstimate {
    /// `|P(W₀) − P(W₁)|` from per-branch trial and 1-output counts.
    pub fn from_branches(game: &str, n: [u64; 2], ones: [u64; 2]) -> Self {
        let p0 = ones[0] as f64 / n[0] as f64;
        let p1 = ones[1] as f64 / n[1] as f64;
        let var = p0 * (1.0 - p0) / n[0] as f64 + p1 * (1.0 - p1) / n[1] as f64;
        let wins = [("n0", n[0]), ("n1", n[1]), ("w0", ones[0]), ("w1", ones[1])]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        Self {
            game: game.to_string(),
            trials: n[0] + n[1],
            wins,
            advantage: (p0 - p1).abs(),
            ci_half_width: Z_95 * libm::sqrt(var),
        }
    }

    /// `|P(W) − baseline|` from a single experiment.
    pub fn from_wins(game: &str, trials: u64, wins: u64, baseline: f64) -> Self {
        let p = wins as f64 / trials as f64;
        Self {
            game: game.to_string(),
            trials,
            wins: [("wins".to_string(), wins)].into_iter().collect(),
            advantage: (p - baseline).abs(),
            ci_half_width: Z_95 * libm::sqrt(p * (1.0 - p) / trials as f64),
        }
    }
}

fn check_trials(trials: u64) -> Result<()> {
    if trials < MIN_TRIALS {
        return Err(Error::Parameter(alloc::format!(
            "at least {MIN_TRIALS} trials are required, got {trials}"
        )));
    }
    Ok(())
}

/// Calls `f(t, rng_t)` for each trial with a generator derived from a base
/// seed drawn once from `rng`.
fn for_each_trial<R: RngCore + ?Sized>(
    trials: u64,
    rng: &mut R,
    mut f: impl FnMut(u64, &mut SimRng) -> Result<()>,
) -> Result<()> {
    check_trials(trials)?;
    let base = rng.next_u64();
    for t in 0..trials {
        f(t, &mut derived_rng(base, 0, t))?;
    }
    Ok(())
}

/// Runs a two-branch game; `trial(b, rng)` reports whether the adversary
/// output 1 in experiment `b`.
fn two_branch_game<R: RngCore + ?Sized>(
    game: &str,
    trials: u64,
    rng: &mut R,
    mut trial: impl FnMut(bool, &mut SimRng) -> Result<bool>,
) -> Result<AdvantageEstimate> {
    let mut n = [0u64; 2];
    let mut ones = [0u64; 2];
    for_each_trial(trials, rng, |t, r| {
        let b = (t % 2) as usize;
        n[b] += 1;
        ones[b] += trial(b == 1, r)? as u64;
        Ok(())
    })?;
    Ok(AdvantageEstimate::from_branches(game, n, ones))
}

fn single_game<R: RngCore + ?Sized>(
    game: &str,
    trials: u64,
    baseline: f64,
    rng: &mut R,
    mut trial: impl FnMut(&mut SimRng) -> Result<bool>,
) -> Result<AdvantageEstimate> {
    let mut wins = 0;
    for_each_trial(trials, rng, |_, r| {
        wins += trial(r)? as u64;
        Ok(())
    })?;
    Ok(AdvantageEstimate::from_wins(game, trials, wins, baseline))
}
