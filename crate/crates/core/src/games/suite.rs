//! Name-based registry of schemes and adversaries, and a runner for lists of
//! game instances.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::*;
use crate::classical::{
    BitString, CounterPrg, DhGroup, EcbCipher, EvenParityOtp, FeistelCipher, IdentityCipher,
    KeystreamReuseCipher, Otp, PolyUhf, Prg, ShannonCipher, StreamCipher, ZeroPaddingPrg,
};
use crate::error::{Error, Result};
use crate::seed::{derive_seed, rng_from_seed};

const SUITE_STREAM: u64 = 0x5u64 << 56;

/// One game instance: which game, against which scheme, by which adversary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteEntry {
    pub game: String,
    pub scheme: String,
    pub adversary: String,
    pub trials: u64,
}

impl SuiteEntry {
    pub fn new(game: &str, scheme: &str, adversary: &str, trials: u64) -> Self {
        Self {
            game: game.into(),
            scheme: scheme.into(),
            adversary: adversary.into(),
            trials,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub master_seed: u64,
    pub entries: Vec<SuiteEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteRow {
    pub scheme: String,
    pub adversary: String,
    pub estimate: AdvantageEstimate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub master_seed: u64,
    pub rows: Vec<SuiteRow>,
}

/// Every game with its characteristic adversaries.
pub fn default_suite(trials: u64) -> Vec<SuiteEntry> {
    [
        ("ss", "otp-8", "zeros-ones"),
        ("ss", "ecb-2", "ecb-equality"),
        ("bc", "feistel-1", "feistel-structure"),
        ("bc", "feistel-4", "feistel-structure"),
        ("prg", "zero-pad-16-32", "suffix-zero"),
        ("prg", "counter-64", "suffix-zero"),
        ("mr", "otp-3", "random-guess"),
        ("mr", "stream-reuse-8", "keystream-xor"),
        ("parity", "otp-8", "ciphertext-parity"),
        ("ss", "identity-3", "mr-reduction:read-off"),
        ("uhf", "poly-251-3", "root-pair"),
        ("rsa", "rsa-16-17", "factoring"),
        ("ddh", "dh-65537-3", "dlog"),
        ("ddh", "dh-65537-3", "legendre"),
    ]
    .into_iter()
    .map(|(g, s, a)| SuiteEntry::new(g, s, a, trials))
    .collect()
}

/// Built-in suites: `default`, `separations` (its first five rows) and
/// `empty`.
pub fn named_suite(name: &str, trials: u64) -> Result<Vec<SuiteEntry>> {
    match name {
        "default" => Ok(default_suite(trials)),
        "separations" => Ok(default_suite(trials).into_iter().take(5).collect()),
        "empty" => Ok(Vec::new()),
        other => Err(Error::UnknownName(alloc::format!("suite {other:?}"))),
    }
}

/// The seed of entry `index` in a suite run under `master_seed`.
pub fn entry_seed(master_seed: u64, index: usize) -> u64 {
    derive_seed(master_seed, SUITE_STREAM, index as u64)
}

/// Resolves every name first, then runs the entries in order.
pub fn run_game_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let prepared = config
        .entries
        .iter()
        .map(prepare)
        .collect::<Result<Vec<_>>>()?;
    let rows = prepared
        .into_iter()
        .zip(&config.entries)
        .enumerate()
        .map(|(i, (p, entry))| p.run(entry, entry_seed(config.master_seed, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        master_seed: config.master_seed,
        rows,
    })
}

/// Runs one entry with its own seed.
pub fn run_suite_entry(entry: &SuiteEntry, seed: u64) -> Result<SuiteRow> {
    prepare(entry)?.run(entry, seed)
}

/// Checks that every name in `entries` resolves.
pub fn validate_suite(entries: &[SuiteEntry]) -> Result<()> {
    entries.iter().try_for_each(|e| prepare(e).map(drop))
}

enum Prepared {
    Ss(Box<dyn ShannonCipher>, Box<dyn SsAdversary>),
    Mr(Box<dyn ShannonCipher>, Box<dyn MrAdversary>),
    Parity(Box<dyn ShannonCipher>, Box<dyn ParityAdversary>),
    Prg(Box<dyn Prg>, Box<dyn PrgAdversary>),
    Bc(FeistelCipher, Box<dyn BcAdversary>),
    Uhf(PolyUhf, Box<dyn UhfAdversary>),
    Rsa(RsaGameParams, Box<dyn RsaAdversary>),
    Ddh(DhGroup, Box<dyn DdhAdversary>),
}

impl Prepared {
    fn run(self, entry: &SuiteEntry, seed: u64) -> Result<SuiteRow> {
        let rng = &mut rng_from_seed(seed);
        let n = entry.trials;
        let estimate = match self {
            Self::Ss(c, a) => estimate_ss_advantage(c.as_ref(), a.as_ref(), n, rng),
            Self::Mr(c, a) => estimate_mr_advantage(c.as_ref(), a.as_ref(), n, rng),
            Self::Parity(c, a) => estimate_parity_advantage(c.as_ref(), a.as_ref(), n, rng),
            Self::Prg(g, a) => estimate_prg_advantage(g.as_ref(), a.as_ref(), n, rng),
            Self::Bc(c, a) => estimate_bc_advantage(&c, a.as_ref(), n, rng),
            Self::Uhf(h, a) => uhf_collision_game(&h, a.as_ref(), n, rng),
            Self::Rsa(p, a) => estimate_rsa_advantage(&p, a.as_ref(), n, rng),
            Self::Ddh(g, a) => estimate_ddh_advantage(&g, a.as_ref(), n, rng),
        }?;
        Ok(SuiteRow {
            scheme: entry.scheme.clone(),
            adversary: entry.adversary.clone(),
            estimate,
        })
    }
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::UnknownName(alloc::format!("{kind} {name:?}"))
}

/// Parses `prefix-a-b-…` into its numeric parameters.
fn numbers(name: &str, prefix: &str) -> Option<Vec<u64>> {
    let rest = name.strip_prefix(prefix)?.strip_prefix('-')?;
    rest.split('-').map(|s| s.parse().ok()).collect()
}

fn one(name: &str, prefix: &str) -> Option<usize> {
    match numbers(name, prefix)?.as_slice() {
        &[x] => usize::try_from(x).ok(),
        _ => None,
    }
}

fn two(name: &str, prefix: &str) -> Option<(u64, u64)> {
    match numbers(name, prefix)?.as_slice() {
        &[a, b] => Some((a, b)),
        _ => None,
    }
}

/// Public header of the keystream-reusing cipher with `len`-bit messages.
fn reuse_header(len: usize) -> BitString {
    BitString::new((0..len).map(|i| i % 3 != 1).collect())
}

fn cipher(name: &str) -> Result<Box<dyn ShannonCipher>> {
    let scheme: Box<dyn ShannonCipher> = if let Some(n) = one(name, "otp-even") {
        Box::new(EvenParityOtp::new(n)?)
    } else if let Some(n) = one(name, "otp") {
        Box::new(Otp::new(n)?)
    } else if let Some(n) = one(name, "identity") {
        Box::new(IdentityCipher::new(n)?)
    } else if let Some(n) = one(name, "ecb") {
        Box::new(EcbCipher::new(FeistelCipher::toy(), n)?)
    } else if let Some(n) = one(name, "stream-reuse") {
        Box::new(KeystreamReuseCipher::new(reuse_header(n))?)
    } else if let Some(n) = one(name, "stream") {
        Box::new(StreamCipher::new(n)?)
    } else {
        return Err(unknown("cipher", name));
    };
    Ok(scheme)
}

fn mr_adversary(name: &str, scheme: &dyn ShannonCipher) -> Result<Box<dyn MrAdversary>> {
    Ok(match name {
        "random-guess" => Box::new(RandomGuessMr),
        "read-off" => Box::new(ReadOffMr),
        "keystream-xor" => Box::new(KeystreamXorMr {
            header: reuse_header(scheme.message_at(0).len()),
        }),
        _ => return Err(unknown("message-recovery adversary", name)),
    })
}

fn parity_adversary(name: &str) -> Result<Box<dyn ParityAdversary>> {
    Ok(match name {
        "coin-flip" => Box::new(CoinFlipParity),
        "ciphertext-parity" => Box::new(CiphertextParity),
        _ => return Err(unknown("parity adversary", name)),
    })
}

fn constant(name: &str) -> Option<bool> {
    match name {
        "constant-0" => Some(false),
        "constant-1" => Some(true),
        _ => None,
    }
}

fn ss_adversary(name: &str, scheme: &dyn ShannonCipher) -> Result<Box<dyn SsAdversary>> {
    if let Some(output) = constant(name) {
        return Ok(Box::new(ConstantSs { output }));
    }
    if let Some(inner) = name.strip_prefix("mr-reduction:") {
        return Ok(Box::new(MrToSs {
            inner: mr_adversary(inner, scheme)?,
        }));
    }
    if let Some(inner) = name.strip_prefix("parity-reduction:") {
        return Ok(Box::new(ParityToSs {
            inner: parity_adversary(inner)?,
        }));
    }
    Ok(match name {
        "zeros-ones" => Box::new(ZerosOnesSs),
        "ecb-equality" => Box::new(EcbEqualitySs),
        _ => return Err(unknown("semantic-security adversary", name)),
    })
}

fn prg(name: &str) -> Result<Box<dyn Prg>> {
    if let Some(n) = one(name, "counter") {
        return Ok(Box::new(CounterPrg::new(n)?));
    }
    if let Some((l, n)) = two(name, "zero-pad") {
        return Ok(Box::new(ZeroPaddingPrg::new(l as usize, n as usize)?));
    }
    Err(unknown("PRG", name))
}

fn prepare(entry: &SuiteEntry) -> Result<Prepared> {
    let (scheme, adv) = (entry.scheme.as_str(), entry.adversary.as_str());
    Ok(match entry.game.as_str() {
        "ss" => {
            let c = cipher(scheme)?;
            let a = ss_adversary(adv, c.as_ref())?;
            Prepared::Ss(c, a)
        }
        "mr" => {
            let c = cipher(scheme)?;
            let a = mr_adversary(adv, c.as_ref())?;
            Prepared::Mr(c, a)
        }
        "parity" => Prepared::Parity(cipher(scheme)?, parity_adversary(adv)?),
        "prg" => {
            let a: Box<dyn PrgAdversary> = match (constant(adv), adv) {
                (Some(output), _) => Box::new(ConstantPrg { output }),
                (None, "suffix-zero") => Box::new(SuffixZeroPrg),
                _ => return Err(unknown("PRG adversary", adv)),
            };
            Prepared::Prg(prg(scheme)?, a)
        }
        "bc" => {
            let rounds = one(scheme, "feistel").ok_or_else(|| unknown("block cipher", scheme))?;
            let a: Box<dyn BcAdversary> = match adv {
                "repeat-query" => Box::new(RepeatQueryAdversary),
                "feistel-structure" => Box::new(FeistelStructureAdversary { queries: 2 }),
                _ => return Err(unknown("block-cipher adversary", adv)),
            };
            Prepared::Bc(FeistelCipher::new(rounds)?, a)
        }
        "uhf" => {
            let (p, l) = two(scheme, "poly").ok_or_else(|| unknown("hash", scheme))?;
            let a: Box<dyn UhfAdversary> = match adv {
                "random-pair" => Box::new(RandomPair),
                "one-block" => Box::new(OneBlockPair),
                "root-pair" => Box::new(RootPair),
                _ => return Err(unknown("collision adversary", adv)),
            };
            Prepared::Uhf(PolyUhf::new(p, l as usize)?, a)
        }
        "rsa" => {
            let (bits, e) =
                two(scheme, "rsa").ok_or_else(|| unknown("RSA parameter set", scheme))?;
            let a: Box<dyn RsaAdversary> = match adv {
                "random-guess" => Box::new(RandomGuessRsa),
                "factoring" => Box::new(FactoringRsa),
                "eth-root" => Box::new(EthRootRsa),
                _ => return Err(unknown("RSA adversary", adv)),
            };
            let bit_len = u32::try_from(bits).map_err(|_| unknown("RSA parameter set", scheme))?;
            Prepared::Rsa(RsaGameParams { bit_len, e }, a)
        }
        "ddh" => {
            let (p, g) = two(scheme, "dh").ok_or_else(|| unknown("group", scheme))?;
            let a: Box<dyn DdhAdversary> = match (constant(adv), adv) {
                (Some(output), _) => Box::new(ConstantDdh { output }),
                (None, "dlog") => Box::new(DlogDdh),
                (None, "legendre") => Box::new(LegendreDdh),
                _ => return Err(unknown("DDH adversary", adv)),
            };
            Prepared::Ddh(DhGroup::new(p, g)?, a)
        }
        other => return Err(unknown("game", other)),
    })
}

impl SuiteRow {
    pub fn game(&self) -> &str {
        &self.estimate.game
    }
}

impl core::fmt::Display for SuiteEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/{}/{}", self.game, self.scheme, self.adversary)
    }
}
