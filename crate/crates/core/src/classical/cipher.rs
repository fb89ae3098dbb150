use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, RngCore};

use crate::classical::bits::BitString;
use crate::classical::feistel::{ecb_dec, ecb_enc, FeistelCipher, BLOCK_BITS, KEY_BITS};
use crate::classical::prg::{stream_enc, CounterPrg, Prg};
use crate::error::{Error, Result};

/// Combined `|K|·|M|` limit for exhaustive secrecy checks.
pub const ENUMERATION_LIMIT: u64 = 1 << 12;

/// An encryption scheme `(Gen, Enc, Dec)` over enumerable key and message
/// spaces. `Gen` samples a key uniformly.
pub trait ShannonCipher {
    fn name(&self) -> String;
    fn key_space_size(&self) -> u64;
    /// The key with enumeration index `index < key_space_size()`.
    fn key_at(&self, index: u64) -> BitString;
    fn message_space_size(&self) -> u64;
    fn message_at(&self, index: u64) -> BitString;
    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString>;
    /// `None` is the reject symbol, returned for malformed inputs.
    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString>;

    fn gen(&self, rng: &mut dyn RngCore) -> BitString {
        self.key_at(rng.gen_range(0..self.key_space_size()))
    }

    fn random_message(&self, rng: &mut dyn RngCore) -> BitString {
        self.message_at(rng.gen_range(0..self.message_space_size()))
    }
}

fn check_len(bits: &BitString, expected: usize) -> Result<()> {
    if bits.len() != expected {
        return Err(Error::Length {
            expected,
            actual: bits.len(),
        });
    }
    Ok(())
}

pub fn otp_enc(key: &BitString, message: &BitString) -> Result<BitString> {
    key.xor(message)
}

pub fn otp_dec(key: &BitString, ciphertext: &BitString) -> Result<BitString> {
    key.xor(ciphertext)
}

/// One-time pad on `ℓ`-bit strings: `K = M = C = {0,1}^ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Otp {
    len: usize,
}

impl Otp {
    pub fn new(len: usize) -> Result<Self> {
        check_width(len)?;
        Ok(Self { len })
    }
}

fn check_width(len: usize) -> Result<()> {
    if !(1..=32).contains(&len) {
        return Err(Error::Parameter(alloc::format!(
            "bit length must be in 1..=32, got {len}"
        )));
    }
    Ok(())
}

impl ShannonCipher for Otp {
    fn name(&self) -> String {
        alloc::format!("otp-{}", self.len)
    }

    fn key_space_size(&self) -> u64 {
        1 << self.len
    }

    fn key_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.len)
    }

    fn message_space_size(&self) -> u64 {
        1 << self.len
    }

    fn message_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.len)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        check_len(key, self.len)?;
        otp_enc(key, message)
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        check_len(key, self.len).ok()?;
        otp_dec(key, ciphertext).ok()
    }
}

/// OTP restricted to keys of even parity, so `|K| = |M|/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenParityOtp {
    len: usize,
}

impl EvenParityOtp {
    pub fn new(len: usize) -> Result<Self> {
        check_width(len)?;
        Ok(Self { len })
    }
}

impl ShannonCipher for EvenParityOtp {
    fn name(&self) -> String {
        alloc::format!("otp-even-{}", self.len)
    }

    fn key_space_size(&self) -> u64 {
        1 << (self.len - 1)
    }

    fn key_at(&self, index: u64) -> BitString {
        let head = BitString::from_u64(index, self.len - 1);
        let parity = BitString::new(alloc::vec![head.parity()]);
        head.concat(&parity)
    }

    fn message_space_size(&self) -> u64 {
        1 << self.len
    }

    fn message_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.len)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        check_len(key, self.len)?;
        otp_enc(key, message)
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        check_len(key, self.len).ok()?;
        otp_dec(key, ciphertext).ok()
    }
}

/// `Enc(k, m) = m`: a correct scheme with no secrecy at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCipher {
    len: usize,
}

impl IdentityCipher {
    pub fn new(len: usize) -> Result<Self> {
        check_width(len)?;
        Ok(Self { len })
    }
}

impl ShannonCipher for IdentityCipher {
    fn name(&self) -> String {
        alloc::format!("identity-{}", self.len)
    }

    fn key_space_size(&self) -> u64 {
        1 << self.len
    }

    fn key_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.len)
    }

    fn message_space_size(&self) -> u64 {
        1 << self.len
    }

    fn message_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.len)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        check_len(key, self.len)?;
        check_len(message, self.len)?;
        Ok(message.clone())
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        check_len(key, self.len).ok()?;
        check_len(ciphertext, self.len).ok()?;
        Some(ciphertext.clone())
    }
}

/// ECB over a Feistel cipher for messages of exactly `blocks` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EcbCipher {
    cipher: FeistelCipher,
    blocks: usize,
}

impl EcbCipher {
    pub fn new(cipher: FeistelCipher, blocks: usize) -> Result<Self> {
        if !(1..=3).contains(&blocks) {
            return Err(Error::Parameter(alloc::format!(
                "an enumerable ECB message has 1..=3 blocks, got {blocks}"
            )));
        }
        Ok(Self { cipher, blocks })
    }

    fn words(&self, bits: &BitString) -> Result<Vec<u16>> {
        check_len(bits, self.blocks * BLOCK_BITS)?;
        Ok(bits
            .chunks(BLOCK_BITS)?
            .iter()
            .map(|c| c.to_u64().expect("16 bits") as u16)
            .collect())
    }

    fn key_word(key: &BitString) -> Result<u16> {
        check_len(key, KEY_BITS)?;
        Ok(key.to_u64().expect("16 bits") as u16)
    }
}

fn join(words: &[u16]) -> BitString {
    words.iter().fold(BitString::default(), |acc, &w| {
        acc.concat(&BitString::from_u64(w as u64, BLOCK_BITS))
    })
}

impl ShannonCipher for EcbCipher {
    fn name(&self) -> String {
        if self.cipher.rounds() == crate::classical::feistel::TOY_ROUNDS {
            alloc::format!("ecb-{}", self.blocks)
        } else {
            alloc::format!("ecb-{}-r{}", self.blocks, self.cipher.rounds())
        }
    }

    fn key_space_size(&self) -> u64 {
        1 << KEY_BITS
    }

    fn key_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, KEY_BITS)
    }

    fn message_space_size(&self) -> u64 {
        1 << (self.blocks * BLOCK_BITS)
    }

    fn message_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.blocks * BLOCK_BITS)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        let c = ecb_enc(&self.cipher, Self::key_word(key)?, &self.words(message)?)?;
        Ok(join(&c))
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        let m = ecb_dec(
            &self.cipher,
            Self::key_word(key).ok()?,
            &self.words(ciphertext).ok()?,
        )
        .ok()?;
        Some(join(&m))
    }
}

/// Stream cipher over the counter-mode PRG with `v`-bit messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamCipher {
    prg: CounterPrg,
    msg_len: usize,
}

impl StreamCipher {
    pub fn new(msg_len: usize) -> Result<Self> {
        check_width(msg_len)?;
        Ok(Self {
            prg: CounterPrg::new(core::cmp::max(msg_len, KEY_BITS + 1))?,
            msg_len,
        })
    }
}

impl ShannonCipher for StreamCipher {
    fn name(&self) -> String {
        alloc::format!("stream-{}", self.msg_len)
    }

    fn key_space_size(&self) -> u64 {
        1 << self.prg.seed_len()
    }

    fn key_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.prg.seed_len())
    }

    fn message_space_size(&self) -> u64 {
        1 << self.msg_len
    }

    fn message_at(&self, index: u64) -> BitString {
        BitString::from_u64(index, self.msg_len)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        check_len(message, self.msg_len)?;
        stream_enc(&self.prg, key, message)
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        check_len(ciphertext, self.msg_len).ok()?;
        stream_enc(&self.prg, key, ciphertext).ok()
    }
}

/// A stream cipher that reuses its keystream: each ciphertext carries
/// `G(s)⊕m` followed by `G(s)⊕h` for a fixed public header `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeystreamReuseCipher {
    inner: StreamCipher,
    header: BitString,
}

impl KeystreamReuseCipher {
    pub fn new(header: BitString) -> Result<Self> {
        Ok(Self {
            inner: StreamCipher::new(header.len())?,
            header,
        })
    }

    pub fn header(&self) -> &BitString {
        &self.header
    }
}

impl ShannonCipher for KeystreamReuseCipher {
    fn name(&self) -> String {
        alloc::format!("stream-reuse-{}", self.header.len())
    }

    fn key_space_size(&self) -> u64 {
        self.inner.key_space_size()
    }

    fn key_at(&self, index: u64) -> BitString {
        self.inner.key_at(index)
    }

    fn message_space_size(&self) -> u64 {
        self.inner.message_space_size()
    }

    fn message_at(&self, index: u64) -> BitString {
        self.inner.message_at(index)
    }

    fn enc(&self, key: &BitString, message: &BitString) -> Result<BitString> {
        Ok(self
            .inner
            .enc(key, message)?
            .concat(&self.inner.enc(key, &self.header)?))
    }

    fn dec(&self, key: &BitString, ciphertext: &BitString) -> Option<BitString> {
        let v = self.header.len();
        if ciphertext.len() != 2 * v {
            return None;
        }
        self.inner.dec(key, &ciphertext.slice(0..v))
    }
}

/// Outcome of exhaustively counting `#{k : Enc(k, m) = c}` over every
/// message and every observed ciphertext.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecrecyReport {
    /// `P(Enc(k,m₀)=c) = P(Enc(k,m₁)=c)` for all `m₀, m₁, c`.
    pub is_perfect: bool,
    /// `P(Enc(k,m)=c) = 1/|M|` for all `m` and every reachable `c`.
    pub uniform_prob: bool,
    /// Exactly one key maps each `m` to each reachable `c`.
    pub unique_key: bool,
    pub key_space_size: u64,
    pub message_space_size: u64,
    pub ciphertext_space_size: u64,
}

pub fn check_perfect_secrecy(cipher: &dyn ShannonCipher) -> Result<SecrecyReport> {
    let nk = cipher.key_space_size();
    let nm = cipher.message_space_size();
    let size = nk.saturating_mul(nm);
    if size > ENUMERATION_LIMIT {
        return Err(Error::SpaceTooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }
    let keys: Vec<BitString> = (0..nk).map(|i| cipher.key_at(i)).collect();
    let mut counts: BTreeMap<BitString, Vec<u64>> = BTreeMap::new();
    for mi in 0..nm {
        let m = cipher.message_at(mi);
        for k in &keys {
            let c = cipher.enc(k, &m)?;
            counts
                .entry(c)
                .or_insert_with(|| alloc::vec![0; nm as usize])[mi as usize] += 1;
        }
    }
    let rows = || counts.values();
    Ok(SecrecyReport {
        is_perfect: rows().all(|row| row.iter().all(|&n| n == row[0])),
        uniform_prob: rows().all(|row| row.iter().all(|&n| n * nm == nk)),
        unique_key: rows().all(|row| row.iter().all(|&n| n == 1)),
        key_space_size: nk,
        message_space_size: nm,
        ciphertext_space_size: counts.len() as u64,
    })
}
