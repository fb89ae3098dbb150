//! Semantic security, message recovery and parity games against a
//! [`ShannonCipher`], with reductions from the latter two to the first.

use alloc::boxed::Box;
use alloc::string::String;

use rand::{Rng, RngCore};

use super::{single_game, two_branch_game, AdvantageEstimate};
use crate::classical::{BitString, ShannonCipher, BLOCK_BITS};
use crate::error::Result;

/// Adversary in the semantic security game: picks `m₀, m₁`, sees
/// `Enc(k, m_b)` and outputs a bit.
pub trait SsAdversary {
    fn name(&self) -> String;
    fn choose(&self, cipher: &dyn ShannonCipher, rng: &mut dyn RngCore) -> (BitString, BitString);
    fn guess(
        &self,
        cipher: &dyn ShannonCipher,
        messages: &(BitString, BitString),
        ciphertext: &BitString,
        rng: &mut dyn RngCore,
    ) -> bool;
}

/// Adversary in the message recovery game.
pub trait MrAdversary {
    fn name(&self) -> String;
    fn recover(
        &self,
        cipher: &dyn ShannonCipher,
        ciphertext: &BitString,
        rng: &mut dyn RngCore,
    ) -> BitString;
}

/// Adversary in the parity game: guesses whether `m` has odd parity.
pub trait ParityAdversary {
    fn name(&self) -> String;
    fn guess_parity(
        &self,
        cipher: &dyn ShannonCipher,
        ciphertext: &BitString,
        rng: &mut dyn RngCore,
    ) -> bool;
}

/// `SSadv = |P(W₀) − P(W₁)|` where `W_b` is "output 1 in experiment b".
pub fn estimate_ss_advantage<R: RngCore + ?Sized>(
    cipher: &dyn ShannonCipher,
    adv: &dyn SsAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    two_branch_game("ss", trials, rng, |b, r| {
        let key = cipher.gen(r);
        let messages = adv.choose(cipher, r);
        let c = cipher.enc(&key, if b { &messages.1 } else { &messages.0 })?;
        Ok(adv.guess(cipher, &messages, &c, r))
    })
}

/// `MRadv = |P(m′ = m) − 1/|M||`.
pub fn estimate_mr_advantage<R: RngCore + ?Sized>(
    cipher: &dyn ShannonCipher,
    adv: &dyn MrAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    let baseline = 1.0 / cipher.message_space_size() as f64;
    single_game("mr", trials, baseline, rng, |r| {
        let key = cipher.gen(r);
        let m = cipher.random_message(r);
        let c = cipher.enc(&key, &m)?;
        Ok(adv.recover(cipher, &c, r) == m)
    })
}

/// `Parityadv = |P(b′ = parity(m)) − 1/2|`.
pub fn estimate_parity_advantage<R: RngCore + ?Sized>(
    cipher: &dyn ShannonCipher,
    adv: &dyn ParityAdversary,
    trials: u64,
    rng: &mut R,
) -> Result<AdvantageEstimate> {
    single_game("parity", trials, 0.5, rng, |r| {
        let key = cipher.gen(r);
        let m = cipher.random_message(r);
        let c = cipher.enc(&key, &m)?;
        Ok(adv.guess_parity(cipher, &c, r) == m.parity())
    })
}

fn message_len(cipher: &dyn ShannonCipher) -> usize {
    cipher.message_at(0).len()
}

/// Submits two random messages and always outputs `output`.
#[derive(Debug, Clone, Copy)]
pub struct ConstantSs {
    pub output: bool,
}

impl SsAdversary for ConstantSs {
    fn name(&self) -> String {
        alloc::format!("constant-{}", self.output as u8)
    }

    fn choose(&self, cipher: &dyn ShannonCipher, rng: &mut dyn RngCore) -> (BitString, BitString) {
        (cipher.random_message(rng), cipher.random_message(rng))
    }

    fn guess(
        &self,
        _: &dyn ShannonCipher,
        _: &(BitString, BitString),
        _: &BitString,
        _: &mut dyn RngCore,
    ) -> bool {
        self.output
    }
}

/// Submits `0…0` and `1…1` and outputs the first ciphertext bit.
#[derive(Debug, Clone, Copy)]
pub struct ZerosOnesSs;

impl SsAdversary for ZerosOnesSs {
    fn name(&self) -> String {
        "zeros-ones".into()
    }

    fn choose(&self, cipher: &dyn ShannonCipher, _: &mut dyn RngCore) -> (BitString, BitString) {
        let n = message_len(cipher);
        (BitString::zeros(n), BitString::new(alloc::vec![true; n]))
    }

    fn guess(
        &self,
        _: &dyn ShannonCipher,
        _: &(BitString, BitString),
        c: &BitString,
        _: &mut dyn RngCore,
    ) -> bool {
        c.bits().first().copied().unwrap_or(false)
    }
}

/// Against ECB: submits `(a, a, …)` and `(b, a, …)` with `a ≠ b` and outputs
/// 1 iff the first two ciphertext blocks differ.
#[derive(Debug, Clone, Copy)]
pub struct EcbEqualitySs;

impl SsAdversary for EcbEqualitySs {
    fn name(&self) -> String {
        "ecb-equality".into()
    }

    fn choose(&self, cipher: &dyn ShannonCipher, rng: &mut dyn RngCore) -> (BitString, BitString) {
        let blocks = message_len(cipher) / BLOCK_BITS;
        let a: u16 = rng.gen();
        let b = a ^ rng.gen_range(1..=u16::MAX);
        let block = |x: u16| BitString::from_u64(x as u64, BLOCK_BITS);
        let repeated = (0..blocks).fold(BitString::default(), |acc, _| acc.concat(&block(a)));
        let mut varied = block(b);
        for _ in 1..blocks {
            varied = varied.concat(&block(a));
        }
        (repeated, varied)
    }

    fn guess(
        &self,
        _: &dyn ShannonCipher,
        _: &(BitString, BitString),
        c: &BitString,
        _: &mut dyn RngCore,
    ) -> bool {
        match c.chunks(BLOCK_BITS) {
            Ok(blocks) if blocks.len() >= 2 => blocks[0] != blocks[1],
            _ => false,
        }
    }
}

/// Outputs a uniformly random message.
#[derive(Debug, Clone, Copy)]
pub struct RandomGuessMr;

impl MrAdversary for RandomGuessMr {
    fn name(&self) -> String {
        "random-guess".into()
    }

    fn recover(
        &self,
        cipher: &dyn ShannonCipher,
        _: &BitString,
        rng: &mut dyn RngCore,
    ) -> BitString {
        cipher.random_message(rng)
    }
}

/// Reads the message straight off the ciphertext prefix.
#[derive(Debug, Clone, Copy)]
pub struct ReadOffMr;

impl MrAdversary for ReadOffMr {
    fn name(&self) -> String {
        "read-off".into()
    }

    fn recover(&self, cipher: &dyn ShannonCipher, c: &BitString, _: &mut dyn RngCore) -> BitString {
        c.slice(0..message_len(cipher).min(c.len()))
    }
}

/// Against a keystream-reusing cipher `(G(s)⊕m) ‖ (G(s)⊕h)` with known `h`:
/// XORing the halves cancels the keystream.
#[derive(Debug, Clone)]
pub struct KeystreamXorMr {
    pub header: BitString,
}

impl MrAdversary for KeystreamXorMr {
    fn name(&self) -> String {
        "keystream-xor".into()
    }

    fn recover(
        &self,
        cipher: &dyn ShannonCipher,
        c: &BitString,
        rng: &mut dyn RngCore,
    ) -> BitString {
        let v = self.header.len();
        if c.len() != 2 * v {
            return cipher.random_message(rng);
        }
        let diff = c.slice(0..v).xor(&c.slice(v..2 * v)).expect("equal halves");
        diff.xor(&self.header).expect("header length")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CoinFlipParity;

impl ParityAdversary for CoinFlipParity {
    fn name(&self) -> String {
        "coin-flip".into()
    }

    fn guess_parity(&self, _: &dyn ShannonCipher, _: &BitString, rng: &mut dyn RngCore) -> bool {
        rng.gen()
    }
}

/// Guesses the parity of the ciphertext.
#[derive(Debug, Clone, Copy)]
pub struct CiphertextParity;

impl ParityAdversary for CiphertextParity {
    fn name(&self) -> String {
        "ciphertext-parity".into()
    }

    fn guess_parity(&self, _: &dyn ShannonCipher, c: &BitString, _: &mut dyn RngCore) -> bool {
        c.parity()
    }
}

/// SS adversary built from a message-recovery adversary: submits two
/// independent uniform messages and outputs 1 iff the recovered message is
/// `m₁`. Its SS advantage is at least the inner MR advantage.
pub struct MrToSs {
    pub inner: Box<dyn MrAdversary>,
}

impl SsAdversary for MrToSs {
    fn name(&self) -> String {
        alloc::format!("mr-reduction:{}", self.inner.name())
    }

    fn choose(&self, cipher: &dyn ShannonCipher, rng: &mut dyn RngCore) -> (BitString, BitString) {
        (cipher.random_message(rng), cipher.random_message(rng))
    }

    fn guess(
        &self,
        cipher: &dyn ShannonCipher,
        messages: &(BitString, BitString),
        c: &BitString,
        rng: &mut dyn RngCore,
    ) -> bool {
        self.inner.recover(cipher, c, rng) == messages.1
    }
}

/// SS adversary built from a parity adversary: submits a uniform even-parity
/// and a uniform odd-parity message and outputs the parity guess.
pub struct ParityToSs {
    pub inner: Box<dyn ParityAdversary>,
}

fn message_with_parity(cipher: &dyn ShannonCipher, odd: bool, rng: &mut dyn RngCore) -> BitString {
    loop {
        let m = cipher.random_message(rng);
        if m.parity() == odd {
            return m;
        }
    }
}

impl SsAdversary for ParityToSs {
    fn name(&self) -> String {
        alloc::format!("parity-reduction:{}", self.inner.name())
    }

    fn choose(&self, cipher: &dyn ShannonCipher, rng: &mut dyn RngCore) -> (BitString, BitString) {
        (
            message_with_parity(cipher, false, rng),
            message_with_parity(cipher, true, rng),
        )
    }

    fn guess(
        &self,
        cipher: &dyn ShannonCipher,
        _: &(BitString, BitString),
        c: &BitString,
        rng: &mut dyn RngCore,
    ) -> bool {
        self.inner.guess_parity(cipher, c, rng)
    }
}
