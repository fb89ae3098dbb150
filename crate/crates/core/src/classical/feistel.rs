//! A 16-bit balanced Feistel cipher with an affine key schedule, and ECB
//! mode over it.

use alloc::vec::Vec;

use crate::classical::bits::BitString;
use crate::error::{Error, Result};

pub const BLOCK_BITS: usize = 16;
pub const KEY_BITS: usize = 16;
pub const TOY_ROUNDS: usize = 4;
pub const ECB_MAX_BLOCKS: usize = 64;
const MAX_ROUNDS: usize = 16;

const SBOX: [u8; 16] = [
    0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD, 0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2,
];

const ROUND_CONSTANTS: [u16; MAX_ROUNDS] = [
    0x0000, 0x9E37, 0x79B9, 0x7F4A, 0x7C15, 0xF39C, 0xC6EF, 0x3720, 0xB54A, 0x32D3, 0x1A2B, 0xE5C4,
    0x4D6F, 0x8A81, 0xD1B5, 0x2C9E,
];

fn substitute(x: u8) -> u8 {
    (SBOX[(x >> 4) as usize] << 4) | SBOX[(x & 0xF) as usize]
}

fn round_function(half: u8, round_key: u16) -> u8 {
    let [hi, lo] = round_key.to_be_bytes();
    substitute(half ^ lo).rotate_left(3).wrapping_add(hi)
}

/// `rounds`-round Feistel on 16-bit blocks with 8-bit halves. One round maps
/// `(L, R)` to `(R, L ⊕ F(R, kᵢ))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeistelCipher {
    rounds: usize,
}

impl FeistelCipher {
    pub fn new(rounds: usize) -> Result<Self> {
        if !(1..=MAX_ROUNDS).contains(&rounds) {
            return Err(Error::Parameter(alloc::format!(
                "rounds must be in 1..={MAX_ROUNDS}, got {rounds}"
            )));
        }
        Ok(Self { rounds })
    }

    /// The 4-round toy cipher.
    pub fn toy() -> Self {
        Self { rounds: TOY_ROUNDS }
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Key expansion `kᵢ = rotl(k, i) ⊕ cᵢ`.
    pub fn round_keys(&self, key: u16) -> Vec<u16> {
        (0..self.rounds)
            .map(|i| key.rotate_left(i as u32) ^ ROUND_CONSTANTS[i])
            .collect()
    }

    pub fn encrypt(&self, key: u16, block: u16) -> u16 {
        let [mut l, mut r] = block.to_be_bytes();
        for k in self.round_keys(key) {
            (l, r) = (r, l ^ round_function(r, k));
        }
        u16::from_be_bytes([l, r])
    }

    /// Undoes [`encrypt`](Self::encrypt) with the round keys in reverse order.
    pub fn decrypt(&self, key: u16, block: u16) -> u16 {
        let [mut l, mut r] = block.to_be_bytes();
        for k in self.round_keys(key).into_iter().rev() {
            (l, r) = (r ^ round_function(l, k), l);
        }
        u16::from_be_bytes([l, r])
    }
}

fn word(bits: &BitString, width: usize) -> Result<u16> {
    if bits.len() != width {
        return Err(Error::Length {
            expected: width,
            actual: bits.len(),
        });
    }
    Ok(bits.to_u64().expect("16 bits") as u16)
}

pub fn toy_block_enc(key: &BitString, block: &BitString) -> Result<BitString> {
    let c = FeistelCipher::toy().encrypt(word(key, KEY_BITS)?, word(block, BLOCK_BITS)?);
    Ok(BitString::from_u64(c as u64, BLOCK_BITS))
}

pub fn toy_block_dec(key: &BitString, block: &BitString) -> Result<BitString> {
    let m = FeistelCipher::toy().decrypt(word(key, KEY_BITS)?, word(block, BLOCK_BITS)?);
    Ok(BitString::from_u64(m as u64, BLOCK_BITS))
}

fn check_block_count(n: usize) -> Result<()> {
    if n == 0 || n > ECB_MAX_BLOCKS {
        return Err(Error::Length {
            expected: ECB_MAX_BLOCKS,
            actual: n,
        });
    }
    Ok(())
}

/// Electronic code book: each block encrypted independently under one key.
pub fn ecb_enc(cipher: &FeistelCipher, key: u16, blocks: &[u16]) -> Result<Vec<u16>> {
    check_block_count(blocks.len())?;
    Ok(blocks.iter().map(|&b| cipher.encrypt(key, b)).collect())
}

pub fn ecb_dec(cipher: &FeistelCipher, key: u16, blocks: &[u16]) -> Result<Vec<u16>> {
    check_block_count(blocks.len())?;
    Ok(blocks.iter().map(|&b| cipher.decrypt(key, b)).collect())
}
