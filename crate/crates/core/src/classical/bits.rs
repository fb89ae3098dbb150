use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use rand::{Rng, RngCore};

use crate::error::{Error, Result};

/// A finite bit sequence, most significant bit first.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn zeros(len: usize) -> Self {
        Self(alloc::vec![false; len])
    }

    /// The low `len` bits of `value`, most significant first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64, "at most 64 bits fit in a u64");
        Self((0..len).rev().map(|i| (value >> i) & 1 == 1).collect())
    }

    /// `None` when longer than 64 bits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.0.len() > 64 {
            return None;
        }
        Some(self.0.iter().fold(0, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn random<R: RngCore + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self((0..len).map(|_| rng.gen()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Length {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect(),
        ))
    }

    /// True when the number of ones is odd.
    pub fn parity(&self) -> bool {
        self.0.iter().filter(|&&b| b).count() % 2 == 1
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        Self(bits)
    }

    pub fn slice(&self, range: Range<usize>) -> Self {
        Self(self.0[range].to_vec())
    }

    /// Splits into consecutive chunks of `width` bits; the length must be a
    /// multiple of `width`.
    pub fn chunks(&self, width: usize) -> Result<Vec<BitString>> {
        if width == 0 || self.len() % width != 0 {
            return Err(Error::Length {
                expected: width,
                actual: self.len(),
            });
        }
        Ok(self.0.chunks(width).map(|c| Self(c.to_vec())).collect())
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parameter(alloc::format!(
                    "invalid bit character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn u64_roundtrip() {
        let b = BitString::from_u64(0b1011, 4);
        assert_eq!(b.to_string(), "1011");
        assert_eq!(b.to_u64(), Some(11));
        assert_eq!(BitString::from_u64(5, 0).len(), 0);
        assert_eq!(BitString::from_u64(u64::MAX, 64).to_u64(), Some(u64::MAX));
    }

    #[test]
    fn parse_and_xor() {
        let a: BitString = "1010".parse().unwrap();
        let b: BitString = "0110".parse().unwrap();
        assert_eq!(a.xor(&b).unwrap().to_string(), "1100");
        assert!("10a".parse::<BitString>().is_err());
        assert!(a.xor(&BitString::zeros(3)).is_err());
        assert!(!a.parity());
        assert!("0111".parse::<BitString>().unwrap().parity());
    }

    #[test]
    fn chunks_and_concat() {
        let a: BitString = "110100".parse().unwrap();
        let parts = a.chunks(2).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].concat(&parts[1]).concat(&parts[2]), a);
        assert!(a.chunks(4).is_err());
        assert_eq!(a.slice(1..4).to_string(), "101");
    }
}
