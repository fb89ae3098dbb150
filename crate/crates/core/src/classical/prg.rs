use alloc::string::String;

use crate::classical::bits::BitString;
use crate::classical::feistel::{FeistelCipher, BLOCK_BITS, KEY_BITS};
use crate::error::{Error, Result};

/// A deterministic expander `G: {0,1}^ℓ → {0,1}^L` with `L > ℓ`.
pub trait Prg {
    fn name(&self) -> String;
    fn seed_len(&self) -> usize;
    fn out_len(&self) -> usize;
    fn expand(&self, seed: &BitString) -> Result<BitString>;
}

fn check_seed(prg: &(impl Prg + ?Sized), seed: &BitString) -> Result<()> {
    if seed.len() != prg.seed_len() {
        return Err(Error::Length {
            expected: prg.seed_len(),
            actual: seed.len(),
        });
    }
    Ok(())
}

/// Counter mode of the toy block cipher: `Enc(s, 0) ‖ Enc(s, 1) ‖ …`,
/// truncated to `L` bits. The seed is the 16-bit cipher key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterPrg {
    cipher: FeistelCipher,
    out_len: usize,
}

impl CounterPrg {
    pub fn new(out_len: usize) -> Result<Self> {
        if out_len <= KEY_BITS || out_len > BLOCK_BITS << 16 {
            return Err(Error::Parameter(alloc::format!(
                "output length must be in {}..={}, got {out_len}",
                KEY_BITS + 1,
                BLOCK_BITS << 16
            )));
        }
        Ok(Self {
            cipher: FeistelCipher::toy(),
            out_len,
        })
    }
}

impl Prg for CounterPrg {
    fn name(&self) -> String {
        alloc::format!("counter-{}", self.out_len)
    }

    fn seed_len(&self) -> usize {
        KEY_BITS
    }

    fn out_len(&self) -> usize {
        self.out_len
    }

    fn expand(&self, seed: &BitString) -> Result<BitString> {
        check_seed(self, seed)?;
        let key = seed.to_u64().expect("16-bit seed") as u16;
        let blocks = self.out_len.div_ceil(BLOCK_BITS);
        let bits = (0..blocks)
            .flat_map(|i| {
                let c = self.cipher.encrypt(key, i as u16);
                (0..BLOCK_BITS).rev().map(move |j| (c >> j) & 1 == 1)
            })
            .take(self.out_len)
            .collect::<alloc::vec::Vec<_>>();
        Ok(BitString::new(bits))
    }
}

/// The degenerate expander `G(s) = s ‖ 0^{L−ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroPaddingPrg {
    seed_len: usize,
    out_len: usize,
}

impl ZeroPaddingPrg {
    pub fn new(seed_len: usize, out_len: usize) -> Result<Self> {
        if seed_len == 0 || seed_len > 63 || out_len <= seed_len {
            return Err(Error::Parameter(alloc::format!(
                "need 0 < seed length < 64 and output length above it, got {seed_len}, {out_len}"
            )));
        }
        Ok(Self { seed_len, out_len })
    }
}

impl Prg for ZeroPaddingPrg {
    fn name(&self) -> String {
        alloc::format!("zero-pad-{}-{}", self.seed_len, self.out_len)
    }

    fn seed_len(&self) -> usize {
        self.seed_len
    }

    fn out_len(&self) -> usize {
        self.out_len
    }

    fn expand(&self, seed: &BitString) -> Result<BitString> {
        check_seed(self, seed)?;
        Ok(seed.concat(&BitString::zeros(self.out_len - self.seed_len)))
    }
}

pub fn prg_expand(prg: &dyn Prg, seed: &BitString) -> Result<BitString> {
    prg.expand(seed)
}

/// `G(s)[0..v] ⊕ m` for `|m| = v ≤ L`.
pub fn stream_enc(prg: &dyn Prg, seed: &BitString, m: &BitString) -> Result<BitString> {
    if m.len() > prg.out_len() {
        return Err(Error::Length {
            expected: prg.out_len(),
            actual: m.len(),
        });
    }
    prg.expand(seed)?.slice(0..m.len()).xor(m)
}

pub fn stream_dec(prg: &dyn Prg, seed: &BitString, c: &BitString) -> Result<BitString> {
    stream_enc(prg, seed, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;
    use rand::Rng;

    #[test]
    fn counter_prg_contract() {
        let prg = CounterPrg::new(64).unwrap();
        let s = BitString::from_u64(0xABCD, 16);
        let out = prg.expand(&s).unwrap();
        assert_eq!(out.len(), 64);
        assert_eq!(out, prg_expand(&prg, &s).unwrap());
        assert!(prg.expand(&BitString::zeros(15)).is_err());
        assert!(CounterPrg::new(16).is_err());
        assert_eq!(CounterPrg::new(20).unwrap().expand(&s).unwrap().len(), 20);
    }

    #[test]
    fn distinct_seeds_give_distinct_outputs() {
        let prg = CounterPrg::new(64).unwrap();
        let mut rng = rng_from_seed(8);
        let seeds: BTreeSet<u16> = (0..1000).map(|_| rng.gen()).collect();
        let outputs: BTreeSet<BitString> = seeds
            .iter()
            .map(|&s| prg.expand(&BitString::from_u64(s as u64, 16)).unwrap())
            .collect();
        assert_eq!(outputs.len(), seeds.len());
    }

    #[test]
    fn zero_padding() {
        let prg = ZeroPaddingPrg::new(4, 10).unwrap();
        let out = prg.expand(&"1011".parse().unwrap()).unwrap();
        assert_eq!(alloc::string::ToString::to_string(&out), "1011000000");
        assert!(ZeroPaddingPrg::new(8, 8).is_err());
    }

    #[test]
    fn stream_cipher() {
        let prg = CounterPrg::new(48).unwrap();
        let mut rng = rng_from_seed(9);
        for _ in 0..1000 {
            let seed = BitString::random(16, &mut rng);
            let v = rng.gen_range(0..=48);
            let m = BitString::random(v, &mut rng);
            let c = stream_enc(&prg, &seed, &m).unwrap();
            assert_eq!(c.len(), v);
            assert_eq!(stream_dec(&prg, &seed, &c).unwrap(), m);
        }
        let seed = BitString::zeros(16);
        assert!(stream_enc(&prg, &seed, &BitString::zeros(49)).is_err());
    }

    #[test]
    fn keystream_reuse_leaks_xor() {
        let prg = CounterPrg::new(32).unwrap();
        let mut rng = rng_from_seed(10);
        let seed = BitString::random(16, &mut rng);
        let ms: Vec<BitString> = (0..2).map(|_| BitString::random(32, &mut rng)).collect();
        let c1 = stream_enc(&prg, &seed, &ms[0]).unwrap();
        let c2 = stream_enc(&prg, &seed, &ms[1]).unwrap();
        assert_eq!(c1.xor(&c2).unwrap(), ms[0].xor(&ms[1]).unwrap());
    }
}
