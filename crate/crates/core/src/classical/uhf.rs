use crate::classical::arith::{is_prime, mod_mul};
use crate::error::{Error, Result};

/// Polynomial hash `H(k, m) = Σᵢ mᵢ·k^{i+1} mod p` over messages of at most
/// `L` symbols in `Z_p`.
///
/// For two distinct messages of length `L` the difference is `k` times a
/// nonzero polynomial of degree at most `L−1`, so over the nonzero keys they
/// collide for at most `L−1` keys: `ε = (L−1)/(p−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyUhf {
    p: u64,
    max_blocks: usize,
}

impl PolyUhf {
    pub fn new(p: u64, max_blocks: usize) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::Parameter(alloc::format!(
                "modulus {p} must be a prime below 2^32"
            )));
        }
        if max_blocks == 0 {
            return Err(Error::Parameter("at least one block is required".into()));
        }
        Ok(Self { p, max_blocks })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn max_blocks(&self) -> usize {
        self.max_blocks
    }

    /// Collision bound over the nonzero keys.
    pub fn epsilon(&self) -> f64 {
        (self.max_blocks - 1) as f64 / (self.p - 1) as f64
    }

    pub fn eval(&self, key: u64, message: &[u64]) -> Result<u64> {
        if message.is_empty() || message.len() > self.max_blocks {
            return Err(Error::Length {
                expected: self.max_blocks,
                actual: message.len(),
            });
        }
        if key >= self.p {
            return Err(Error::Range(alloc::format!(
                "key {key} is outside Z_{}",
                self.p
            )));
        }
        if let Some(&bad) = message.iter().find(|&&m| m >= self.p) {
            return Err(Error::Range(alloc::format!(
                "symbol {bad} is outside Z_{}",
                self.p
            )));
        }
        let inner = message
            .iter()
            .rev()
            .fold(0, |acc, &m| (mod_mul(acc, key, self.p) + m) % self.p);
        Ok(mod_mul(inner, key, self.p))
    }

    /// Checks a pair for the collision game: distinct, each exactly `L`
    /// symbols.
    pub fn check_pair(&self, m1: &[u64], m2: &[u64]) -> Result<()> {
        if m1 == m2 {
            return Err(Error::InvalidPair("messages must differ".into()));
        }
        if m1.len() != self.max_blocks || m2.len() != self.max_blocks {
            return Err(Error::InvalidPair(alloc::format!(
                "messages must have exactly {} blocks",
                self.max_blocks
            )));
        }
        Ok(())
    }

    /// Number of nonzero keys on which the two messages collide.
    pub fn collision_count(&self, m1: &[u64], m2: &[u64]) -> Result<u64> {
        self.check_pair(m1, m2)?;
        let mut count = 0;
        for k in 1..self.p {
            if self.eval(k, m1)? == self.eval(k, m2)? {
                count += 1;
            }
        }
        Ok(count)
    }
}

pub fn uhf_eval(uhf: &PolyUhf, key: u64, message: &[u64]) -> Result<u64> {
    uhf.eval(key, message)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;
    use rand::Rng;

    #[test]
    fn examples() {
        let h = PolyUhf::new(7, 3).unwrap();
        assert_eq!(h.eval(3, &[1, 2]).unwrap(), 0);
        assert_eq!(h.eval(2, &[1, 2]).unwrap(), 3);
        for m in [[1u64, 0, 0], [6, 6, 6], [0, 3, 5]] {
            assert_eq!(h.eval(0, &m).unwrap(), 0);
        }
    }

    #[test]
    fn input_validation() {
        let h = PolyUhf::new(7, 2).unwrap();
        assert!(matches!(h.eval(1, &[]), Err(Error::Length { .. })));
        assert!(matches!(h.eval(1, &[1, 2, 3]), Err(Error::Length { .. })));
        assert!(matches!(h.eval(7, &[1]), Err(Error::Range(_))));
        assert!(matches!(h.eval(1, &[7]), Err(Error::Range(_))));
        assert!(PolyUhf::new(8, 2).is_err());
        assert!(PolyUhf::new(7, 0).is_err());
        assert!(matches!(
            h.collision_count(&[1, 2], &[1, 2]),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            h.collision_count(&[1], &[2]),
            Err(Error::InvalidPair(_))
        ));
    }

    #[test]
    fn collision_bound_is_exhaustive() {
        let h = PolyUhf::new(251, 3).unwrap();
        let mut rng = rng_from_seed(12);
        for _ in 0..100 {
            let m1: [u64; 3] = core::array::from_fn(|_| rng.gen_range(0..251));
            let mut m2 = m1;
            while m2 == m1 {
                m2 = core::array::from_fn(|_| rng.gen_range(0..251));
            }
            assert!(h.collision_count(&m1, &m2).unwrap() <= 2);
        }
    }

    #[test]
    fn one_block_difference_never_collides() {
        let h = PolyUhf::new(251, 3).unwrap();
        assert_eq!(h.collision_count(&[5, 9, 1], &[5, 10, 1]).unwrap(), 0);
    }

    #[test]
    fn bound_is_tight() {
        // k·(k−1)(k−2) = k³ − 3k² + 2k vanishes at k = 1, 2.
        let h = PolyUhf::new(251, 3).unwrap();
        assert_eq!(h.collision_count(&[2, 251 - 3, 1], &[0, 0, 0]).unwrap(), 2);
    }
}
