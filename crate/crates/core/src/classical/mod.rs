//! Toy classical schemes. Every construction here is sized for exhaustive
//! testing and is insecure at these parameters.

mod arith;
mod bits;
mod cipher;
mod dh;
mod feistel;
mod prg;
mod rsa;
mod uhf;

pub use arith::{
    gcd, is_prime, mod_exp, mod_inverse, mod_mul, prime_factors, primes_in, smallest_factor,
};
pub use bits::BitString;
pub use cipher::{
    check_perfect_secrecy, otp_dec, otp_enc, EcbCipher, EvenParityOtp, IdentityCipher,
    KeystreamReuseCipher, Otp, SecrecyReport, ShannonCipher, StreamCipher, ENUMERATION_LIMIT,
};
pub use dh::{dh_keygen, dh_public, dh_shared, DhGroup};
pub use feistel::{
    ecb_dec, ecb_enc, toy_block_dec, toy_block_enc, FeistelCipher, BLOCK_BITS, ECB_MAX_BLOCKS,
    KEY_BITS, TOY_ROUNDS,
};
pub use prg::{prg_expand, stream_dec, stream_enc, CounterPrg, Prg, ZeroPaddingPrg};
pub use rsa::{rsa_dec, rsa_enc, rsa_from_primes, rsa_gen, RsaKeyPair, RsaPublicKey, RsaSecretKey};
pub use uhf::{uhf_eval, PolyUhf};
