//! Deterministic, seedable laboratory for quantum and classical cryptography.
//!
//! The crate is `no_std` (it needs `alloc`) and performs no IO. Every random
//! choice is drawn from a caller-supplied generator or from a seed, so every
//! experiment replays bit-for-bit.
//!
//! - [`quantum`]: statevector simulation, gates, projective and Bell
//!   measurement, density matrices and entropy functionals.
//! - [`teleport`]: one-qubit teleportation over a shared Bell pair.
//! - [`bb84`]: the BB84 key distribution protocol with an optional
//!   intercept-resend eavesdropper, sifting and eavesdropper detection.
//! - [`classical`]: one-time pad, toy PRG, stream cipher, Feistel block
//!   cipher, ECB, polynomial UHF, RSA and Diffie-Hellman.
//! - [`games`]: challenger/adversary experiments with Monte-Carlo advantage
//!   estimation.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bb84;
pub mod classical;
pub mod error;
pub mod games;
pub mod quantum;
pub mod seed;
pub mod teleport;

pub use error::{Error, Result};
