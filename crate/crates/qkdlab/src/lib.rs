//! Std companion to `qkdlab-core`: the `qkdlab` command-line tool, JSON/CSV
//! records, parallel Monte-Carlo sweeps and golden test-vector files.

pub mod cli;
pub mod demo;
pub mod records;
pub mod sweep;
pub mod vectors;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 1984;
