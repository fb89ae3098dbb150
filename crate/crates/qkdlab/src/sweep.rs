//! Rayon-parallel versions of the Monte-Carlo sweeps. Each unit of work uses
//! its own derived seed, so results equal the sequential ones.

use qkdlab_core::bb84::{detection_trial, DetectionRow};
use qkdlab_core::games::{entry_seed, run_suite_entry, validate_suite, SuiteConfig, SuiteReport};
use qkdlab_core::Result;
use rayon::prelude::*;

/// Parallel [`qkdlab_core::bb84::detection_sweep`].
pub fn detection_sweep(max_k: usize, runs: usize, master_seed: u64) -> Vec<DetectionRow> {
    (1..=max_k)
        .map(|k| {
            let detected = (0..runs as u64)
                .into_par_iter()
                .filter(|&run| detection_trial(k, master_seed, run))
                .count();
            DetectionRow::from_count(k, runs, detected)
        })
        .collect()
}

/// Parallel [`qkdlab_core::games::run_game_suite`]: rows run concurrently,
/// each with the seed it would get sequentially.
pub fn run_game_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    validate_suite(&config.entries)?;
    let rows = config
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, entry)| run_suite_entry(entry, entry_seed(config.master_seed, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport {
        master_seed: config.master_seed,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use qkdlab_core::games::named_suite;

    #[test]
    fn parallel_sweep_matches_sequential() {
        assert_eq!(
            detection_sweep(3, 300, 5),
            qkdlab_core::bb84::detection_sweep(3, 300, 5)
        );
    }

    #[test]
    fn parallel_suite_matches_sequential() {
        let config = SuiteConfig {
            master_seed: 9,
            entries: named_suite("default", 200).unwrap(),
        };
        assert_eq!(
            run_game_suite(&config).unwrap(),
            qkdlab_core::games::run_game_suite(&config).unwrap()
        );
    }
}
