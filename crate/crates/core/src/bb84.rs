//! BB84 key distribution with an optional intercept-resend eavesdropper.
//!
//! Each round: Alice draws a bit and a basis and sends the encoded qubit; Eve
//! (if present) measures it in a random basis and resends her result; Bob
//! measures in his own random basis. Sifting keeps rounds where Alice's and
//! Bob's bases agree, and detection publicly compares a prefix of the sifted
//! key. The classical channel is authenticated and error-free.

use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::quantum::{measure, outcome_probabilities, MeasurementBasis, StateVector};
use crate::seed::{derive_seed, rng_from_seed};

/// Eavesdropping strategy on the quantum channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eavesdropper {
    None,
    /// Measure every qubit in a uniformly random basis and resend the result.
    InterceptResend,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bb84Config {
    pub n_rounds: usize,
    pub eve: Eavesdropper,
    /// Number of sifted bits disclosed for eavesdropper detection.
    pub reveal_k: usize,
    pub seed: u64,
}

impl Bb84Config {
    pub fn new(n_rounds: usize, eve: Eavesdropper, seed: u64) -> Self {
        Self {
            n_rounds,
            eve,
            reveal_k: 0,
            seed,
        }
    }

    pub fn with_reveal(mut self, k: usize) -> Self {
        self.reveal_k = k;
        self
    }
}

/// Alice's encoding: `(0,Z)→|0⟩, (1,Z)→|1⟩, (0,X)→|+⟩, (1,X)→|−⟩`.
pub fn encode(bit: bool, basis: MeasurementBasis) -> StateVector {
    match (basis, bit) {
        (MeasurementBasis::Z, false) => StateVector::ket0(),
        (MeasurementBasis::Z, true) => StateVector::ket1(),
        (MeasurementBasis::X, false) => StateVector::plus(),
        (MeasurementBasis::X, true) => StateVector::minus(),
    }
}

/// Text label of an encoded qubit: `"0"`, `"1"`, `"+"` or `"-"`.
pub fn qubit_label(bit: bool, basis: MeasurementBasis) -> &'static str {
    match (basis, bit) {
        (MeasurementBasis::Z, false) => "0",
        (MeasurementBasis::Z, true) => "1",
        (MeasurementBasis::X, false) => "+",
        (MeasurementBasis::X, true) => "-",
    }
}

fn random_basis<R: Rng + ?Sized>(rng: &mut R) -> MeasurementBasis {
    if rng.gen::<bool>() {
        MeasurementBasis::X
    } else {
        MeasurementBasis::Z
    }
}

/// Eve measures `qubit` in a random basis and forwards a fresh encoding of
/// her result. Returns `(forwarded, eve_basis, eve_bit)`.
pub fn intercept_resend<R: Rng + ?Sized>(
    qubit: &StateVector,
    rng: &mut R,
) -> Result<(StateVector, MeasurementBasis, bool)> {
    if qubit.n_qubits() != 1 {
        return Err(Error::Dimension {
            expected: 1,
            actual: qubit.n_qubits(),
        });
    }
    let basis = random_basis(rng);
    let (bit, _) = measure(qubit, basis, 0, rng)?;
    Ok((encode(bit, basis), basis, bit))
}

/// One row of a protocol run.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundRecord {
    /// 1-based round number.
    pub index: usize,
    pub alice_bit: bool,
    pub alice_basis: MeasurementBasis,
    pub sent_qubit: StateVector,
    pub eve_basis: Option<MeasurementBasis>,
    pub eve_bit: Option<bool>,
    pub bob_basis: MeasurementBasis,
    pub bob_bit: bool,
    pub kept: bool,
}

impl RoundRecord {
    /// Builds a record from the parties' choices and observations; the sent
    /// qubit and the `kept` flag are derived.
    pub fn new(
        index: usize,
        alice: (bool, MeasurementBasis),
        eve: Option<(MeasurementBasis, bool)>,
        bob: (MeasurementBasis, bool),
    ) -> Self {
        Self {
            index,
            alice_bit: alice.0,
            alice_basis: alice.1,
            sent_qubit: encode(alice.0, alice.1),
            eve_basis: eve.map(|e| e.0),
            eve_bit: eve.map(|e| e.1),
            bob_basis: bob.0,
            bob_bit: bob.1,
            kept: alice.1 == bob.0,
        }
    }

    /// Born probability of the recorded measurement outcomes given the
    /// recorded choices. Zero means the row cannot happen.
    pub fn likelihood(&self) -> f64 {
        let mut p = 1.0;
        let mut in_flight = self.sent_qubit.clone();
        if let (Some(basis), Some(bit)) = (self.eve_basis, self.eve_bit) {
            p *= prob_of(&in_flight, basis, bit);
            in_flight = encode(bit, basis);
        }
        p * prob_of(&in_flight, self.bob_basis, self.bob_bit)
    }
}

fn prob_of(q: &StateVector, basis: MeasurementBasis, bit: bool) -> f64 {
    outcome_probabilities(q, basis, 0).expect("single-qubit state")[bit as usize]
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolTranscript {
    pub rounds: Vec<RoundRecord>,
    pub config: Bb84Config,
}

impl ProtocolTranscript {
    /// Assembles a transcript from externally produced rows, checking the
    /// record invariants.
    pub fn from_rounds(config: Bb84Config, rounds: Vec<RoundRecord>) -> Result<Self> {
        if rounds.len() != config.n_rounds {
            return Err(Error::Length {
                expected: config.n_rounds,
                actual: rounds.len(),
            });
        }
        for r in &rounds {
            if r.kept != (r.alice_basis == r.bob_basis)
                || r.sent_qubit != encode(r.alice_bit, r.alice_basis)
                || r.eve_basis.is_some() != r.eve_bit.is_some()
            {
                return Err(Error::Parameter(alloc::format!(
                    "round {} is inconsistent",
                    r.index
                )));
            }
        }
        Ok(Self { rounds, config })
    }
}

/// Runs the quantum phase and basis reconciliation. Deterministic in
/// `config.seed`.
pub fn run_bb84(config: &Bb84Config) -> ProtocolTranscript {
    let mut rng = rng_from_seed(config.seed);
    let rounds = (1..=config.n_rounds)
        .map(|index| {
            let alice_bit: bool = rng.gen();
            let alice_basis = random_basis(&mut rng);
            let sent = encode(alice_bit, alice_basis);
            let (in_flight, eve) = match config.eve {
                Eavesdropper::None => (sent.clone(), None),
                Eavesdropper::InterceptResend => {
                    let (fwd, basis, bit) =
                        intercept_resend(&sent, &mut rng).expect("single-qubit state");
                    (fwd, Some((basis, bit)))
                }
            };
            let bob_basis = random_basis(&mut rng);
            let (bob_bit, _) =
                measure(&in_flight, bob_basis, 0, &mut rng).expect("single-qubit state");
            RoundRecord {
                index,
                alice_bit,
                alice_basis,
                sent_qubit: sent,
                eve_basis: eve.map(|e| e.0),
                eve_bit: eve.map(|e| e.1),
                bob_basis,
                bob_bit,
                kept: alice_basis == bob_basis,
            }
        })
        .collect();
    ProtocolTranscript {
        rounds,
        config: config.clone(),
    }
}

/// Keys left after discarding rounds with mismatched bases.
#[derive(Debug, Clone, PartialEq)]
pub struct SiftedResult {
    pub alice_key: Vec<bool>,
    pub bob_key: Vec<bool>,
    /// Round numbers that survived sifting.
    pub kept_indices: Vec<usize>,
    pub sift_fraction: f64,
    /// Fraction of sifted positions where the keys differ (0 when empty).
    pub qber: f64,
}

impl SiftedResult {
    pub fn len(&self) -> usize {
        self.alice_key.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alice_key.is_empty()
    }

    pub fn errors(&self) -> usize {
        self.alice_key
            .iter()
            .zip(&self.bob_key)
            .filter(|(a, b)| a != b)
            .count()
    }
}

pub fn sift(transcript: &ProtocolTranscript) -> SiftedResult {
    let kept: Vec<&RoundRecord> = transcript.rounds.iter().filter(|r| r.kept).collect();
    let alice_key: Vec<bool> = kept.iter().map(|r| r.alice_bit).collect();
    let bob_key: Vec<bool> = kept.iter().map(|r| r.bob_bit).collect();
    let total = transcript.rounds.len();
    let mut result = SiftedResult {
        kept_indices: kept.iter().map(|r| r.index).collect(),
        sift_fraction: if total == 0 {
            0.0
        } else {
            kept.len() as f64 / total as f64
        },
        qber: 0.0,
        alice_key,
        bob_key,
    };
    if !result.is_empty() {
        result.qber = result.errors() as f64 / result.len() as f64;
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionResult {
    pub detected: bool,
    pub revealed: usize,
    pub final_key_alice: Vec<bool>,
    pub final_key_bob: Vec<bool>,
}

/// Publicly compares the first `k` sifted bits. Final keys are returned even
/// when an eavesdropper is detected; the caller decides whether to abort.
pub fn detect(sifted: &SiftedResult, k: usize) -> Result<DetectionResult> {
    if k > sifted.len() {
        return Err(Error::Length {
            expected: sifted.len(),
            actual: k,
        });
    }
    let detected = sifted.alice_key[..k] != sifted.bob_key[..k];
    Ok(DetectionResult {
        detected,
        revealed: k,
        final_key_alice: sifted.alice_key[k..].to_vec(),
        final_key_bob: sifted.bob_key[k..].to_vec(),
    })
}

/// Probability of catching an intercept-resend eavesdropper after comparing
/// `k` sifted bits: `1 − (3/4)^k`.
pub fn detection_probability(k: u32) -> f64 {
    1.0 - libm::pow(0.75, k as f64)
}

/// One detection experiment: run intercept-resend BB84 until at least `k`
/// bits survive sifting, then compare `k` of them.
pub fn detection_trial(k: usize, master_seed: u64, run: u64) -> bool {
    let run_seed = derive_seed(master_seed, k as u64, run);
    let n_rounds = 4 * k + 32;
    for attempt in 0.. {
        let config = Bb84Config::new(
            n_rounds,
            Eavesdropper::InterceptResend,
            derive_seed(run_seed, attempt, 0),
        )
        .with_reveal(k);
        let sifted = sift(&run_bb84(&config));
        if let Ok(d) = detect(&sifted, k) {
            return d.detected;
        }
    }
    unreachable!()
}

/// Empirical versus closed-form detection rate for one `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectionRow {
    pub k: usize,
    pub runs: usize,
    pub detected: usize,
    pub empirical: f64,
    pub closed_form: f64,
}

impl DetectionRow {
    pub fn from_count(k: usize, runs: usize, detected: usize) -> Self {
        Self {
            k,
            runs,
            detected,
            empirical: if runs == 0 {
                0.0
            } else {
                detected as f64 / runs as f64
            },
            closed_form: detection_probability(k as u32),
        }
    }
}

/// Detection table for `k = 1..=max_k`, `runs` independent runs each.
pub fn detection_sweep(max_k: usize, runs: usize, master_seed: u64) -> Vec<DetectionRow> {
    (1..=max_k)
        .map(|k| {
            let detected = (0..runs as u64)
                .filter(|&r| detection_trial(k, master_seed, r))
                .count();
            DetectionRow::from_count(k, runs, detected)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::fidelity;
    use crate::seed::rng_from_seed;
    use alloc::vec;
    use MeasurementBasis::{X, Z};

    #[test]
    fn encoding_table() {
        assert_eq!(encode(false, Z), StateVector::ket0());
        assert_eq!(encode(true, Z), StateVector::ket1());
        assert_eq!(encode(false, X), StateVector::plus());
        assert_eq!(encode(true, X), StateVector::minus());
        assert_eq!(qubit_label(true, X), "-");
    }

    #[test]
    fn eve_in_matching_basis_is_invisible() {
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let (fwd, basis, bit) = intercept_resend(&StateVector::ket0(), &mut rng).unwrap();
            match basis {
                Z => {
                    assert!(!bit);
                    assert_eq!(fwd, StateVector::ket0());
                }
                X => {
                    let target = if bit {
                        StateVector::minus()
                    } else {
                        StateVector::plus()
                    };
                    assert!((fidelity(&fwd, &target).unwrap() - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn eve_in_wrong_basis_is_a_coin_flip() {
        let mut rng = rng_from_seed(2);
        let (mut z_trials, mut ones) = (0, 0);
        for _ in 0..20_000 {
            let (_, basis, bit) = intercept_resend(&StateVector::minus(), &mut rng).unwrap();
            if basis == Z {
                z_trials += 1;
                ones += bit as usize;
            }
        }
        assert!((ones as f64 / z_trials as f64 - 0.5).abs() < 0.02);
        assert!((z_trials as f64 / 20_000.0 - 0.5).abs() < 0.02);
    }

    #[test]
    fn empty_run() {
        let t = run_bb84(&Bb84Config::new(0, Eavesdropper::None, 1));
        assert!(t.rounds.is_empty());
        let s = sift(&t);
        assert!(s.is_empty());
        assert_eq!(s.qber, 0.0);
        assert_eq!(s.sift_fraction, 0.0);
    }

    #[test]
    fn run_is_deterministic_in_seed() {
        let cfg = Bb84Config::new(500, Eavesdropper::InterceptResend, 99);
        assert_eq!(run_bb84(&cfg), run_bb84(&cfg));
        let other = Bb84Config {
            seed: 100,
            ..cfg.clone()
        };
        assert_ne!(run_bb84(&cfg), run_bb84(&other));
    }

    #[test]
    fn record_invariants_hold_in_runs() {
        let t = run_bb84(&Bb84Config::new(2000, Eavesdropper::InterceptResend, 5));
        for (i, r) in t.rounds.iter().enumerate() {
            assert_eq!(r.index, i + 1);
            assert_eq!(r.kept, r.alice_basis == r.bob_basis);
            assert_eq!(r.sent_qubit, encode(r.alice_bit, r.alice_basis));
            assert!(r.eve_basis.is_some() && r.eve_bit.is_some());
            assert!(r.likelihood() > 0.0);
        }
        let rebuilt = ProtocolTranscript::from_rounds(t.config.clone(), t.rounds.clone()).unwrap();
        assert_eq!(rebuilt, t);
    }

    #[test]
    fn no_eve_means_no_errors() {
        for seed in 0..20 {
            let s = sift(&run_bb84(&Bb84Config::new(1000, Eavesdropper::None, seed)));
            assert_eq!(s.qber, 0.0);
            assert_eq!(s.alice_key, s.bob_key);
        }
    }

    #[test]
    fn all_mismatched_bases_gives_empty_key() {
        let rounds = (1..=4)
            .map(|i| RoundRecord::new(i, (i % 2 == 0, Z), None, (X, false)))
            .collect();
        let t = ProtocolTranscript::from_rounds(Bb84Config::new(4, Eavesdropper::None, 0), rounds)
            .unwrap();
        let s = sift(&t);
        assert!(s.is_empty());
        assert_eq!(s.qber, 0.0);
        assert!(!detect(&s, 0).unwrap().detected);
        assert!(matches!(detect(&s, 1), Err(Error::Length { .. })));
    }

    #[test]
    fn detect_examples() {
        let s = SiftedResult {
            alice_key: vec![false, true, true, true, true],
            bob_key: vec![false, false, true, true, true],
            kept_indices: vec![1, 3, 5, 6, 8],
            sift_fraction: 5.0 / 8.0,
            qber: 0.2,
        };
        let d = detect(&s, 2).unwrap();
        assert!(d.detected);
        assert_eq!(d.final_key_alice, vec![true, true, true]);
        assert!(!detect(&s, 1).unwrap().detected);
        assert!(!detect(&s, 0).unwrap().detected);
        assert_eq!(detect(&s, 0).unwrap().final_key_bob.len(), 5);
        assert!(detect(&s, 6).is_err());

        let same = SiftedResult {
            bob_key: s.alice_key.clone(),
            ..s.clone()
        };
        for k in 0..=5 {
            let d = detect(&same, k).unwrap();
            assert!(!d.detected);
            assert_eq!(d.final_key_alice.len(), 5 - k);
            assert_eq!(d.revealed, k);
        }
    }

    #[test]
    fn closed_form_detection() {
        assert_eq!(detection_probability(0), 0.0);
        assert!((detection_probability(1) - 0.25).abs() < 1e-15);
        assert!((detection_probability(2) - 0.4375).abs() < 1e-15);
    }

    #[test]
    fn inconsistent_rows_rejected() {
        let mut r = RoundRecord::new(1, (false, Z), None, (Z, false));
        r.kept = false;
        assert!(ProtocolTranscript::from_rounds(
            Bb84Config::new(1, Eavesdropper::None, 0),
            vec![r]
        )
        .is_err());
        let r = RoundRecord::new(1, (false, Z), None, (Z, false));
        assert!(ProtocolTranscript::from_rounds(
            Bb84Config::new(2, Eavesdropper::None, 0),
            vec![r]
        )
        .is_err());
    }
}
