use qkdlab_core::bb84::{
    detect, detection_probability, detection_sweep, detection_trial, run_bb84, sift, Bb84Config,
    Eavesdropper, ProtocolTranscript, RoundRecord,
};
use qkdlab_core::quantum::MeasurementBasis::{X, Z};
use qkdlab_core::quantum::{MeasurementBasis, StateVector};

/// The eight-round worked example with an intercept-resend eavesdropper.
fn worked_example() -> ProtocolTranscript {
    #[rustfmt::skip]
    let rows: [(u8, MeasurementBasis, MeasurementBasis, u8, u8, MeasurementBasis); 8] = [
        (0, Z, Z, 0, 0, Z),
        (0, Z, Z, 0, 1, X),
        (1, X, Z, 1, 0, X),
        (0, X, X, 0, 1, Z),
        (1, X, X, 1, 1, X),
        (1, Z, Z, 1, 1, Z),
        (0, Z, Z, 0, 1, X),
        (0, Z, X, 0, 0, Z),
    ];
    let rounds = rows
        .iter()
        .enumerate()
        .map(|(i, &(a_bit, a_basis, e_basis, e_bit, b_bit, b_basis))| {
            RoundRecord::new(
                i + 1,
                (a_bit == 1, a_basis),
                Some((e_basis, e_bit == 1)),
                (b_basis, b_bit == 1),
            )
        })
        .collect();
    ProtocolTranscript::from_rounds(Bb84Config::new(8, Eavesdropper::InterceptResend, 0), rounds)
        .unwrap()
}

fn bits(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}

#[test]
fn worked_example_rows_are_physical() {
    let t = worked_example();
    for r in &t.rounds {
        assert!(r.likelihood() > 0.0, "round {} cannot occur", r.index);
    }
    assert_eq!(t.rounds[2].sent_qubit, StateVector::minus());
    assert_eq!(t.rounds[3].sent_qubit, StateVector::plus());
}

#[test]
fn worked_example_sifts_and_detects() {
    let s = sift(&worked_example());
    assert_eq!(s.kept_indices, [1, 3, 5, 6, 8]);
    assert_eq!(s.alice_key, bits("01110"));
    assert_eq!(s.bob_key, bits("00110"));
    assert!((s.qber - 0.2).abs() < 1e-15);
    assert!((s.sift_fraction - 5.0 / 8.0).abs() < 1e-15);
    let d = detect(&s, 2).unwrap();
    assert!(d.detected);
    assert_eq!(d.final_key_alice, bits("110"));
    assert!(!detect(&s, 1).unwrap().detected);
}

#[test]
fn simulated_eight_round_transcript_has_the_same_shape() {
    let t = run_bb84(&Bb84Config::new(8, Eavesdropper::InterceptResend, 2024));
    assert_eq!(t.rounds.len(), 8);
    for r in &t.rounds {
        assert_eq!(r.kept, r.alice_basis == r.bob_basis);
        assert!(r.eve_basis.is_some());
    }
}

#[test]
fn sifting_statistics_without_eve() {
    let s = sift(&run_bb84(&Bb84Config::new(100_000, Eavesdropper::None, 7)));
    assert_eq!(s.qber, 0.0);
    assert!(
        (0.49..=0.51).contains(&s.sift_fraction),
        "{}",
        s.sift_fraction
    );
}

#[test]
fn intercept_resend_error_rate() {
    let s = sift(&run_bb84(&Bb84Config::new(
        100_000,
        Eavesdropper::InterceptResend,
        8,
    )));
    assert!((0.24..=0.26).contains(&s.qber), "{}", s.qber);
}

#[test]
fn detection_rate_tracks_closed_form() {
    for row in detection_sweep(4, 4000, 11) {
        assert!((row.empirical - row.closed_form).abs() < 0.03, "{row:?}");
        assert_eq!(row.closed_form, detection_probability(row.k as u32));
    }
}

#[test]
fn detection_trials_are_reproducible() {
    for run in 0..20 {
        assert_eq!(detection_trial(5, 3, run), detection_trial(5, 3, run));
    }
}
