use qkdlab_core::classical::{IdentityCipher, Otp};
use qkdlab_core::games::{
    estimate_mr_advantage, estimate_parity_advantage, estimate_ss_advantage, named_suite,
    run_game_suite, CiphertextParity, CoinFlipParity, ConstantSs, MrAdversary, MrToSs,
    ParityAdversary, ParityToSs, RandomGuessMr, ReadOffMr, SsAdversary, SuiteConfig, ZerosOnesSs,
};
use qkdlab_core::seed::rng_from_seed;

#[test]
fn otp_gives_no_advantage_in_games_one_to_three() {
    let otp = Otp::new(6).unwrap();
    let mut rng = rng_from_seed(400);
    let ss: Vec<Box<dyn SsAdversary>> = vec![
        Box::new(ZerosOnesSs),
        Box::new(ConstantSs { output: true }),
        Box::new(MrToSs {
            inner: Box::new(ReadOffMr),
        }),
        Box::new(ParityToSs {
            inner: Box::new(CiphertextParity),
        }),
    ];
    for adv in &ss {
        let e = estimate_ss_advantage(&otp, adv.as_ref(), 10_000, &mut rng).unwrap();
        assert!(
            e.advantage <= 3.0 * e.ci_half_width + 1e-12,
            "{}: {e:?}",
            adv.name()
        );
    }
    let mr: [&dyn MrAdversary; 2] = [&RandomGuessMr, &ReadOffMr];
    for adv in mr {
        let e = estimate_mr_advantage(&otp, adv, 10_000, &mut rng).unwrap();
        assert!(
            e.advantage <= 3.0 * e.ci_half_width + 1e-12,
            "{}: {e:?}",
            adv.name()
        );
    }
    let parity: [&dyn ParityAdversary; 2] = [&CoinFlipParity, &CiphertextParity];
    for adv in parity {
        let e = estimate_parity_advantage(&otp, adv, 10_000, &mut rng).unwrap();
        assert!(
            e.advantage <= 3.0 * e.ci_half_width + 1e-12,
            "{}: {e:?}",
            adv.name()
        );
    }
}

#[test]
fn reductions_carry_advantage_over() {
    let id = IdentityCipher::new(4).unwrap();
    let mut rng = rng_from_seed(401);
    let mr = estimate_mr_advantage(&id, &ReadOffMr, 10_000, &mut rng).unwrap();
    let ss = estimate_ss_advantage(
        &id,
        &MrToSs {
            inner: Box::new(ReadOffMr),
        },
        10_000,
        &mut rng,
    )
    .unwrap();
    assert!(ss.advantage >= mr.advantage - 2.0 * ss.ci_half_width);

    let parity = estimate_parity_advantage(&id, &CiphertextParity, 10_000, &mut rng).unwrap();
    let wrapped = ParityToSs {
        inner: Box::new(CiphertextParity),
    };
    let ss = estimate_ss_advantage(&id, &wrapped, 10_000, &mut rng).unwrap();
    assert!(ss.advantage >= parity.advantage - 2.0 * ss.ci_half_width);
}

#[test]
fn default_suite_separates_secure_from_broken() {
    let report = run_game_suite(&SuiteConfig {
        master_seed: 42,
        entries: named_suite("default", 2000).unwrap(),
    })
    .unwrap();
    assert_eq!(report.rows.len(), 14);
    let adv = |scheme: &str, adversary: &str| {
        report
            .rows
            .iter()
            .find(|r| r.scheme == scheme && r.adversary == adversary)
            .unwrap()
            .estimate
            .advantage
    };
    assert!(adv("ecb-2", "ecb-equality") >= 0.99);
    assert!(adv("feistel-1", "feistel-structure") >= 0.99);
    assert!(adv("feistel-4", "feistel-structure") <= 0.05);
    assert!(adv("zero-pad-16-32", "suffix-zero") >= 0.95);
    assert!(adv("rsa-16-17", "factoring") >= 0.99);
    assert!(adv("dh-65537-3", "dlog") >= 0.97);
    assert!(adv("stream-reuse-8", "keystream-xor") >= 0.9);
}
