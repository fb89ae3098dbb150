use proptest::prelude::*;
use qkdlab_core::classical::{
    check_perfect_secrecy, dh_keygen, dh_shared, ecb_dec, ecb_enc, mod_exp, rsa_dec, rsa_enc,
    rsa_from_primes, stream_dec, stream_enc, BitString, CounterPrg, DhGroup, FeistelCipher, Otp,
    PolyUhf, ShannonCipher,
};
use qkdlab_core::seed::rng_from_seed;
use rand::Rng;

#[test]
fn otp_secrecy_report() {
    for len in 1..=3 {
        let otp = Otp::new(len).unwrap();
        let report = check_perfect_secrecy(&otp).unwrap();
        assert!(report.is_perfect && report.uniform_prob && report.unique_key);
        assert!(report.key_space_size >= report.message_space_size);
    }
}

#[test]
fn rsa_textbook_roundtrip_over_whole_ring() {
    let kp = rsa_from_primes(61, 53, 17).unwrap();
    assert_eq!(kp.sk.d, 2753);
    for x in 0..kp.pk.n {
        assert_eq!(rsa_dec(&kp.sk, rsa_enc(&kp.pk, x).unwrap()).unwrap(), x);
    }
}

#[test]
fn uhf_bound_exhaustive() {
    let uhf = PolyUhf::new(251, 3).unwrap();
    let mut rng = rng_from_seed(300);
    for _ in 0..100 {
        let m1: Vec<u64> = (0..3).map(|_| rng.gen_range(0..251)).collect();
        let m2 = loop {
            let m: Vec<u64> = (0..3).map(|_| rng.gen_range(0..251)).collect();
            if m != m1 {
                break m;
            }
        };
        let count = uhf.collision_count(&m1, &m2).unwrap();
        assert!(count <= 2);
        assert!(count as f64 / 250.0 <= uhf.epsilon());
    }
}

#[test]
fn dh_agreement() {
    let small = DhGroup::new(23, 5).unwrap();
    assert_eq!(dh_shared(&small, 4, 10).unwrap(), 18);
    assert_eq!(dh_shared(&small, 3, 4).unwrap(), 18);
    let group = DhGroup::new(2_147_483_647, 7).unwrap();
    let mut rng = rng_from_seed(301);
    for _ in 0..1000 {
        let (a, u) = dh_keygen(&group, &mut rng);
        let (b, v) = dh_keygen(&group, &mut rng);
        assert_eq!(
            dh_shared(&group, a, v).unwrap(),
            dh_shared(&group, b, u).unwrap()
        );
    }
}

proptest! {
    #[test]
    fn feistel_roundtrip(rounds in 1usize..=8, key in any::<u16>(), block in any::<u16>()) {
        let cipher = FeistelCipher::new(rounds).unwrap();
        prop_assert_eq!(cipher.decrypt(key, cipher.encrypt(key, block)), block);
    }

    #[test]
    fn ecb_roundtrip(key in any::<u16>(), blocks in proptest::collection::vec(any::<u16>(), 1..16)) {
        let cipher = FeistelCipher::toy();
        let c = ecb_enc(&cipher, key, &blocks).unwrap();
        prop_assert_eq!(ecb_dec(&cipher, key, &c).unwrap(), blocks);
    }

    #[test]
    fn stream_roundtrip(seed in any::<u16>(), msg in proptest::collection::vec(any::<bool>(), 0..64)) {
        let prg = CounterPrg::new(64).unwrap();
        let seed = BitString::from_u64(seed as u64, 16);
        let m = BitString::new(msg);
        let c = stream_enc(&prg, &seed, &m).unwrap();
        prop_assert_eq!(stream_dec(&prg, &seed, &c).unwrap(), m);
    }

    #[test]
    fn otp_roundtrip(len in 1usize..=32, k in any::<u64>(), m in any::<u64>()) {
        let otp = Otp::new(len).unwrap();
        let mask = if len == 64 { u64::MAX } else { (1 << len) - 1 };
        let key = otp.key_at(k & mask);
        let msg = otp.message_at(m & mask);
        let c = otp.enc(&key, &msg).unwrap();
        prop_assert_eq!(otp.dec(&key, &c), Some(msg));
    }

    #[test]
    fn mod_exp_multiplicative(b in 0u64..1 << 32, e1 in 0u64..1000, e2 in 0u64..1000, m in 2u64..1 << 32) {
        let lhs = mod_exp(b, e1 + e2, m).unwrap();
        let rhs = (mod_exp(b, e1, m).unwrap() as u128 * mod_exp(b, e2, m).unwrap() as u128 % m as u128) as u64;
        prop_assert_eq!(lhs, rhs);
    }
}
