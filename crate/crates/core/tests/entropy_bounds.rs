use proptest::prelude::*;
use qkdlab_core::quantum::{
    density_of, holevo_chi, measurement_mutual_information, reduced_density, relative_entropy,
    von_neumann_entropy, BellState, DensityMatrix, Ensemble, Measurement, MeasurementBasis,
    StateVector,
};
use qkdlab_core::seed::rng_from_seed;
use rand::Rng;

fn random_mixed(dim_qubits: usize, rng: &mut impl Rng) -> DensityMatrix {
    let count = (1 << dim_qubits) + 1;
    let weights: Vec<f64> = (0..count).map(|_| rng.gen::<f64>() + 0.01).collect();
    let total: f64 = weights.iter().sum();
    let states: Vec<DensityMatrix> = (0..count)
        .map(|_| density_of(&StateVector::random(dim_qubits, rng).unwrap()))
        .collect();
    let parts: Vec<(f64, &DensityMatrix)> =
        weights.iter().map(|w| w / total).zip(&states).collect();
    DensityMatrix::mixture(&parts).unwrap()
}

#[test]
fn holevo_bounds_accessible_information() {
    let mut rng = rng_from_seed(200);
    for _ in 0..200 {
        let p: f64 = rng.gen_range(0.05..0.95);
        let items = vec![
            (p, density_of(&StateVector::random(1, &mut rng).unwrap())),
            (
                1.0 - p,
                density_of(&StateVector::random(1, &mut rng).unwrap()),
            ),
        ];
        let ensemble = Ensemble::new(items).unwrap();
        let chi = holevo_chi(&ensemble).unwrap();
        for basis in MeasurementBasis::ALL {
            let info =
                measurement_mutual_information(&ensemble, &Measurement::Basis(basis)).unwrap();
            assert!(info >= -1e-12);
            assert!(info <= chi + 1e-9, "I = {info}, χ = {chi}");
        }
    }
}

#[test]
fn entropy_range() {
    let mut rng = rng_from_seed(201);
    for n in 1..=3 {
        let dim = 1usize << n;
        for _ in 0..50 {
            let pure = density_of(&StateVector::random(n, &mut rng).unwrap());
            assert!(von_neumann_entropy(&pure).unwrap().abs() <= 1e-10);
            let mixed = random_mixed(n, &mut rng);
            let s = von_neumann_entropy(&mixed).unwrap();
            assert!(s >= 0.0);
            assert!(s <= (dim as f64).ln() + 1e-9);
        }
        let s = von_neumann_entropy(&DensityMatrix::maximally_mixed(dim).unwrap()).unwrap();
        assert!((s - (dim as f64).ln()).abs() < 1e-10);
    }
}

#[test]
fn bell_state_halves_are_maximally_mixed() {
    for which in BellState::ALL {
        let rho = reduced_density(&StateVector::bell(which), &[0]).unwrap();
        assert!((von_neumann_entropy(&rho).unwrap() - 2f64.ln()).abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn relative_entropy_is_nonnegative(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let a = random_mixed(2, &mut rng);
        let b = random_mixed(2, &mut rng);
        prop_assert!(relative_entropy(&a, &b).unwrap() >= -1e-9);
        prop_assert!(relative_entropy(&a, &a).unwrap().abs() < 1e-8);
    }

    #[test]
    fn mixing_never_lowers_entropy(seed in any::<u64>(), p in 0.0f64..1.0) {
        let mut rng = rng_from_seed(seed);
        let a = random_mixed(1, &mut rng);
        let b = random_mixed(1, &mut rng);
        let mix = DensityMatrix::mixture(&[(p, &a), (1.0 - p, &b)]).unwrap();
        let s_mix = von_neumann_entropy(&mix).unwrap();
        let s_avg = p * von_neumann_entropy(&a).unwrap() + (1.0 - p) * von_neumann_entropy(&b).unwrap();
        prop_assert!(s_mix >= s_avg - 1e-9);
    }
}
