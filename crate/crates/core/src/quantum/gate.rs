use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::state::StateVector;
use super::{c, Amplitude, STRUCTURE_TOL};
use crate::error::{Error, Result};

/// Unitary acting on one or two qubits, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    arity: usize,
    matrix: Vec<Amplitude>,
}

impl Gate {
    /// Validated constructor: `matrix` must be `2^arity × 2^arity` and unitary.
    pub fn new(arity: usize, matrix: Vec<Amplitude>) -> Result<Self> {
        if !(1..=2).contains(&arity) {
            return Err(Error::Parameter(format!(
                "gate arity must be 1 or 2, got {arity}"
            )));
        }
        let d = 1 << arity;
        if matrix.len() != d * d {
            return Err(Error::Dimension {
                expected: d * d,
                actual: matrix.len(),
            });
        }
        let gate = Self { arity, matrix };
        let deviation = gate.unitarity_deviation();
        if deviation.is_nan() || deviation > STRUCTURE_TOL {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(gate)
    }

    fn one(m: [Amplitude; 4]) -> Self {
        Self {
            arity: 1,
            matrix: m.to_vec(),
        }
    }

    pub fn identity() -> Self {
        Self::one([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
    }

    /// Bit flip.
    pub fn x() -> Self {
        Self::one([c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
    }

    /// `-i|0⟩⟨1| + i|1⟩⟨0|`.
    pub fn y() -> Self {
        Self::one([c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    /// Phase flip.
    pub fn z() -> Self {
        Self::one([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
    }

    /// Phase shift `R_φ|1⟩ = e^{iφ}|1⟩`.
    pub fn phase(phi: f64) -> Self {
        Self::one([
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            Amplitude::from_polar(1.0, phi),
        ])
    }

    /// `R_{π/4}`.
    pub fn t() -> Self {
        Self::phase(core::f64::consts::FRAC_PI_4)
    }

    pub fn h() -> Self {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        Self::one([c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)])
    }

    /// Controlled NOT; the first target is the control.
    pub fn cnot() -> Self {
        let (o, l) = (c(0.0, 0.0), c(1.0, 0.0));
        Self {
            arity: 2,
            matrix: vec![l, o, o, o, o, l, o, o, o, o, o, l, o, o, l, o],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        1 << self.arity
    }

    pub fn matrix(&self) -> &[Amplitude] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.matrix[row * self.dim() + col]
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Gate) -> Result<Gate> {
        if self.arity != other.arity {
            return Err(Error::Dimension {
                expected: self.arity,
                actual: other.arity,
            });
        }
        let d = self.dim();
        let mut m = vec![c(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                m[i * d + j] = (0..d).map(|k| self.entry(i, k) * other.entry(k, j)).sum();
            }
        }
        Ok(Gate {
            arity: self.arity,
            matrix: m,
        })
    }

    /// Largest entrywise deviation of `U·U†` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let v: Amplitude = (0..d)
                    .map(|k| self.entry(i, k) * self.entry(j, k).conj())
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).norm());
            }
        }
        worst
    }

    /// Largest entrywise distance to `other`.
    pub fn distance(&self, other: &Gate) -> f64 {
        self.matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| (a - b).norm())
            .fold(
                if self.arity == other.arity {
                    0.0
                } else {
                    f64::INFINITY
                },
                f64::max,
            )
    }
}

/// Applies `gate` to `targets` and returns the new state.
pub fn apply_gate(state: &StateVector, gate: &Gate, targets: &[usize]) -> Result<StateVector> {
    if targets.len() != gate.arity {
        return Err(Error::Index(format!(
            "gate of arity {} given {} targets",
            gate.arity,
            targets.len()
        )));
    }
    state.check_distinct(targets)?;
    let mut amps = state.amplitudes().to_vec();
    match *targets {
        [t] => {
            let mask = state.mask(t);
            let [m00, m01, m10, m11] = [
                gate.matrix[0],
                gate.matrix[1],
                gate.matrix[2],
                gate.matrix[3],
            ];
            for i in (0..amps.len()).filter(|i| i & mask == 0) {
                let j = i | mask;
                let (a0, a1) = (amps[i], amps[j]);
                amps[i] = m00 * a0 + m01 * a1;
                amps[j] = m10 * a0 + m11 * a1;
            }
        }
        [ta, tb] => {
            let (ma, mb) = (state.mask(ta), state.mask(tb));
            for i in (0..amps.len()).filter(|i| i & (ma | mb) == 0) {
                let idx = [i, i | mb, i | ma, i | ma | mb];
                let local = idx.map(|k| amps[k]);
                for (row, &k) in idx.iter().enumerate() {
                    amps[k] = (0..4)
                        .map(|col| gate.matrix[row * 4 + col] * local[col])
                        .sum();
                }
            }
        }
        _ => unreachable!("arity is 1 or 2"),
    }
    Ok(StateVector::from_parts_unchecked(state.n_qubits(), amps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::fidelity;
    use crate::seed::rng_from_seed;
    use proptest::prelude::*;

    fn builtins() -> Vec<Gate> {
        vec![
            Gate::identity(),
            Gate::x(),
            Gate::y(),
            Gate::z(),
            Gate::phase(0.7),
            Gate::t(),
            Gate::h(),
            Gate::cnot(),
        ]
    }

    #[test]
    fn builtin_gates_are_unitary() {
        for g in builtins() {
            assert!(g.unitarity_deviation() <= 1e-9, "{g:?}");
        }
    }

    #[test]
    fn gate_identities() {
        let hh = Gate::h().compose(&Gate::h()).unwrap();
        assert!(hh.distance(&Gate::identity()) <= 1e-9);
        let xx = Gate::x().compose(&Gate::x()).unwrap();
        assert!(xx.distance(&Gate::identity()) <= 1e-9);
        assert!(Gate::z().distance(&Gate::phase(core::f64::consts::PI)) <= 1e-9);
        assert!(Gate::t().distance(&Gate::phase(core::f64::consts::FRAC_PI_4)) <= 1e-9);
    }

    #[test]
    fn new_rejects_non_unitary() {
        let m = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert!(matches!(Gate::new(1, m), Err(Error::NotUnitary { .. })));
        assert!(Gate::new(3, vec![c(1.0, 0.0); 64]).is_err());
        assert!(Gate::new(1, vec![c(1.0, 0.0); 3]).is_err());
        assert!(Gate::new(1, Gate::h().matrix().to_vec()).is_ok());
    }

    #[test]
    fn hadamard_examples() {
        let plus = apply_gate(&StateVector::ket0(), &Gate::h(), &[0]).unwrap();
        assert!((fidelity(&plus, &StateVector::plus()).unwrap() - 1.0).abs() < 1e-12);
        let back = apply_gate(&StateVector::plus(), &Gate::h(), &[0]).unwrap();
        assert!((back.amplitude(0).re - 1.0).abs() < 1e-12);
        assert!(back.amplitude(1).norm() < 1e-12);
        let minus = apply_gate(&StateVector::ket1(), &Gate::h(), &[0]).unwrap();
        assert!((fidelity(&minus, &StateVector::minus()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cnot_follows_matrix() {
        // |10⟩ -> |11⟩, control preserved.
        let s = StateVector::basis(2, 0b10).unwrap();
        let out = apply_gate(&s, &Gate::cnot(), &[0, 1]).unwrap();
        assert_eq!(out, StateVector::basis(2, 0b11).unwrap());
        let s = StateVector::basis(2, 0b01).unwrap();
        let out = apply_gate(&s, &Gate::cnot(), &[0, 1]).unwrap();
        assert_eq!(out, s);
        // Reversed roles: control qubit 1.
        let s = StateVector::basis(2, 0b01).unwrap();
        let out = apply_gate(&s, &Gate::cnot(), &[1, 0]).unwrap();
        assert_eq!(out, StateVector::basis(2, 0b11).unwrap());
    }

    #[test]
    fn gate_targets_on_wider_register() {
        // X on qubit 2 of |000⟩ gives |001⟩.
        let s = StateVector::zeros(3).unwrap();
        let out = apply_gate(&s, &Gate::x(), &[2]).unwrap();
        assert_eq!(out, StateVector::basis(3, 0b001).unwrap());
        let out = apply_gate(
            &StateVector::basis(3, 0b100).unwrap(),
            &Gate::cnot(),
            &[0, 2],
        )
        .unwrap();
        assert_eq!(out, StateVector::basis(3, 0b101).unwrap());
    }

    #[test]
    fn bad_targets() {
        let s = StateVector::zeros(2).unwrap();
        assert!(matches!(
            apply_gate(&s, &Gate::h(), &[2]),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            apply_gate(&s, &Gate::cnot(), &[1, 1]),
            Err(Error::Index(_))
        ));
        assert!(matches!(
            apply_gate(&s, &Gate::cnot(), &[0]),
            Err(Error::Index(_))
        ));
    }

    #[test]
    fn input_is_not_modified() {
        let s = StateVector::ket0();
        let _ = apply_gate(&s, &Gate::x(), &[0]).unwrap();
        assert_eq!(s, StateVector::ket0());
    }

    #[test]
    fn norm_preserved_over_many_random_states() {
        let mut rng = rng_from_seed(11);
        for i in 0..1000 {
            let n = 1 + i % 4;
            let s = StateVector::random(n, &mut rng).unwrap();
            for g in builtins() {
                let targets: Vec<usize> = if g.arity() == 1 {
                    vec![i % n]
                } else if n >= 2 {
                    vec![i % n, (i + 1) % n]
                } else {
                    continue;
                };
                let out = apply_gate(&s, &g, &targets).unwrap();
                assert!((out.norm_sq() - 1.0).abs() <= 1e-9);
            }
        }
    }

    proptest! {
        #[test]
        fn phase_gate_is_unitary_and_norm_preserving(phi in -10.0f64..10.0, seed in any::<u64>()) {
            let g = Gate::phase(phi);
            prop_assert!(g.unitarity_deviation() <= 1e-9);
            let s = StateVector::random(2, &mut rng_from_seed(seed)).unwrap();
            let out = apply_gate(&s, &g, &[1]).unwrap();
            prop_assert!((out.norm_sq() - 1.0).abs() <= 1e-9);
        }
    }
}
