use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::measure::BellState;
use super::{c, is_finite, Amplitude, MeasurementBasis, MAX_QUBITS, STRUCTURE_TOL};
use crate::error::{Error, Result};

/// Normalized pure state of `n` qubits, `2^n` amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    /// Builds a state from raw amplitudes, checking length, finiteness and
    /// normalization.
    pub fn from_amplitudes(n_qubits: usize, amps: Vec<Amplitude>) -> Result<Self> {
        check_register(n_qubits)?;
        if amps.len() != 1 << n_qubits {
            return Err(Error::Dimension {
                expected: 1 << n_qubits,
                actual: amps.len(),
            });
        }
        if !amps.iter().all(is_finite) {
            return Err(Error::Numerical("non-finite amplitude".into()));
        }
        let norm_sq = norm_sq(&amps);
        if (norm_sq - 1.0).abs() > STRUCTURE_TOL {
            return Err(Error::Normalization { norm_sq });
        }
        Ok(Self { n_qubits, amps })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(n_qubits: usize, mut amps: Vec<Amplitude>) -> Result<Self> {
        let norm = libm::sqrt(norm_sq(&amps));
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Normalization {
                norm_sq: norm * norm,
            });
        }
        for a in &mut amps {
            *a /= norm;
        }
        Self::from_amplitudes(n_qubits, amps)
    }

    pub(crate) fn from_parts_unchecked(n_qubits: usize, amps: Vec<Amplitude>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n_qubits);
        Self { n_qubits, amps }
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_register(n_qubits)?;
        if index >= 1 << n_qubits {
            return Err(Error::Index(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![c(0.0, 0.0); 1 << n_qubits];
        amps[index] = c(1.0, 0.0);
        Ok(Self { n_qubits, amps })
    }

    /// `|0…0⟩`.
    pub fn zeros(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    pub fn ket0() -> Self {
        Self::from_parts_unchecked(1, vec![c(1.0, 0.0), c(0.0, 0.0)])
    }

    pub fn ket1() -> Self {
        Self::from_parts_unchecked(1, vec![c(0.0, 0.0), c(1.0, 0.0)])
    }

    pub fn plus() -> Self {
        Self::from_parts_unchecked(1, MeasurementBasis::X.vector(false).to_vec())
    }

    pub fn minus() -> Self {
        Self::from_parts_unchecked(1, MeasurementBasis::X.vector(true).to_vec())
    }

    pub fn bell(which: BellState) -> Self {
        Self::from_parts_unchecked(2, which.amplitudes().to_vec())
    }

    /// Haar-random state drawn from normalized complex Gaussians.
    pub fn random<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> Result<Self> {
        check_register(n_qubits)?;
        let amps: Vec<Amplitude> = (0..1usize << n_qubits)
            .map(|_| {
                let (a, b) = gaussian_pair(rng);
                c(a, b)
            })
            .collect();
        Self::normalized(n_qubits, amps)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq(&self.amps)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Amplitude> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::Dimension {
                expected: self.n_qubits,
                actual: other.n_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Multiplies every amplitude by `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let phase = Amplitude::from_polar(1.0, phi);
        Self {
            n_qubits: self.n_qubits,
            amps: self.amps.iter().map(|a| a * phase).collect(),
        }
    }

    /// Bit mask of `qubit` inside a basis index.
    pub(crate) fn mask(&self, qubit: usize) -> usize {
        1 << (self.n_qubits - 1 - qubit)
    }

    pub(crate) fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits {
            return Err(Error::Index(format!(
                "qubit {qubit} out of range for a {}-qubit register",
                self.n_qubits
            )));
        }
        Ok(())
    }

    pub(crate) fn check_distinct(&self, qubits: &[usize]) -> Result<()> {
        for (i, &q) in qubits.iter().enumerate() {
            self.check_qubit(q)?;
            if qubits[..i].contains(&q) {
                return Err(Error::Index(format!("qubit {q} listed twice")));
            }
        }
        Ok(())
    }
}

fn check_register(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::Parameter(format!(
            "register size must be in 1..={MAX_QUBITS}, got {n_qubits}"
        )));
    }
    Ok(())
}

pub(crate) fn norm_sq(amps: &[Amplitude]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

pub(crate) fn gaussian_pair<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    // Box-Muller; 1 - u keeps the logarithm finite.
    let u: f64 = 1.0 - rng.gen::<f64>();
    let v: f64 = rng.gen::<f64>();
    let r = libm::sqrt(-2.0 * libm::log(u));
    let theta = 2.0 * core::f64::consts::PI * v;
    (r * libm::cos(theta), r * libm::sin(theta))
}

/// One-qubit state `α|0⟩ + β|1⟩`.
pub fn make_qubit(alpha: Amplitude, beta: Amplitude) -> Result<StateVector> {
    StateVector::from_amplitudes(1, vec![alpha, beta])
}

/// `a ⊗ b`, with `a` occupying the leading qubits.
pub fn tensor(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    let n = a.n_qubits + b.n_qubits;
    check_register(n)?;
    let mut amps = Vec::with_capacity(1 << n);
    for x in &a.amps {
        for y in &b.amps {
            amps.push(x * y);
        }
    }
    Ok(StateVector::from_parts_unchecked(n, amps))
}

/// `|⟨a|b⟩|²`; insensitive to global phase.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(a.inner(b)?.norm_sqr().min(1.0))
}

/// Contracts `qubits` of `state` against `onto` and returns the normalized
/// state of the remaining qubits, in their original order.
///
/// After a projective measurement leaves `qubits` in `onto`, this is the
/// post-measurement state of the rest of the register.
pub fn project_out(
    state: &StateVector,
    qubits: &[usize],
    onto: &StateVector,
) -> Result<StateVector> {
    state.check_distinct(qubits)?;
    if onto.n_qubits != qubits.len() {
        return Err(Error::Dimension {
            expected: qubits.len(),
            actual: onto.n_qubits,
        });
    }
    let rest: Vec<usize> = (0..state.n_qubits)
        .filter(|q| !qubits.contains(q))
        .collect();
    if rest.is_empty() {
        return Err(Error::Parameter("no qubits left after projection".into()));
    }
    let mut out = vec![c(0.0, 0.0); 1 << rest.len()];
    for (r, slot) in out.iter_mut().enumerate() {
        let base = scatter(state, &rest, r);
        *slot = (0..onto.dim())
            .map(|k| onto.amps[k].conj() * state.amps[base | scatter(state, qubits, k)])
            .sum();
    }
    StateVector::normalized(rest.len(), out)
        .map_err(|_| Error::Numerical("projection onto a state with zero overlap".into()))
}

/// Spreads the bits of `local` (MSB first) onto the positions of `qubits`.
pub(crate) fn scatter(state: &StateVector, qubits: &[usize], local: usize) -> usize {
    let m = qubits.len();
    qubits.iter().enumerate().fold(0, |acc, (i, &q)| {
        if local >> (m - 1 - i) & 1 == 1 {
            acc | state.mask(q)
        } else {
            acc
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;

    fn close(a: Amplitude, b: Amplitude) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn make_qubit_examples() {
        let zero = make_qubit(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(zero, StateVector::ket0());
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let plus = make_qubit(c(h, 0.0), c(h, 0.0)).unwrap();
        assert!((fidelity(&plus, &StateVector::plus()).unwrap() - 1.0).abs() < 1e-12);
        let q = make_qubit(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        assert!((q.amplitude(0).norm_sqr() - 0.36).abs() < 1e-12);
        assert!((q.amplitude(1).norm_sqr() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn make_qubit_rejects_unnormalized() {
        assert!(matches!(
            make_qubit(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::Normalization { .. })
        ));
        assert!(make_qubit(c(f64::NAN, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn tensor_examples() {
        let s = tensor(&StateVector::ket0(), &StateVector::ket0()).unwrap();
        assert_eq!(s, StateVector::basis(2, 0).unwrap());

        // |+⟩ ⊗ |1⟩ = (|01⟩ + |11⟩)/√2
        let s = tensor(&StateVector::plus(), &StateVector::ket1()).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let expected = [c(0.0, 0.0), c(h, 0.0), c(0.0, 0.0), c(h, 0.0)];
        for (a, b) in s.amplitudes().iter().zip(expected) {
            assert!(close(*a, b));
        }
    }

    #[test]
    fn tensor_with_bell_pair_matches_hand_expansion() {
        // |ψ⟩ ⊗ |Ψ₂⁺⟩ = ½(α|000⟩ + α|011⟩ + β|100⟩ + β|111⟩)
        let (alpha, beta) = (c(0.6, 0.0), c(0.0, 0.8));
        let psi = make_qubit(alpha, beta).unwrap();
        let s = tensor(&psi, &StateVector::bell(BellState::PhiPlus)).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let mut expected = [c(0.0, 0.0); 8];
        expected[0b000] = alpha * h;
        expected[0b011] = alpha * h;
        expected[0b100] = beta * h;
        expected[0b111] = beta * h;
        for (a, b) in s.amplitudes().iter().zip(expected) {
            assert!(close(*a, b));
        }
    }

    #[test]
    fn fidelity_examples() {
        let mut rng = rng_from_seed(3);
        let psi = StateVector::random(1, &mut rng).unwrap();
        assert!((fidelity(&psi, &psi).unwrap() - 1.0).abs() < 1e-12);
        assert!((fidelity(&psi, &psi.with_global_phase(1.234)).unwrap() - 1.0).abs() < 1e-12);
        let f = fidelity(&StateVector::ket0(), &StateVector::plus()).unwrap();
        assert!((f - 0.5).abs() < 1e-12);
        assert!(matches!(
            fidelity(&StateVector::ket0(), &StateVector::zeros(2).unwrap()),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn project_out_recovers_factor() {
        let psi = make_qubit(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let s = tensor(&StateVector::plus(), &psi).unwrap();
        let rest = project_out(&s, &[0], &StateVector::plus()).unwrap();
        assert!((fidelity(&rest, &psi).unwrap() - 1.0).abs() < 1e-12);
        assert!(project_out(&s, &[0], &StateVector::minus()).is_err());
        assert!(project_out(&s, &[0, 0], &StateVector::zeros(2).unwrap()).is_err());
    }

    #[test]
    fn register_bounds() {
        assert!(StateVector::zeros(0).is_err());
        assert!(StateVector::zeros(MAX_QUBITS + 1).is_err());
        assert!(StateVector::basis(2, 4).is_err());
    }
}
