use alloc::vec::Vec;

use rand::Rng;

use super::state::{scatter, StateVector};
use super::{c, Amplitude, MeasurementBasis};
use crate::error::{Error, Result};

/// The four Bell states with their two-bit measurement encoding.
///
/// | state | amplitudes | bits |
/// |---|---|---|
/// | `PhiPlus` | (\|00⟩ + \|11⟩)/√2 | 00 |
/// | `PhiMinus` | (\|00⟩ − \|11⟩)/√2 | 01 |
/// | `PsiPlus` | (\|01⟩ + \|10⟩)/√2 | 10 |
/// | `PsiMinus` | (\|01⟩ − \|10⟩)/√2 | 11 |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    /// In encoding order `00, 01, 10, 11`.
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    /// Two-bit encoding as an integer in `0..4`.
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_code(code: u8) -> Option<Self> {
        Self::ALL.get(code as usize).copied()
    }

    /// Encoding as `[first bit, second bit]`.
    pub fn bits(self) -> [bool; 2] {
        let k = self.code();
        [k & 0b10 != 0, k & 0b01 != 0]
    }

    pub fn from_bits(bits: [bool; 2]) -> Self {
        Self::ALL[(bits[0] as usize) << 1 | bits[1] as usize]
    }

    /// Encoding rendered as `"00"`..`"11"`.
    pub fn label(self) -> &'static str {
        ["00", "01", "10", "11"][self.code() as usize]
    }

    pub fn amplitudes(self) -> [Amplitude; 4] {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let (o, p, m) = (c(0.0, 0.0), c(h, 0.0), c(-h, 0.0));
        match self {
            BellState::PhiPlus => [p, o, o, p],
            BellState::PhiMinus => [p, o, o, m],
            BellState::PsiPlus => [o, p, p, o],
            BellState::PsiMinus => [o, p, m, o],
        }
    }
}

/// Unnormalized projection of `qubits` onto `local` (a `2^m` vector).
fn project(state: &StateVector, qubits: &[usize], local: &[Amplitude]) -> (f64, Vec<Amplitude>) {
    let mut amps = state.amplitudes().to_vec();
    let mask: usize = qubits.iter().map(|&q| state.mask(q)).fold(0, |a, b| a | b);
    let idx: Vec<usize> = (0..local.len())
        .map(|k| scatter(state, qubits, k))
        .collect();
    let mut prob = 0.0;
    for base in (0..amps.len()).filter(|i| i & mask == 0) {
        let overlap: Amplitude = idx
            .iter()
            .zip(local)
            .map(|(&off, e)| e.conj() * amps[base | off])
            .sum();
        prob += overlap.norm_sqr();
        for (&off, e) in idx.iter().zip(local) {
            amps[base | off] = e * overlap;
        }
    }
    (prob, amps)
}

fn renormalize(state: &StateVector, prob: f64, mut amps: Vec<Amplitude>) -> Result<StateVector> {
    if prob.is_nan() || prob <= 0.0 {
        return Err(Error::Numerical(
            "collapse onto a zero-probability outcome".into(),
        ));
    }
    let norm = libm::sqrt(prob);
    for a in &mut amps {
        *a /= norm;
    }
    Ok(StateVector::from_parts_unchecked(state.n_qubits(), amps))
}

/// Born probabilities of outcomes 0 and 1 when `target` is measured in `basis`.
pub fn outcome_probabilities(
    state: &StateVector,
    basis: MeasurementBasis,
    target: usize,
) -> Result<[f64; 2]> {
    state.check_qubit(target)?;
    Ok([false, true].map(|bit| project(state, &[target], &basis.vector(bit)).0))
}

/// Post-measurement state for a given single-qubit outcome, with its probability.
pub fn collapse(
    state: &StateVector,
    basis: MeasurementBasis,
    target: usize,
    bit: bool,
) -> Result<(f64, StateVector)> {
    state.check_qubit(target)?;
    let (p, amps) = project(state, &[target], &basis.vector(bit));
    Ok((p, renormalize(state, p, amps)?))
}

/// Projective measurement of `target` in `basis`; returns the bit and the
/// collapsed state.
pub fn measure<R: Rng + ?Sized>(
    state: &StateVector,
    basis: MeasurementBasis,
    target: usize,
    rng: &mut R,
) -> Result<(bool, StateVector)> {
    state.check_qubit(target)?;
    let (p0, amps0) = project(state, &[target], &basis.vector(false));
    let r: f64 = rng.gen();
    if r < p0 {
        return Ok((false, renormalize(state, p0, amps0)?));
    }
    let (p1, amps1) = project(state, &[target], &basis.vector(true));
    if p1 > 0.0 {
        Ok((true, renormalize(state, p1, amps1)?))
    } else {
        // r landed in the rounding gap above p0 ≈ 1.
        Ok((false, renormalize(state, p0, amps0)?))
    }
}

/// Probabilities of the four Bell outcomes on `pair`, in encoding order.
pub fn bell_probabilities(state: &StateVector, pair: (usize, usize)) -> Result<[f64; 4]> {
    state.check_distinct(&[pair.0, pair.1])?;
    Ok(BellState::ALL.map(|b| project(state, &[pair.0, pair.1], &b.amplitudes()).0))
}

/// Post-measurement state for a given Bell outcome, with its probability.
pub fn collapse_bell(
    state: &StateVector,
    pair: (usize, usize),
    which: BellState,
) -> Result<(f64, StateVector)> {
    state.check_distinct(&[pair.0, pair.1])?;
    let (p, amps) = project(state, &[pair.0, pair.1], &which.amplitudes());
    Ok((p, renormalize(state, p, amps)?))
}

/// Bell-basis measurement of `pair`; returns the outcome and the collapsed
/// full state.
pub fn bell_measure<R: Rng + ?Sized>(
    state: &StateVector,
    pair: (usize, usize),
    rng: &mut R,
) -> Result<(BellState, StateVector)> {
    let probs = bell_probabilities(state, pair)?;
    let r: f64 = rng.gen();
    let mut acc = 0.0;
    let mut chosen = None;
    for (b, p) in BellState::ALL.into_iter().zip(probs) {
        if p <= 0.0 {
            continue;
        }
        chosen = Some(b);
        acc += p;
        if r < acc {
            break;
        }
    }
    let which =
        chosen.ok_or_else(|| Error::Numerical("all Bell outcomes have zero probability".into()))?;
    let (_, collapsed) = collapse_bell(state, pair, which)?;
    Ok((which, collapsed))
}
