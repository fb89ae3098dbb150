//! One-qubit teleportation over a shared `Φ⁺` pair.
//!
//! Register layout: qubit 0 holds the input `|ψ⟩`, qubit 1 is Alice's half of
//! the pair and qubit 2 is Bob's half. Alice Bell-measures qubits (0, 1),
//! sends the two-bit encoding, and Bob applies the matching Pauli correction.

use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::quantum::{
    apply_gate, bell_measure, collapse_bell, fidelity, project_out, tensor, BellState, Gate,
    StateVector,
};

const PAIR: (usize, usize) = (0, 1);

/// Result of one teleportation.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportOutcome {
    /// Bell outcome observed by Alice; its encoding is the two classical bits.
    pub measured: BellState,
    /// Bob's qubit before correction.
    pub pre_correction_state: StateVector,
    /// Bob's qubit after correction; equals the input up to global phase.
    pub corrected_state: StateVector,
    /// Full three-qubit state right after Alice's measurement.
    pub collapsed_register: StateVector,
}

impl TeleportOutcome {
    pub fn classical_bits(&self) -> [bool; 2] {
        self.measured.bits()
    }
}

/// One of the four measurement branches with its Born probability.
#[derive(Debug, Clone, PartialEq)]
pub struct TeleportBranch {
    pub probability: f64,
    pub outcome: TeleportOutcome,
}

/// Bob's correction for Alice's two bits: `00→I`, `01→Z`, `10→X`, `11→Y`.
///
/// `Y` restores the input only up to the global phase `−i`.
pub fn correction_gate(bits: [bool; 2]) -> Gate {
    match bits {
        [false, false] => Gate::identity(),
        [false, true] => Gate::z(),
        [true, false] => Gate::x(),
        [true, true] => Gate::y(),
    }
}

fn prepare(psi: &StateVector) -> Result<StateVector> {
    if psi.n_qubits() != 1 {
        return Err(Error::Dimension {
            expected: 1,
            actual: psi.n_qubits(),
        });
    }
    tensor(psi, &StateVector::bell(BellState::PhiPlus))
}

fn finish(measured: BellState, collapsed: StateVector) -> Result<TeleportOutcome> {
    let bob = project_out(&collapsed, &[PAIR.0, PAIR.1], &StateVector::bell(measured))?;
    let corrected = apply_gate(&bob, &correction_gate(measured.bits()), &[0])?;
    Ok(TeleportOutcome {
        measured,
        pre_correction_state: bob,
        corrected_state: corrected,
        collapsed_register: collapsed,
    })
}

/// Teleports `psi` from Alice to Bob, sampling Alice's Bell outcome.
pub fn teleport<R: Rng + ?Sized>(psi: &StateVector, rng: &mut R) -> Result<TeleportOutcome> {
    let register = prepare(psi)?;
    let (measured, collapsed) = bell_measure(&register, PAIR, rng)?;
    finish(measured, collapsed)
}

/// Every Bell outcome of a teleportation of `psi` with its exact probability.
pub fn teleport_branches(psi: &StateVector) -> Result<Vec<TeleportBranch>> {
    let register = prepare(psi)?;
    BellState::ALL
        .iter()
        .map(|&b| {
            let (probability, collapsed) = collapse_bell(&register, PAIR, b)?;
            Ok(TeleportBranch {
                probability,
                outcome: finish(b, collapsed)?,
            })
        })
        .collect()
}

/// Fidelity between the teleported qubit and the input.
pub fn teleport_fidelity(psi: &StateVector, outcome: &TeleportOutcome) -> Result<f64> {
    fidelity(&outcome.corrected_state, psi)
}
