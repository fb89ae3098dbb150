//! Exact complex statevector simulation for small registers.
//!
//! Qubit 0 is the most significant bit of a basis index, so `|q0 q1 .. qn-1⟩`
//! reads left to right like ket notation. Entropies are in nats.

mod density;
mod eigen;
mod entropy;
mod gate;
mod measure;
mod state;

pub use density::{density_of, is_pure, reduced_density, DensityMatrix, Ensemble};
pub use entropy::{
    holevo_chi, measurement_mutual_information, nats_to_bits, relative_entropy,
    von_neumann_entropy, Measurement,
};
pub use gate::{apply_gate, Gate};
pub use measure::{
    bell_measure, bell_probabilities, collapse, collapse_bell, measure, outcome_probabilities,
    BellState,
};
pub use state::{fidelity, make_qubit, project_out, tensor, StateVector};

use num_complex::Complex64;

/// A complex amplitude.
pub type Amplitude = Complex64;

/// Tolerance for structural invariants (norm, trace, unitarity, hermiticity).
pub const STRUCTURE_TOL: f64 = 1e-9;

/// Eigenvalues below `-NEGATIVE_EIGEN_TOL` are a numerical failure; above it
/// they are clipped to zero.
pub const NEGATIVE_EIGEN_TOL: f64 = 1e-6;

/// Largest register the simulator accepts.
pub const MAX_QUBITS: usize = 12;

/// Single-qubit measurement basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasurementBasis {
    /// Computational basis `{|0⟩, |1⟩}`.
    Z,
    /// Hadamard basis `{|+⟩, |−⟩}`.
    X,
}

impl MeasurementBasis {
    pub const ALL: [MeasurementBasis; 2] = [MeasurementBasis::Z, MeasurementBasis::X];

    /// Basis vector for outcome `bit` as `(⟨0|v⟩, ⟨1|v⟩)`.
    pub fn vector(self, bit: bool) -> [Amplitude; 2] {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        match (self, bit) {
            (MeasurementBasis::Z, false) => [c(1.0, 0.0), c(0.0, 0.0)],
            (MeasurementBasis::Z, true) => [c(0.0, 0.0), c(1.0, 0.0)],
            (MeasurementBasis::X, false) => [c(h, 0.0), c(h, 0.0)],
            (MeasurementBasis::X, true) => [c(h, 0.0), c(-h, 0.0)],
        }
    }

    pub fn symbol(self) -> char {
        match self {
            MeasurementBasis::Z => 'Z',
            MeasurementBasis::X => 'X',
        }
    }
}

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Amplitude {
    Amplitude::new(re, im)
}

#[inline]
pub(crate) fn is_finite(a: &Amplitude) -> bool {
    a.re.is_finite() && a.im.is_finite()
}
