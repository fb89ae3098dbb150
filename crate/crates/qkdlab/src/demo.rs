//! Built-in entropy demonstrations.

use qkdlab_core::quantum::{
    density_of, holevo_chi, measurement_mutual_information, reduced_density, von_neumann_entropy,
    BellState, Ensemble, Measurement, MeasurementBasis, StateVector,
};
use qkdlab_core::Result;
use serde::{Deserialize, Serialize};

use crate::records::fixed;

/// Entropies of a two-qubit pure state and its halves, in nats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BellRow {
    pub state: String,
    pub s_joint: f64,
    pub s_a: f64,
    pub s_b: f64,
    pub mutual_information: f64,
}

pub const BELL_HEADER: [&str; 5] = ["state", "s_joint", "s_a", "s_b", "mutual_information"];

impl BellRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.state.clone(),
            fixed(self.s_joint),
            fixed(self.s_a),
            fixed(self.s_b),
            fixed(self.mutual_information),
        ]
    }
}

fn bell_name(b: BellState) -> &'static str {
    match b {
        BellState::PhiPlus => "phi+",
        BellState::PhiMinus => "phi-",
        BellState::PsiPlus => "psi+",
        BellState::PsiMinus => "psi-",
    }
}

fn two_qubit_row(name: &str, state: &StateVector) -> Result<BellRow> {
    let s_joint = von_neumann_entropy(&density_of(state))?;
    let s_a = von_neumann_entropy(&reduced_density(state, &[0])?)?;
    let s_b = von_neumann_entropy(&reduced_density(state, &[1])?)?;
    Ok(BellRow {
        state: name.to_string(),
        s_joint,
        s_a,
        s_b,
        mutual_information: s_a + s_b - s_joint,
    })
}

/// The four Bell states and the product state `|00⟩` for contrast.
pub fn bell_demo() -> Result<Vec<BellRow>> {
    let mut rows = BellState::ALL
        .iter()
        .map(|&b| two_qubit_row(bell_name(b), &StateVector::bell(b)))
        .collect::<Result<Vec<_>>>()?;
    rows.push(two_qubit_row("product-00", &StateVector::zeros(2)?)?);
    Ok(rows)
}

/// Holevo information of an ensemble against the information one
/// measurement extracts, in nats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleRow {
    pub ensemble: String,
    pub measurement: String,
    pub chi: f64,
    pub mutual_information: f64,
    pub bound_holds: bool,
}

pub const ENSEMBLE_HEADER: [&str; 5] = [
    "ensemble",
    "measurement",
    "chi",
    "mutual_information",
    "bound_holds",
];

impl EnsembleRow {
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.ensemble.clone(),
            self.measurement.clone(),
            fixed(self.chi),
            fixed(self.mutual_information),
            self.bound_holds.to_string(),
        ]
    }
}

fn uniform(states: &[StateVector]) -> Result<Ensemble> {
    Ensemble::uniform(states.iter().map(density_of).collect())
}

/// Built-in ensembles measured in the Z and X product bases, and two-qubit
/// ones also in the Bell basis.
pub fn ensemble_demo() -> Result<Vec<EnsembleRow>> {
    let bell_states: Vec<StateVector> = BellState::ALL
        .iter()
        .map(|&b| StateVector::bell(b))
        .collect();
    let ensembles = [
        (
            "z-basis",
            uniform(&[StateVector::ket0(), StateVector::ket1()])?,
        ),
        (
            "zero-plus",
            uniform(&[StateVector::ket0(), StateVector::plus()])?,
        ),
        (
            "bb84",
            uniform(&[
                StateVector::ket0(),
                StateVector::ket1(),
                StateVector::plus(),
                StateVector::minus(),
            ])?,
        ),
        ("bell", uniform(&bell_states)?),
    ];
    let mut rows = Vec::new();
    for (name, ensemble) in &ensembles {
        let chi = holevo_chi(ensemble)?;
        let mut measurements = vec![
            ("Z", Measurement::Basis(MeasurementBasis::Z)),
            ("X", Measurement::Basis(MeasurementBasis::X)),
        ];
        if ensemble.dim() == 4 {
            measurements.push(("bell", Measurement::Bell));
        }
        for (label, m) in measurements {
            let info = measurement_mutual_information(ensemble, &m)?;
            rows.push(EnsembleRow {
                ensemble: name.to_string(),
                measurement: label.to_string(),
                chi,
                mutual_information: info,
                bound_holds: info <= chi + 1e-9,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn bell_rows() {
        let rows = bell_demo().unwrap();
        assert_eq!(rows.len(), 5);
        for r in &rows[..4] {
            assert!(r.s_joint.abs() < 1e-10);
            assert!((r.s_a - LN2).abs() < 1e-10 && (r.s_b - LN2).abs() < 1e-10);
            assert!((r.mutual_information - 2.0 * LN2).abs() < 1e-10);
        }
        assert!(rows[4].mutual_information.abs() < 1e-10);
    }

    #[test]
    fn ensemble_rows() {
        let rows = ensemble_demo().unwrap();
        assert!(rows.iter().all(|r| r.bound_holds));
        let find = |e: &str, m: &str| {
            rows.iter()
                .find(|r| r.ensemble == e && r.measurement == m)
                .unwrap()
        };
        assert!((find("z-basis", "Z").mutual_information - LN2).abs() < 1e-10);
        assert!(find("z-basis", "X").mutual_information.abs() < 1e-10);
        assert!((find("zero-plus", "Z").chi - 0.4164955306996875).abs() < 1e-10);
        assert!((find("zero-plus", "Z").mutual_information - 0.21576155433883565).abs() < 1e-10);
        assert!((find("bell", "bell").mutual_information - 2.0 * LN2).abs() < 1e-10);
        assert!((find("bell", "bell").chi - 2.0 * LN2).abs() < 1e-10);
    }
}
