use alloc::format;
use alloc::vec::Vec;

use super::density::{DensityMatrix, Ensemble};
use super::measure::BellState;
use super::state::StateVector;
use super::{c, Amplitude, MeasurementBasis, NEGATIVE_EIGEN_TOL, STRUCTURE_TOL};
use crate::error::{Error, Result};

/// Eigenvalues at or below this are treated as outside the support.
const SUPPORT_EPS: f64 = 1e-12;

fn shannon_of_spectrum(values: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in values {
        if l < -NEGATIVE_EIGEN_TOL {
            return Err(Error::Numerical(format!("eigenvalue {l:e} is negative")));
        }
        if l > 0.0 {
            s -= l * libm::log(l);
        }
    }
    Ok(s)
}

/// `S(ρ) = −tr(ρ ln ρ)` in nats.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    shannon_of_spectrum(&rho.eigenvalues())
}

/// `S(ρ₁‖ρ₂) = tr(ρ₁ ln ρ₁) − tr(ρ₁ ln ρ₂)` in nats.
///
/// Fails with [`Error::Support`] when `ρ₁` has weight outside the support of
/// `ρ₂`, where the quantity diverges.
pub fn relative_entropy(r1: &DensityMatrix, r2: &DensityMatrix) -> Result<f64> {
    if r1.dim() != r2.dim() {
        return Err(Error::Dimension {
            expected: r1.dim(),
            actual: r2.dim(),
        });
    }
    let neg_s1 = -von_neumann_entropy(r1)?;
    let e2 = r2.eigen();
    let n = r2.dim();
    let mut cross = 0.0;
    let mut v: Vec<Amplitude> = Vec::with_capacity(n);
    for (k, &mu) in e2.values.iter().enumerate() {
        if mu < -NEGATIVE_EIGEN_TOL {
            return Err(Error::Numerical(format!("eigenvalue {mu:e} is negative")));
        }
        v.clear();
        v.extend((0..n).map(|i| e2.vector_component(k, i)));
        let weight = r1.expectation(&v)?;
        if mu <= SUPPORT_EPS {
            if weight > STRUCTURE_TOL {
                return Err(Error::Support);
            }
            continue;
        }
        cross += weight * libm::log(mu);
    }
    Ok(neg_s1 - cross)
}

/// Holevo information `χ = S(Σ pᵢρᵢ) − Σ pᵢ S(ρᵢ)` in nats.
pub fn holevo_chi(ensemble: &Ensemble) -> Result<f64> {
    let mut chi = von_neumann_entropy(&ensemble.average()?)?;
    for (p, rho) in ensemble.items() {
        if *p > 0.0 {
            chi -= p * von_neumann_entropy(rho)?;
        }
    }
    Ok(chi)
}

/// A complete rank-one projective measurement.
#[derive(Debug, Clone, PartialEq)]
pub enum Measurement {
    /// Every qubit of the register measured in the same single-qubit basis.
    Basis(MeasurementBasis),
    /// Bell basis on a two-qubit register.
    Bell,
    /// Any orthonormal basis of the register.
    Projective(Vec<StateVector>),
}

impl Measurement {
    /// Outcome vectors for a register of dimension `dim`.
    pub fn outcome_vectors(&self, dim: usize) -> Result<Vec<Vec<Amplitude>>> {
        match self {
            Measurement::Basis(basis) => {
                if !dim.is_power_of_two() || dim < 2 {
                    return Err(Error::Dimension {
                        expected: dim.next_power_of_two().max(2),
                        actual: dim,
                    });
                }
                let n = dim.trailing_zeros() as usize;
                Ok((0..dim)
                    .map(|outcome| {
                        (0..dim)
                            .map(|i| {
                                (0..n).fold(c(1.0, 0.0), |acc, q| {
                                    let shift = n - 1 - q;
                                    let v = basis.vector(outcome >> shift & 1 == 1);
                                    acc * v[i >> shift & 1]
                                })
                            })
                            .collect()
                    })
                    .collect())
            }
            Measurement::Bell => {
                if dim != 4 {
                    return Err(Error::Dimension {
                        expected: 4,
                        actual: dim,
                    });
                }
                Ok(BellState::ALL
                    .iter()
                    .map(|b| b.amplitudes().to_vec())
                    .collect())
            }
            Measurement::Projective(states) => {
                if states.len() != dim {
                    return Err(Error::Dimension {
                        expected: dim,
                        actual: states.len(),
                    });
                }
                for (i, a) in states.iter().enumerate() {
                    if a.dim() != dim {
                        return Err(Error::Dimension {
                            expected: dim,
                            actual: a.dim(),
                        });
                    }
                    for b in &states[..i] {
                        if a.inner(b)?.norm() > STRUCTURE_TOL {
                            return Err(Error::Parameter(
                                "measurement vectors are not orthogonal".into(),
                            ));
                        }
                    }
                }
                Ok(states.iter().map(|s| s.amplitudes().to_vec()).collect())
            }
        }
    }
}

/// Exact mutual information `I(X;Y)` in nats between the ensemble label `X`
/// and the outcome `Y` of `measurement`, from the joint law
/// `P(i, o) = pᵢ ⟨o|ρᵢ|o⟩`.
pub fn measurement_mutual_information(
    ensemble: &Ensemble,
    measurement: &Measurement,
) -> Result<f64> {
    let outcomes = measurement.outcome_vectors(ensemble.dim())?;
    let joint: Vec<Vec<f64>> = ensemble
        .items()
        .iter()
        .map(|(p, rho)| {
            outcomes
                .iter()
                .map(|v| rho.expectation(v).map(|e| p * e.max(0.0)))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let px: Vec<f64> = joint.iter().map(|row| row.iter().sum()).collect();
    let py: Vec<f64> = (0..outcomes.len())
        .map(|o| joint.iter().map(|row| row[o]).sum())
        .collect();
    let mut info = 0.0;
    for (i, row) in joint.iter().enumerate() {
        for (o, &pxy) in row.iter().enumerate() {
            if pxy > 0.0 {
                info += pxy * libm::log(pxy / (px[i] * py[o]));
            }
        }
    }
    Ok(info)
}

/// Converts nats to bits.
pub fn nats_to_bits(nats: f64) -> f64 {
    nats / core::f64::consts::LN_2
}
