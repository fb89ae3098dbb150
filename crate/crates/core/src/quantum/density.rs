use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::eigen::{hermitian_eigen, HermitianEigen};
use super::state::{scatter, StateVector};
use super::{c, is_finite, Amplitude, STRUCTURE_TOL};
use crate::error::{Error, Result};

/// Hermitian, unit-trace, positive semidefinite matrix (row-major).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Amplitude>,
}

impl DensityMatrix {
    /// Validates hermiticity, unit trace and eigenvalues `≥ -1e-9`.
    pub fn new(dim: usize, entries: Vec<Amplitude>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDensity("dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        if !entries.iter().all(is_finite) {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        let rho = Self { dim, entries };
        let herm = rho.hermiticity_deviation();
        if herm > STRUCTURE_TOL {
            return Err(Error::InvalidDensity(format!(
                "not Hermitian (deviation {herm:e})"
            )));
        }
        let tr = rho.trace();
        if (tr - 1.0).abs() > STRUCTURE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
        }
        let min = rho.eigenvalues()[0];
        if min < -STRUCTURE_TOL {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {min:e}"
            )));
        }
        Ok(rho)
    }

    /// `diag(probs)`.
    pub fn from_diagonal(probs: &[f64]) -> Result<Self> {
        let n = probs.len();
        let mut entries = vec![c(0.0, 0.0); n * n];
        for (i, &p) in probs.iter().enumerate() {
            entries[i * n + i] = c(p, 0.0);
        }
        Self::new(n, entries)
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::from_diagonal(&vec![1.0 / dim as f64; dim])
    }

    /// `Σ wᵢ ρᵢ` for weights summing to one.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let dim = parts
            .first()
            .map(|(_, r)| r.dim)
            .ok_or_else(|| Error::InvalidDensity("empty mixture".into()))?;
        let mut entries = vec![c(0.0, 0.0); dim * dim];
        for (w, r) in parts {
            if r.dim != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    actual: r.dim,
                });
            }
            if w.is_nan() || *w < 0.0 {
                return Err(Error::InvalidDensity(format!("negative weight {w}")));
            }
            for (e, x) in entries.iter_mut().zip(&r.entries) {
                *e += x * *w;
            }
        }
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Amplitude] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entry(i, i).re).sum()
    }

    /// `ρ · ρ`.
    pub fn square(&self) -> Vec<Amplitude> {
        let n = self.dim;
        let mut out = vec![c(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).map(|k| self.entry(i, k) * self.entry(k, j)).sum();
            }
        }
        out
    }

    /// `tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.entry(i, j) * self.entry(j, i)).re)
            .sum()
    }

    /// `⟨v|ρ|v⟩` for a vector of matching dimension.
    pub fn expectation(&self, v: &[Amplitude]) -> Result<f64> {
        if v.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                actual: v.len(),
            });
        }
        let n = self.dim;
        let mut acc = c(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += v[i].conj() * self.entry(i, j) * v[j];
            }
        }
        Ok(acc.re)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigen().values
    }

    pub(crate) fn eigen(&self) -> HermitianEigen {
        hermitian_eigen(self.dim, &self.entries)
    }

    fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.entry(i, j) - self.entry(j, i).conj()).norm())
            .fold(0.0, f64::max)
    }
}

/// `|ψ⟩⟨ψ|`.
pub fn density_of(state: &StateVector) -> DensityMatrix {
    let a = state.amplitudes();
    let n = a.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(a[i] * a[j].conj());
        }
    }
    DensityMatrix { dim: n, entries }
}

/// True iff `max |ρ² − ρ| ≤ tol`.
pub fn is_pure(rho: &DensityMatrix, tol: f64) -> bool {
    rho.square()
        .iter()
        .zip(&rho.entries)
        .all(|(sq, x)| (sq - x).norm() <= tol)
}

/// Reduced density matrix of `keep` (in the given order), tracing out the
/// other qubits.
pub fn reduced_density(state: &StateVector, keep: &[usize]) -> Result<DensityMatrix> {
    state.check_distinct(keep)?;
    if keep.is_empty() {
        return Err(Error::Parameter("nothing to keep".into()));
    }
    let rest: Vec<usize> = (0..state.n_qubits())
        .filter(|q| !keep.contains(q))
        .collect();
    let m = 1usize << keep.len();
    let keep_idx: Vec<usize> = (0..m).map(|k| scatter(state, keep, k)).collect();
    let mut entries = vec![c(0.0, 0.0); m * m];
    for r in 0..1usize << rest.len() {
        let base = scatter(state, &rest, r);
        for i in 0..m {
            let ai = state.amplitude(base | keep_idx[i]);
            for j in 0..m {
                entries[i * m + j] += ai * state.amplitude(base | keep_idx[j]).conj();
            }
        }
    }
    DensityMatrix::new(m, entries)
}

/// Probability-weighted family of density matrices of equal dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    items: Vec<(f64, DensityMatrix)>,
}

impl Ensemble {
    pub fn new(items: Vec<(f64, DensityMatrix)>) -> Result<Self> {
        let Some((_, first)) = items.first() else {
            return Err(Error::InvalidEnsemble("ensemble is empty".into()));
        };
        let dim = first.dim;
        let mut total = 0.0;
        for (p, rho) in &items {
            if p.is_nan() || *p < 0.0 {
                return Err(Error::InvalidEnsemble(format!("negative probability {p}")));
            }
            if rho.dim != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    actual: rho.dim,
                });
            }
            total += p;
        }
        if (total - 1.0).abs() > STRUCTURE_TOL {
            return Err(Error::InvalidEnsemble(format!(
                "probabilities sum to {total}"
            )));
        }
        Ok(Self { items })
    }

    /// Equal weights over `states`.
    pub fn uniform(states: Vec<DensityMatrix>) -> Result<Self> {
        let w = 1.0 / states.len().max(1) as f64;
        Self::new(states.into_iter().map(|r| (w, r)).collect())
    }

    pub fn items(&self) -> &[(f64, DensityMatrix)] {
        &self.items
    }

    pub fn dim(&self) -> usize {
        self.items[0].1.dim
    }

    /// `ρ = Σ pᵢ ρᵢ`.
    pub fn average(&self) -> Result<DensityMatrix> {
        let parts: Vec<(f64, &DensityMatrix)> = self.items.iter().map(|(p, r)| (*p, r)).collect();
        DensityMatrix::mixture(&parts)
    }
}
