//! Cyclic Jacobi eigensolver for small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies a real Givens rotation that zeroes it.

use alloc::vec;
use alloc::vec::Vec;

use super::{c, Amplitude};

const MAX_SWEEPS: usize = 64;

pub(crate) struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Row-major; column `k` is the eigenvector of `values[k]`.
    pub vectors: Vec<Amplitude>,
    pub dim: usize,
}

impl HermitianEigen {
    pub fn vector_component(&self, k: usize, i: usize) -> Amplitude {
        self.vectors[i * self.dim + k]
    }
}

pub(crate) fn hermitian_eigen(n: usize, matrix: &[Amplitude]) -> HermitianEigen {
    debug_assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let mut v = vec![c(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = c(1.0, 0.0);
    }
    let total: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    let threshold = (total * 1e-30).max(1e-300);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].norm_sqr())
            .sum();
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag * mag <= threshold / (n * n) as f64 {
                    continue;
                }
                // Phase step: scale column q by e^{-iθ} and row q by e^{iθ}.
                let d = (apq / mag).conj();
                for k in 0..n {
                    a[k * n + q] *= d;
                    v[k * n + q] *= d;
                }
                for k in 0..n {
                    a[q * n + k] *= d.conj();
                }

                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let cs = 1.0 / libm::sqrt(t * t + 1.0);
                let sn = t * cs;

                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = akp * cs - akq * sn;
                    a[k * n + q] = akp * sn + akq * cs;
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = vkp * cs - vkq * sn;
                    v[k * n + q] = vkp * sn + vkq * cs;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = apk * cs - aqk * sn;
                    a[q * n + k] = apk * sn + aqk * cs;
                }
                a[p * n + q] = c(0.0, 0.0);
                a[q * n + p] = c(0.0, 0.0);
                a[p * n + p] = c(a[p * n + p].re, 0.0);
                a[q * n + q] = c(a[q * n + q].re, 0.0);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = vec![c(0.0, 0.0); n * n];
    for (k, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + k] = v[i * n + src];
        }
    }
    HermitianEigen {
        values,
        vectors,
        dim: n,
    }
}
