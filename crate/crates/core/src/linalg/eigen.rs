//! Hermitian eigensystems by the cyclic complex Jacobi method.
//!
//! Each rotation annihilates one off-diagonal pair `(p, q)`. The complex
//! phase of `a_pq` is absorbed into the rotation so that the 2x2 problem is
//! real symmetric, after which the classic stable tangent formula applies.

use super::matrix::{Complex, ComplexMatrix, ZERO};
use crate::error::{Error, Result};

/// Relative Hermiticity tolerance: `‖h − h†‖_∞ ≤ HERMITIAN_TOL · (1 + ‖h‖_∞)`.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as columns.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigensystem {
    /// `Σ λ_k v_k v_k†`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.vectors[(j, k)].conj() * self.values[k])
                .sum()
        })
    }
}

/// Rotation parameters `(c, s)` annihilating `b` in the real symmetric
/// 2x2 block `[[a, b], [b, d]]`, `b > 0`.
#[inline]
pub(crate) fn jacobi_rotation(a: f64, d: f64, b: f64) -> (f64, f64) {
    let theta = (d - a) / (2.0 * b);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    (c, t * c)
}

/// Checks Hermiticity within [`HERMITIAN_TOL`], then diagonalizes the
/// symmetrized matrix.
pub fn hermitian_eigensystem(h: &ComplexMatrix) -> Result<Eigensystem> {
    hermitian_eigensystem_with_tol(h, HERMITIAN_TOL)
}

pub fn hermitian_eigensystem_with_tol(h: &ComplexMatrix, tol: f64) -> Result<Eigensystem> {
    if !h.is_square() {
        return Err(Error::Shape(format!(
            "eigensystem of non-square {}x{} matrix",
            h.rows(),
            h.cols()
        )));
    }
    let residual = h.hermiticity_residual();
    let tolerance = tol * (1.0 + h.max_abs());
    if residual > tolerance {
        return Err(Error::Symmetry {
            residual,
            tolerance,
        });
    }
    Ok(jacobi_eigen(h.hermitian_part()))
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigensystem(h)?.values)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(h)?[0])
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += a[(i, j)].norm_sqr();
        }
    }
    s.sqrt()
}

fn jacobi_eigen(mut a: ComplexMatrix) -> Eigensystem {
    let n = a.rows();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= f64::EPSILON * 1e-2 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                // Skip negligible pivots once they cannot move the diagonal.
                if b < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
                    a[(p, q)] = ZERO;
                    a[(q, p)] = ZERO;
                    continue;
                }
                let e = apq / b;
                let (c, s) = jacobi_rotation(app, aqq, b);
                let se_bar = e.conj() * s;
                let ce_bar = e.conj() * c;
                // Columns: A ← A J with J = [[c, s], [−s ē, c ē]].
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * se_bar;
                    a[(k, q)] = akp * s + akq * ce_bar;
                }
                // Rows: A ← J† A.
                let se = e * s;
                let ce = e * c;
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * se;
                    a[(q, k)] = apk * s + aqk * ce;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * se_bar;
                    v[(k, q)] = vkp * s + vkq * ce_bar;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps index order among exact ties.
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Eigensystem { values, vectors }
}
