//! Singular value decomposition by one-sided (Hestenes) Jacobi rotations.
//!
//! Column pairs are rotated until they are mutually orthogonal; the column
//! norms are then the singular values. Unlike square roots of Gram-matrix
//! eigenvalues, this keeps absolute accuracy near zero, which matters
//! because realigned matrices of mixed states are frequently rank deficient
//! and the trace norm sums every singular value.

use super::eigen::jacobi_rotation;
use super::matrix::{inner, vec_norm, Complex, ComplexMatrix, ComplexVector, ZERO};

const MAX_SWEEPS: usize = 80;

/// Thin SVD `a = U diag(s) V†` with `k = min(rows, cols)` terms.
#[derive(Debug, Clone)]
pub struct Svd {
    /// `rows x k`, orthonormal columns.
    pub u: ComplexMatrix,
    /// Descending, nonnegative.
    pub s: Vec<f64>,
    /// `cols x k`, orthonormal columns.
    pub v: ComplexMatrix,
}

impl Svd {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n, k) = (self.u.rows(), self.v.rows(), self.s.len());
        ComplexMatrix::from_fn(m, n, |i, j| {
            (0..k)
                .map(|t| self.u[(i, t)] * self.v[(j, t)].conj() * self.s[t])
                .sum()
        })
    }
}

pub fn svd(a: &ComplexMatrix) -> Svd {
    if a.rows() < a.cols() {
        let t = tall_svd(&a.adjoint());
        return Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        };
    }
    tall_svd(a)
}

/// Singular values, descending; `min(rows, cols)` of them.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    svd(a).s
}

/// Sum of singular values (Schatten-1 norm).
pub fn trace_norm(a: &ComplexMatrix) -> f64 {
    singular_values(a).iter().sum()
}

/// Frobenius / Schatten-2 norm.
pub fn hs_norm(a: &ComplexMatrix) -> f64 {
    a.data().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

// rows >= cols
fn tall_svd(a: &ComplexMatrix) -> Svd {
    let (m, n) = a.shape();
    let mut cols: Vec<ComplexVector> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<ComplexVector> = (0..n)
        .map(|j| {
            let mut e = vec![ZERO; n];
            e[j] = Complex::new(1.0, 0.0);
            e
        })
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma = inner(&cols[p], &cols[q]);
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let e = gamma / g;
                let (c, s) = jacobi_rotation(alpha, beta, g);
                let se_bar = e.conj() * s;
                let ce_bar = e.conj() * c;
                rotate_pair(&mut cols, p, q, c, s, se_bar, ce_bar);
                rotate_pair(&mut v, p, q, c, s, se_bar, ce_bar);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = cols.iter().map(|c| vec_norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let s: Vec<f64> = order.iter().map(|&k| norms[k]).collect();
    let smax = s.first().copied().unwrap_or(0.0);
    let cutoff = smax * (m.max(n) as f64) * f64::EPSILON;

    let mut u_cols: Vec<ComplexVector> = Vec::with_capacity(n);
    for &k in &order {
        if norms[k] > cutoff && norms[k] > 0.0 {
            let inv = 1.0 / norms[k];
            let mut col: ComplexVector = cols[k].iter().map(|&z| z * inv).collect();
            // Re-orthogonalize against earlier columns; near-degenerate
            // tiny singular values can leave residual overlap.
            orthogonalize(&mut col, &u_cols);
            let nrm = vec_norm(&col);
            if nrm > 0.5 {
                col.iter_mut().for_each(|z| *z /= nrm);
                u_cols.push(col);
                continue;
            }
        }
        u_cols.push(complete_basis_vector(m, &u_cols));
    }

    let v_sorted: Vec<ComplexVector> = order.iter().map(|&k| v[k].clone()).collect();
    Svd {
        u: ComplexMatrix::from_columns(&u_cols),
        s,
        v: ComplexMatrix::from_columns(&v_sorted),
    }
}

#[inline]
fn rotate_pair(
    cols: &mut [ComplexVector],
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    se_bar: Complex,
    ce_bar: Complex,
) {
    let (left, right) = cols.split_at_mut(q);
    let cp = &mut left[p];
    let cq = &mut right[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let xp = *x;
        let xq = *y;
        *x = xp * c - xq * se_bar;
        *y = xp * s + xq * ce_bar;
    }
}

fn orthogonalize(col: &mut ComplexVector, basis: &[ComplexVector]) {
    for b in basis {
        let overlap = inner(b, col);
        for (z, &bz) in col.iter_mut().zip(b) {
            *z -= bz * overlap;
        }
    }
}

/// A unit vector orthogonal to `basis`, taken from the canonical basis by
/// Gram–Schmidt. Requires `basis.len() < dim`.
fn complete_basis_vector(dim: usize, basis: &[ComplexVector]) -> ComplexVector {
    let mut best: Option<ComplexVector> = None;
    let mut best_norm = 0.0;
    for e in 0..dim {
        let mut cand = vec![ZERO; dim];
        cand[e] = Complex::new(1.0, 0.0);
        orthogonalize(&mut cand, basis);
        orthogonalize(&mut cand, basis);
        let nrm = vec_norm(&cand);
        if nrm > 0.5 {
            cand.iter_mut().for_each(|z| *z /= nrm);
            return cand;
        }
        if nrm > best_norm {
            best_norm = nrm;
            best = Some(cand);
        }
    }
    let mut cand = best.expect("basis already spans the space");
    cand.iter_mut().for_each(|z| *z /= best_norm);
    cand
}
