//! The realignment map and the computable cross-norm criterion.
//!
//! For `ρ` on `C^da ⊗ C^db` the realigned matrix `R` is `da² × db²` with
//!
//! ```text
//! R[(i·da + j), (k·db + l)] = ρ[(i·db + k), (j·db + l)]
//! ```
//!
//! so rows pair the two A-indices and columns pair the two B-indices. Its
//! singular values are the operator-Schmidt coefficients of `ρ` and its trace
//! norm `τ` never exceeds one on separable states.

use crate::error::{Error, Result};
use crate::linalg::{svd, trace_norm, Complex, ComplexMatrix};
use crate::states::{check_dim, check_range, isotropic_alpha, BellSpectrum, DensityOperator};

/// Guard band for the verdict `τ > 1 + TAU_GUARD`.
pub const TAU_GUARD: f64 = 1e-9;

/// Matrix of the realigned operator, `dim_a² × dim_b²`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealignedMatrix {
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix,
}

impl RealignedMatrix {
    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace_norm(&self) -> f64 {
        trace_norm(&self.matrix)
    }
}

/// Operator Schmidt decomposition `T = Σ λ_i E_i ⊗ F_i` with
/// Hilbert–Schmidt orthonormal `E_i` (on A) and `F_i` (on B).
#[derive(Debug, Clone)]
pub struct OperatorSchmidt {
    /// Descending, nonnegative.
    pub coefficients: Vec<f64>,
    pub left_ops: Vec<ComplexMatrix>,
    pub right_ops: Vec<ComplexMatrix>,
}

impl OperatorSchmidt {
    pub fn sum(&self) -> f64 {
        self.coefficients.iter().sum()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        let da = self.left_ops[0].rows();
        let db = self.right_ops[0].rows();
        let n = da * db;
        let mut out = ComplexMatrix::zeros(n, n);
        for ((&l, e), f) in self
            .coefficients
            .iter()
            .zip(&self.left_ops)
            .zip(&self.right_ops)
        {
            if l == 0.0 {
                continue;
            }
            let ef = crate::linalg::kron(e, f).expect("local dims are small");
            out = &out + &ef.scale(l);
        }
        out
    }
}

/// Realigns a validated density operator.
pub fn realign(rho: &DensityOperator) -> RealignedMatrix {
    let (da, db) = rho.dims();
    realign_unchecked(rho.matrix(), da, db)
}

/// Realigns any `(da·db) × (da·db)` matrix without state validation, for
/// diagnostics on general operators.
pub fn realign_matrix(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<RealignedMatrix> {
    let n = dim_a * dim_b;
    if dim_a == 0 || dim_b == 0 || m.shape() != (n, n) {
        return Err(Error::Shape(format!(
            "cannot realign {}x{} matrix with dims ({dim_a}, {dim_b})",
            m.rows(),
            m.cols()
        )));
    }
    Ok(realign_unchecked(m, dim_a, dim_b))
}

fn realign_unchecked(m: &ComplexMatrix, da: usize, db: usize) -> RealignedMatrix {
    let mut r = ComplexMatrix::zeros(da * da, db * db);
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    r[(i * da + j, k * db + l)] = m[(i * db + k, j * db + l)];
                }
            }
        }
    }
    RealignedMatrix {
        dim_a: da,
        dim_b: db,
        matrix: r,
    }
}

pub fn operator_schmidt(rho: &DensityOperator) -> OperatorSchmidt {
    let (da, db) = rho.dims();
    operator_schmidt_of(&realign(rho), da, db)
}

/// Operator Schmidt decomposition of an arbitrary square operator.
pub fn operator_schmidt_matrix(
    m: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
) -> Result<OperatorSchmidt> {
    Ok(operator_schmidt_of(
        &realign_matrix(m, dim_a, dim_b)?,
        dim_a,
        dim_b,
    ))
}

fn operator_schmidt_of(r: &RealignedMatrix, da: usize, db: usize) -> OperatorSchmidt {
    let dec = svd(&r.matrix);
    let k = dec.s.len();
    let left_ops = (0..k)
        .map(|t| ComplexMatrix::from_fn(da, da, |i, j| dec.u[(i * da + j, t)]))
        .collect();
    let right_ops = (0..k)
        .map(|t| ComplexMatrix::from_fn(db, db, |i, j| dec.v[(i * db + j, t)].conj()))
        .collect();
    OperatorSchmidt {
        coefficients: dec.s,
        left_ops,
        right_ops,
    }
}

/// `τ(𝔄(ρ))`, the trace norm of the realigned matrix.
pub fn ccnr_tau(rho: &DensityOperator) -> f64 {
    realign(rho).trace_norm()
}

/// `τ` of an arbitrary operator, bypassing state validation.
pub fn ccnr_tau_matrix(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    Ok(realign_matrix(m, dim_a, dim_b)?.trace_norm())
}

/// `true` when `τ` exceeds one beyond the guard band, certifying entanglement.
pub fn violates_ccnr(tau: f64) -> bool {
    tau > 1.0 + TAU_GUARD
}

/// Trace of the realigned matrix, `d ⟨Ψ⁺|ρ|Ψ⁺⟩` for `dim_a = dim_b = d`.
pub fn realign_trace(rho: &DensityOperator) -> Result<Complex> {
    let (da, db) = rho.dims();
    if da != db {
        return Err(Error::Shape(format!(
            "realigned matrix is {}x{}, not square",
            da * da,
            db * db
        )));
    }
    realign(rho).matrix.trace()
}

/// `τ` of the Werner state: `|d f − 1|/d + 1/d`, i.e. `2/d − f` for
/// `f ≤ 1/d` and `f` above.
pub fn tau_werner_closed(d: usize, f: f64) -> Result<f64> {
    check_dim(d)?;
    check_range("f", f, -1.0, 1.0)?;
    let df = d as f64;
    Ok(if f <= 1.0 / df { 2.0 / df - f } else { f })
}

/// `τ` of the isotropic state: `dF` for `F ≥ 1/d²`, `2/d − dF` below.
/// Equal to `|α_F|(d − 1/d) + 1/d`.
pub fn tau_isotropic_closed(d: usize, fidelity: f64) -> Result<f64> {
    check_dim(d)?;
    check_range("F", fidelity, 0.0, 1.0)?;
    let df = d as f64;
    Ok(if fidelity >= 1.0 / (df * df) {
        df * fidelity
    } else {
        2.0 / df - df * fidelity
    })
}

/// The `|α_F|(d − 1/d) + 1/d` form of [`tau_isotropic_closed`].
pub fn tau_isotropic_alpha_form(d: usize, fidelity: f64) -> f64 {
    let df = d as f64;
    isotropic_alpha(d, fidelity).abs() * (df - 1.0 / df) + 1.0 / df
}

/// `τ` of a Bell-diagonal state:
/// `½(1 + |λ₀+λ₃−λ₁−λ₂| + |λ₁−λ₂| + |λ₀−λ₃| + ||λ₀−λ₃| − |λ₁−λ₂||)`.
pub fn tau_bell_diagonal_closed(s: &BellSpectrum) -> f64 {
    let [l0, l1, l2, l3] = s.lambda();
    let a = (l0 - l3).abs();
    let b = (l1 - l2).abs();
    0.5 * (1.0 + (l0 + l3 - l1 - l2).abs() + b + a + (a - b).abs())
}

/// `τ` of `p|00⟩⟨00| + (1−p)|Φ⟩⟨Φ|`.
pub fn tau_qubit_family_closed(p: f64) -> Result<f64> {
    check_range("p", p, 0.0, 1.0)?;
    let q = 1.0 - p;
    let base = p * p / 2.0 + q * q / 4.0;
    let cross = p / 2.0 * (p * p + q * q).sqrt();
    // The second radicand is nonnegative in exact arithmetic.
    Ok(q + (base + cross).sqrt() + (base - cross).max(0.0).sqrt())
}

/// `τ` of the two-qutrit family: `19/21 + (2/21)√(19 − 15α + 3α²)`.
pub fn tau_qutrit_family_closed(alpha: f64) -> Result<f64> {
    check_range("alpha", alpha, 2.0, 5.0)?;
    Ok(19.0 / 21.0 + 2.0 / 21.0 * (19.0 - 15.0 * alpha + 3.0 * alpha * alpha).sqrt())
}
