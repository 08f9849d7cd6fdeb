//! PPT and reduction criteria alongside the realignment criterion, and the
//! combined per-state report.

use std::fmt;

use crate::crossnorm::{is_separable_closed, GammaValue};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::linalg::{kron, min_eigenvalue, ComplexMatrix};
use crate::realign::{ccnr_tau, violates_ccnr};
use crate::states::{partial_trace_a_matrix, partial_trace_b_matrix, DensityOperator};

/// Eigenvalue floors below `-EIGEN_GUARD` count as violations.
pub const EIGEN_GUARD: f64 = 1e-9;

/// Transpose on the B factor: entry `((i,k),(j,l))` takes `ρ[(i,l),(j,k)]`.
pub fn partial_transpose_b(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> ComplexMatrix {
    let n = dim_a * dim_b;
    assert_eq!(m.shape(), (n, n), "partial transpose shape mismatch");
    ComplexMatrix::from_fn(n, n, |r, c| {
        let (i, k) = (r / dim_b, r % dim_b);
        let (j, l) = (c / dim_b, c % dim_b);
        m[(i * dim_b + l, j * dim_b + k)]
    })
}

/// Smallest eigenvalue of the partial transpose; negative certifies entanglement.
pub fn ppt_min_eigenvalue(rho: &DensityOperator) -> f64 {
    let (da, db) = rho.dims();
    min_eigenvalue(&partial_transpose_b(rho.matrix(), da, db))
        .expect("partial transpose of a Hermitian matrix is Hermitian")
}

/// Smallest eigenvalue over `ρ_A ⊗ I − ρ` and `I ⊗ ρ_B − ρ`.
pub fn reduction_min_eigenvalue(rho: &DensityOperator) -> f64 {
    let (da, db) = rho.dims();
    let m = rho.matrix();
    let ra = partial_trace_b_matrix(m, da, db);
    let rb = partial_trace_a_matrix(m, da, db);
    let left = &kron(&ra, &ComplexMatrix::identity(db)).expect("small dims") - m;
    let right = &kron(&ComplexMatrix::identity(da), &rb).expect("small dims") - m;
    let a = min_eigenvalue(&left).expect("Hermitian");
    let b = min_eigenvalue(&right).expect("Hermitian");
    a.min(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SeparableCertified,
    EntangledCertified,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SeparableCertified => "separable_certified",
            Verdict::EntangledCertified => "entangled_certified",
            Verdict::Undecided => "undecided",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaReport {
    pub tau: f64,
    pub tau_violated: bool,
    pub ppt_floor: f64,
    pub ppt_violated: bool,
    pub reduction_floor: f64,
    pub reduction_violated: bool,
    pub gamma_closed: Option<GammaValue>,
    pub verdict: Verdict,
}

impl CriteriaReport {
    /// Assembles the verdict: any violated criterion certifies entanglement;
    /// otherwise only a closed-form `γ = 1` certifies separability.
    pub fn from_parts(
        tau: f64,
        ppt_floor: f64,
        reduction_floor: f64,
        gamma: Option<GammaValue>,
    ) -> Self {
        let tau_violated = violates_ccnr(tau);
        let ppt_violated = ppt_floor < -EIGEN_GUARD;
        let reduction_violated = reduction_floor < -EIGEN_GUARD;
        let verdict = if tau_violated || ppt_violated || reduction_violated {
            Verdict::EntangledCertified
        } else if gamma.as_ref().is_some_and(is_separable_closed) {
            Verdict::SeparableCertified
        } else {
            Verdict::Undecided
        };
        Self {
            tau,
            tau_violated,
            ppt_floor,
            ppt_violated,
            reduction_floor,
            reduction_violated,
            gamma_closed: gamma,
            verdict,
        }
    }
}

/// Runs every criterion on `rho`. When a family descriptor is supplied its
/// dimensions must match and its closed-form `γ` (if any) is attached.
pub fn full_report(rho: &DensityOperator, closed_form: Option<&Family>) -> Result<CriteriaReport> {
    let gamma = match closed_form {
        Some(fam) => {
            if fam.dims() != rho.dims() {
                return Err(Error::Shape(format!(
                    "{} family has dims {:?}, state has {:?}",
                    fam.name(),
                    fam.dims(),
                    rho.dims()
                )));
            }
            fam.gamma_closed()?
        }
        None => None,
    };
    Ok(CriteriaReport::from_parts(
        ccnr_tau(rho),
        ppt_min_eigenvalue(rho),
        reduction_min_eigenvalue(rho),
        gamma,
    ))
}
