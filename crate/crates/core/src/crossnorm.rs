//! Closed forms for the greatest cross norm `‖·‖_γ`.
//!
//! A density operator is separable exactly when its greatest cross norm is
//! one. No general algorithm exists for the infimum defining the norm; what
//! is provided here are the exact values for rank-one operators and for the
//! Werner, isotropic and Bell-diagonal families. For arbitrary states the
//! realignment trace norm `τ` is a lower bound.
//!
//! For Werner and isotropic states the robustness of entanglement equals
//! `γ − 1`, so [`robustness_lower_bound`] is tight on those families.

use std::fmt;

use crate::error::{Error, Result};
use crate::states::{check_dim, check_range, schmidt_decompose, BellSpectrum, PureState};

/// Slack for the `γ = 1` separability test.
pub const SEPARABLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaFamily {
    Pure,
    Werner,
    Isotropic,
    BellDiagonal,
    RankOne,
}

impl fmt::Display for GammaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaFamily::Pure => "pure",
            GammaFamily::Werner => "werner",
            GammaFamily::Isotropic => "isotropic",
            GammaFamily::BellDiagonal => "bell_diagonal",
            GammaFamily::RankOne => "rank_one",
        })
    }
}

/// A greatest-cross-norm value together with the closed form that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaValue {
    pub value: f64,
    pub family: GammaFamily,
}

/// `‖ |ψ⟩⟨ω| ‖_γ = (Σ_i √p_i)(Σ_j √q_j)` from the Schmidt coefficients.
pub fn gamma_rank_one(psi: &PureState, omega: &PureState) -> Result<f64> {
    if psi.dims() != omega.dims() {
        return Err(Error::Shape(format!(
            "dims {:?} and {:?} differ",
            psi.dims(),
            omega.dims()
        )));
    }
    Ok(schmidt_decompose(psi).sum_sqrt() * schmidt_decompose(omega).sum_sqrt())
}

/// `‖ |ψ⟩⟨ψ| ‖_γ = (Σ √p_i)²`; one iff `ψ` is a product vector.
pub fn gamma_pure(psi: &PureState) -> GammaValue {
    let s = schmidt_decompose(psi).sum_sqrt();
    GammaValue {
        value: s * s,
        family: GammaFamily::Pure,
    }
}

/// Werner states: `1` for `f ≥ 0`, `1 − f` for `f < 0`.
pub fn gamma_werner_closed(d: usize, f: f64) -> Result<GammaValue> {
    check_dim(d)?;
    check_range("f", f, -1.0, 1.0)?;
    Ok(GammaValue {
        value: if f >= 0.0 { 1.0 } else { 1.0 - f },
        family: GammaFamily::Werner,
    })
}

/// Isotropic states: `1` for `F ≤ 1/d`, `dF` above.
pub fn gamma_isotropic_closed(d: usize, fidelity: f64) -> Result<GammaValue> {
    check_dim(d)?;
    check_range("F", fidelity, 0.0, 1.0)?;
    let df = d as f64;
    Ok(GammaValue {
        value: if fidelity <= 1.0 / df {
            1.0
        } else {
            df * fidelity
        },
        family: GammaFamily::Isotropic,
    })
}

/// Bell-diagonal states: `2 max λ` when `max λ > 1/2`, else `1`.
pub fn gamma_bell_diagonal_closed(s: &BellSpectrum) -> GammaValue {
    let m = s.max();
    GammaValue {
        value: if m > 0.5 { 2.0 * m } else { 1.0 },
        family: GammaFamily::BellDiagonal,
    }
}

/// `E_R ≥ ‖σ‖_γ − 1`.
pub fn robustness_lower_bound(gamma: &GammaValue) -> f64 {
    gamma.value - 1.0
}

/// Exact robustness of a pure state, `(Σ √p_i)² − 1`.
pub fn robustness_pure_exact(psi: &PureState) -> f64 {
    gamma_pure(psi).value - 1.0
}

pub fn is_separable_closed(gamma: &GammaValue) -> bool {
    gamma.value <= 1.0 + SEPARABLE_TOL
}
