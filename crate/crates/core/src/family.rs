//! Parameterized state families with known closed forms.

use crate::crossnorm::{
    gamma_bell_diagonal_closed, gamma_isotropic_closed, gamma_werner_closed, GammaValue,
};
use crate::error::Result;
use crate::realign::{
    tau_bell_diagonal_closed, tau_isotropic_closed, tau_qubit_family_closed,
    tau_qutrit_family_closed, tau_werner_closed,
};
use crate::states::{
    bell_diagonal_state, isotropic_state, qubit_family, qutrit_family, werner_state, BellSpectrum,
    DensityOperator,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Werner {
        d: usize,
        f: f64,
    },
    Isotropic {
        d: usize,
        fidelity: f64,
    },
    BellDiagonal(BellSpectrum),
    /// `p|00⟩⟨00| + (1−p)|Φ⟩⟨Φ|`
    Qubit {
        p: f64,
    },
    /// Two-qutrit family, `2 ≤ α ≤ 5`.
    Qutrit {
        alpha: f64,
    },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Werner { .. } => "werner",
            Family::Isotropic { .. } => "isotropic",
            Family::BellDiagonal(_) => "bell",
            Family::Qubit { .. } => "qubit",
            Family::Qutrit { .. } => "qutrit",
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        match *self {
            Family::Werner { d, .. } | Family::Isotropic { d, .. } => (d, d),
            Family::BellDiagonal(_) | Family::Qubit { .. } => (2, 2),
            Family::Qutrit { .. } => (3, 3),
        }
    }

    pub fn state(&self) -> Result<DensityOperator> {
        match *self {
            Family::Werner { d, f } => werner_state(d, f),
            Family::Isotropic { d, fidelity } => isotropic_state(d, fidelity),
            Family::BellDiagonal(s) => bell_diagonal_state(&s),
            Family::Qubit { p } => qubit_family(p),
            Family::Qutrit { alpha } => qutrit_family(alpha),
        }
    }

    /// Closed-form realignment trace norm.
    pub fn tau_closed(&self) -> Result<f64> {
        match *self {
            Family::Werner { d, f } => tau_werner_closed(d, f),
            Family::Isotropic { d, fidelity } => tau_isotropic_closed(d, fidelity),
            Family::BellDiagonal(s) => Ok(tau_bell_diagonal_closed(&s)),
            Family::Qubit { p } => tau_qubit_family_closed(p),
            Family::Qutrit { alpha } => tau_qutrit_family_closed(alpha),
        }
    }

    /// Closed-form greatest cross norm, where one is known.
    pub fn gamma_closed(&self) -> Result<Option<GammaValue>> {
        Ok(match *self {
            Family::Werner { d, f } => Some(gamma_werner_closed(d, f)?),
            Family::Isotropic { d, fidelity } => Some(gamma_isotropic_closed(d, fidelity)?),
            Family::BellDiagonal(s) => Some(gamma_bell_diagonal_closed(&s)),
            Family::Qubit { .. } | Family::Qutrit { .. } => None,
        })
    }
}
