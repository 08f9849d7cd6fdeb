//! Entanglement detection for bipartite density operators through the
//! realignment (computable cross norm) criterion.
//!
//! A separable state `ρ` satisfies `τ(𝔄(ρ)) ≤ 1`, where `𝔄(ρ)` is the
//! realigned matrix of `ρ` and `τ` its trace norm. The crate provides
//!
//! - [`linalg`]: a small dense complex kernel (Kronecker products,
//!   Hermitian eigensystems, SVD, determinants, Ferrers' formula);
//! - [`states`]: the Werner, isotropic, Bell-diagonal, two-qubit and
//!   two-qutrit families, Schmidt decompositions, partial traces, twirls;
//! - [`realign`]: the realignment map, operator Schmidt decomposition and
//!   closed-form `τ` for each family;
//! - [`crossnorm`]: closed-form greatest cross norms and robustness bounds;
//! - [`criteria`]: PPT and reduction criteria and an aggregated report.
//!
//! ```
//! use ccnr_core::{realign::ccnr_tau, states::qutrit_family};
//!
//! // Bound entangled, yet detected: τ > 1.
//! let rho = qutrit_family(3.5).unwrap();
//! assert!(ccnr_tau(&rho) > 1.0);
//! ```

pub mod criteria;
pub mod crossnorm;
pub mod error;
pub mod family;
pub mod linalg;
pub mod realign;
pub mod states;

pub use error::{Error, Result};
