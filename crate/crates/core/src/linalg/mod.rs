//! Dense complex linear algebra used throughout the crate.

mod det;
mod eigen;
mod matrix;
pub mod random;
mod svd;

pub use det::{determinant, ferrers_determinant, ferrers_matrix};
pub use eigen::{
    hermitian_eigensystem, hermitian_eigensystem_with_tol, hermitian_eigenvalues, min_eigenvalue,
    Eigensystem, HERMITIAN_TOL,
};
pub use matrix::{
    inner, kron, kron_vec, vec_norm, Complex, ComplexMatrix, ComplexVector, ONE, ZERO,
};
pub use svd::{hs_norm, singular_values, svd, trace_norm, Svd};
