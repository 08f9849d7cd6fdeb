//! Seeded random matrices for property tests and generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::{inner, vec_norm, Complex, ComplexMatrix, ComplexVector};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    (0..dim).map(|_| complex_gaussian(rng)).collect()
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Random Hermitian matrix `(g + g†)/2` with Gaussian `g`.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    gaussian_matrix(rng, n, n).hermitian_part()
}

/// Haar-distributed unitary: Gram–Schmidt on the columns of a complex
/// Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let mut columns: Vec<ComplexVector> = Vec::with_capacity(d);
    while columns.len() < d {
        let mut v = gaussian_vector(rng, d);
        for _ in 0..2 {
            for b in &columns {
                let overlap = inner(b, &v);
                for (z, &bz) in v.iter_mut().zip(b) {
                    *z -= bz * overlap;
                }
            }
        }
        let n = vec_norm(&v);
        if n > 1e-8 {
            v.iter_mut().for_each(|z| *z /= n);
            columns.push(v);
        }
    }
    ComplexMatrix::from_columns(&columns)
}

/// Random real orthogonal matrix.
pub fn random_orthogonal<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let mut columns: Vec<ComplexVector> = Vec::with_capacity(d);
    while columns.len() < d {
        let mut v: ComplexVector = (0..d)
            .map(|_| Complex::new(rng.sample(StandardNormal), 0.0))
            .collect();
        for _ in 0..2 {
            for b in &columns {
                let overlap = inner(b, &v);
                for (z, &bz) in v.iter_mut().zip(b) {
                    *z -= bz * overlap;
                }
            }
        }
        let n = vec_norm(&v);
        if n > 1e-8 {
            v.iter_mut().for_each(|z| *z /= n);
            columns.push(v);
        }
    }
    ComplexMatrix::from_columns(&columns)
}
