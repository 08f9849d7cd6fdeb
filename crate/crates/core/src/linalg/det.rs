use super::matrix::{Complex, ComplexMatrix, ONE, ZERO};
use crate::error::{Error, Result};

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(a: &ComplexMatrix) -> Result<Complex> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "determinant of non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[(i, col)].norm().total_cmp(&m[(j, col)].norm()))
            .expect("non-empty range");
        if m[(pivot, col)] == ZERO {
            return Ok(ZERO);
        }
        if pivot != col {
            for k in 0..n {
                let tmp = m[(col, k)];
                m[(col, k)] = m[(pivot, k)];
                m[(pivot, k)] = tmp;
            }
            det = -det;
        }
        let p = m[(col, col)];
        det *= p;
        for i in (col + 1)..n {
            let factor = m[(i, col)] / p;
            if factor == ZERO {
                continue;
            }
            for k in col..n {
                let sub = factor * m[(col, k)];
                m[(i, k)] -= sub;
            }
        }
    }
    Ok(det)
}

/// Ferrers' closed form for `det(J + diag(a))`, with `J` the all-ones
/// matrix: `a_1 ⋯ a_n (1 + Σ 1/a_k)`.
pub fn ferrers_determinant(a: &[Complex]) -> Result<Complex> {
    if a.is_empty() {
        return Err(Error::Domain("Ferrers formula needs n >= 1".into()));
    }
    if let Some(k) = a.iter().position(|&z| z == ZERO) {
        return Err(Error::Domain(format!("coefficient a_{k} is zero")));
    }
    let product: Complex = a.iter().product();
    let reciprocal_sum: Complex = a.iter().map(|&z| z.inv()).sum();
    Ok(product * (ONE + reciprocal_sum))
}

/// The matrix `J + diag(a)` whose determinant Ferrers' formula evaluates.
pub fn ferrers_matrix(a: &[Complex]) -> ComplexMatrix {
    let n = a.len();
    ComplexMatrix::from_fn(n, n, |i, j| if i == j { ONE + a[i] } else { ONE })
}
