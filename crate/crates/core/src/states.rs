//! Bipartite states: validated density operators and pure states, the
//! Werner / isotropic / Bell-diagonal / two-qubit / two-qutrit families,
//! Schmidt decompositions, partial traces and the two twirling projections.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::random::{gaussian_vector, random_unitary, seeded_rng};
use crate::linalg::{
    hermitian_eigensystem_with_tol, inner, kron, kron_vec, svd, vec_norm, Complex, ComplexMatrix,
    ComplexVector, ONE, ZERO,
};

/// Acceptance tolerances for constructing a [`DensityOperator`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative Hermiticity residual, scaled by `1 + ‖ρ‖_∞`.
    pub herm: f64,
    /// Most negative eigenvalue accepted.
    pub psd: f64,
    /// Allowed deviation of the trace from one.
    pub trace: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            herm: 1e-10,
            psd: 1e-10,
            trace: 1e-10,
        }
    }
}

/// Unit-norm tolerance for [`PureState::new`].
pub const PURE_NORM_TOL: f64 = 1e-12;

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain(format!(
            "local dimension must be >= 2, got {d}"
        )));
    }
    Ok(())
}

pub(crate) fn check_range(name: &str, x: f64, lo: f64, hi: f64) -> Result<()> {
    if !x.is_finite() || x < lo || x > hi {
        return Err(Error::Domain(format!("{name} = {x} outside [{lo}, {hi}]")));
    }
    Ok(())
}

fn check_bipartite_shape(m: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<usize> {
    let n = dim_a
        .checked_mul(dim_b)
        .ok_or_else(|| Error::Shape("dimension product overflows".into()))?;
    if dim_a == 0 || dim_b == 0 || m.shape() != (n, n) {
        return Err(Error::Shape(format!(
            "matrix is {}x{}, dims ({dim_a}, {dim_b}) need {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(n)
}

/// A density operator on `C^dim_a ⊗ C^dim_b`: Hermitian, unit trace and
/// positive semidefinite within [`Tolerances`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    dim_a: usize,
    dim_b: usize,
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn new(matrix: ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<Self> {
        Self::with_tolerances(matrix, dim_a, dim_b, Tolerances::default())
    }

    /// Validates, then stores `(ρ + ρ†)/2` rescaled to unit trace.
    pub fn with_tolerances(
        matrix: ComplexMatrix,
        dim_a: usize,
        dim_b: usize,
        tol: Tolerances,
    ) -> Result<Self> {
        check_bipartite_shape(&matrix, dim_a, dim_b)?;
        let residual = matrix.hermiticity_residual();
        let tolerance = tol.herm * (1.0 + matrix.max_abs());
        if residual > tolerance {
            return Err(Error::Symmetry {
                residual,
                tolerance,
            });
        }
        let h = matrix.hermitian_part();
        let tr = h.trace()?.re;
        if (tr - 1.0).abs() > tol.trace {
            return Err(Error::Invariant {
                name: "unit trace",
                residual: (tr - 1.0).abs(),
                tolerance: tol.trace,
            });
        }
        let h = if tr == 1.0 { h } else { h.scale(1.0 / tr) };
        let min = hermitian_eigensystem_with_tol(&h, tol.herm)?.values[0];
        if min < -tol.psd {
            return Err(Error::Invariant {
                name: "positive semidefinite",
                residual: -min,
                tolerance: tol.psd,
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            matrix: h,
        })
    }

    /// `|ψ⟩⟨ψ|`
    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            dim_a: psi.dim_a,
            dim_b: psi.dim_b,
            matrix: ComplexMatrix::outer(&psi.amplitudes, &psi.amplitudes),
        }
    }

    /// `I / (dim_a dim_b)`
    pub fn maximally_mixed(dim_a: usize, dim_b: usize) -> Self {
        let n = dim_a * dim_b;
        Self {
            dim_a,
            dim_b,
            matrix: ComplexMatrix::identity(n).scale(1.0 / n as f64),
        }
    }

    /// `X ⊗ Y` for density operators `X` on A and `Y` on B.
    pub fn product(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<Self> {
        Self::new(kron(x, y)?, x.rows(), y.rows())
    }

    /// Convex combination `Σ w_k ρ_k`; weights must be nonnegative and sum to one.
    pub fn mixture(weights: &[f64], states: &[DensityOperator]) -> Result<Self> {
        if weights.len() != states.len() || states.is_empty() {
            return Err(Error::Shape("mixture needs one weight per state".into()));
        }
        let (da, db) = states[0].dims();
        if states.iter().any(|s| s.dims() != (da, db)) {
            return Err(Error::Shape(
                "mixture components have different dims".into(),
            ));
        }
        if weights.iter().any(|&w| w.is_nan() || w < 0.0) {
            return Err(Error::Domain("mixture weights must be nonnegative".into()));
        }
        let mut acc = ComplexMatrix::zeros(da * db, da * db);
        for (&w, s) in weights.iter().zip(states) {
            acc = &acc + &s.matrix.scale(w);
        }
        Self::new(acc, da, db)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `(U ⊗ V) ρ (U ⊗ V)†`
    pub fn conjugate_local(&self, u: &ComplexMatrix, v: &ComplexMatrix) -> Result<Self> {
        if u.shape() != (self.dim_a, self.dim_a) || v.shape() != (self.dim_b, self.dim_b) {
            return Err(Error::Shape("local unitaries do not match dims".into()));
        }
        self.conjugate(&kron(u, v)?)
    }

    /// `W ρ W†` for a unitary `W` on the full space.
    pub fn conjugate(&self, w: &ComplexMatrix) -> Result<Self> {
        Self::new(self.matrix.conjugate_by(w)?, self.dim_a, self.dim_b)
    }

    /// Real part of `tr(ρ X)`.
    pub fn expectation(&self, x: &ComplexMatrix) -> Result<f64> {
        if x.shape() != self.matrix.shape() {
            return Err(Error::Shape("observable shape mismatch".into()));
        }
        let n = self.matrix.rows();
        let mut acc = ZERO;
        for i in 0..n {
            for j in 0..n {
                acc += self.matrix[(i, j)] * x[(j, i)];
            }
        }
        Ok(acc.re)
    }
}

/// A normalized vector in `C^dim_a ⊗ C^dim_b`, amplitude of `|i⟩⊗|j⟩` at
/// index `i·dim_b + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dim_a: usize,
    dim_b: usize,
    amplitudes: ComplexVector,
}

impl PureState {
    pub fn new(amplitudes: ComplexVector, dim_a: usize, dim_b: usize) -> Result<Self> {
        Self::check_len(&amplitudes, dim_a, dim_b)?;
        let n = vec_norm(&amplitudes);
        if (n - 1.0).abs() > PURE_NORM_TOL {
            return Err(Error::Invariant {
                name: "unit norm",
                residual: (n - 1.0).abs(),
                tolerance: PURE_NORM_TOL,
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    /// Normalizes any nonzero vector.
    pub fn normalized(mut amplitudes: ComplexVector, dim_a: usize, dim_b: usize) -> Result<Self> {
        Self::check_len(&amplitudes, dim_a, dim_b)?;
        let n = vec_norm(&amplitudes);
        if n == 0.0 || !n.is_finite() {
            return Err(Error::Domain(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        amplitudes.iter_mut().for_each(|z| *z /= n);
        Ok(Self {
            dim_a,
            dim_b,
            amplitudes,
        })
    }

    fn check_len(amplitudes: &[Complex], dim_a: usize, dim_b: usize) -> Result<()> {
        if dim_a == 0 || dim_b == 0 || amplitudes.len() != dim_a * dim_b {
            return Err(Error::Shape(format!(
                "{} amplitudes do not fit dims ({dim_a}, {dim_b})",
                amplitudes.len()
            )));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Domain("non-finite amplitude".into()));
        }
        Ok(())
    }

    /// `|a⟩ ⊗ |b⟩`, each factor normalized.
    pub fn product(a: &[Complex], b: &[Complex]) -> Result<Self> {
        Self::normalized(kron_vec(a, b), a.len(), b.len())
    }

    /// Computational basis vector `|i⟩ ⊗ |j⟩`.
    pub fn basis(dim_a: usize, dim_b: usize, i: usize, j: usize) -> Self {
        assert!(i < dim_a && j < dim_b);
        let mut amplitudes = vec![ZERO; dim_a * dim_b];
        amplitudes[i * dim_b + j] = ONE;
        Self {
            dim_a,
            dim_b,
            amplitudes,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    /// `c[i, j]` = amplitude of `|i⟩⊗|j⟩`.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim_a, self.dim_b, |i, j| {
            self.amplitudes[i * self.dim_b + j]
        })
    }

    pub fn projector(&self) -> DensityOperator {
        DensityOperator::from_pure(self)
    }
}

/// Schmidt data `ψ = Σ √p_i |a_i⟩ ⊗ |b_i⟩`.
#[derive(Debug, Clone)]
pub struct SchmidtForm {
    /// Descending, summing to one.
    pub coefficients: Vec<f64>,
    pub left_basis: Vec<ComplexVector>,
    pub right_basis: Vec<ComplexVector>,
}

impl SchmidtForm {
    /// `Σ √p_i`
    pub fn sum_sqrt(&self) -> f64 {
        self.coefficients.iter().map(|p| p.max(0.0).sqrt()).sum()
    }

    pub fn reconstruct(&self) -> ComplexVector {
        let da = self.left_basis[0].len();
        let db = self.right_basis[0].len();
        let mut out = vec![ZERO; da * db];
        for (k, &p) in self.coefficients.iter().enumerate() {
            let w = p.max(0.0).sqrt();
            for (o, z) in out
                .iter_mut()
                .zip(kron_vec(&self.left_basis[k], &self.right_basis[k]))
            {
                *o += z * w;
            }
        }
        out
    }

    /// Number of strictly positive coefficients above `eps`.
    pub fn rank(&self, eps: f64) -> usize {
        self.coefficients.iter().filter(|&&p| p > eps).count()
    }
}

/// Eigenvalues `(λ_0, …, λ_3)` of a Bell-diagonal state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellSpectrum {
    lambda: [f64; 4],
}

impl BellSpectrum {
    pub const SUM_TOL: f64 = 1e-12;

    pub fn new(lambda: [f64; 4]) -> Result<Self> {
        if let Some(k) = lambda.iter().position(|&l| !l.is_finite() || l < 0.0) {
            return Err(Error::Domain(format!(
                "Bell weight λ_{k} = {} must be nonnegative",
                lambda[k]
            )));
        }
        let sum: f64 = lambda.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOL {
            return Err(Error::Domain(format!("Bell weights sum to {sum}, not 1")));
        }
        Ok(Self { lambda })
    }

    /// `(p, (1−p)/3, (1−p)/3, (1−p)/3)`, a one-parameter line through the
    /// spectrum simplex used by sweeps.
    pub fn werner_line(p: f64) -> Result<Self> {
        check_range("p", p, 0.0, 1.0)?;
        let r = (1.0 - p) / 3.0;
        Self::new([p, r, r, 1.0 - p - 2.0 * r])
    }

    pub fn lambda(&self) -> [f64; 4] {
        self.lambda
    }

    pub fn max(&self) -> f64 {
        self.lambda.iter().copied().fold(f64::MIN, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.lambda.iter().copied().fold(f64::MAX, f64::min)
    }
}

/// The flip (swap) operator `Σ_ij |i⊗j⟩⟨j⊗i|` on `C^d ⊗ C^d`.
pub fn flip_operator(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + j, j * d + i)] = ONE;
        }
    }
    Ok(m)
}

/// `Σ_ij |i⊗i⟩⟨j⊗j| = d |Ψ⁺⟩⟨Ψ⁺|`
pub fn fhat_operator(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + i, j * d + j)] = ONE;
        }
    }
    Ok(m)
}

/// `|Ψ⁺⟩ = (1/√d) Σ_i |i⊗i⟩`
pub fn max_entangled(d: usize) -> Result<PureState> {
    check_dim(d)?;
    let w = Complex::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut amplitudes = vec![ZERO; d * d];
    for i in 0..d {
        amplitudes[i * d + i] = w;
    }
    Ok(PureState {
        dim_a: d,
        dim_b: d,
        amplitudes,
    })
}

/// Werner state `((d − f) I + (d f − 1) 𝔽) / (d³ − d)`, with `tr(ρ_f 𝔽) = f`.
pub fn werner_state(d: usize, f: f64) -> Result<DensityOperator> {
    check_dim(d)?;
    check_range("f", f, -1.0, 1.0)?;
    let df = d as f64;
    let norm = df * df * df - df;
    let diag = (df - f) / norm;
    let swap = (df * f - 1.0) / norm;
    let mut m = ComplexMatrix::identity(d * d).scale(diag);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + j, j * d + i)] += Complex::new(swap, 0.0);
        }
    }
    DensityOperator::new(m, d, d)
}

/// `α_F = (d² F − 1)/(d² − 1)`, the weight of `|Ψ⁺⟩⟨Ψ⁺|` over white noise.
pub fn isotropic_alpha(d: usize, fidelity: f64) -> f64 {
    let d2 = (d * d) as f64;
    (d2 * fidelity - 1.0) / (d2 - 1.0)
}

/// Isotropic state `((1 − α_F)/d²) I + α_F |Ψ⁺⟩⟨Ψ⁺|`, with `⟨Ψ⁺|ρ_F|Ψ⁺⟩ = F`.
pub fn isotropic_state(d: usize, fidelity: f64) -> Result<DensityOperator> {
    check_dim(d)?;
    check_range("F", fidelity, 0.0, 1.0)?;
    let d2 = (d * d) as f64;
    // Written as ((1 − F)/(d² − 1))(I − P) + F P to keep F = 1 exactly pure.
    let noise = (1.0 - fidelity) / (d2 - 1.0);
    let dfd = 1.0 / d as f64;
    let mut m = ComplexMatrix::identity(d * d).scale(noise);
    for i in 0..d {
        for j in 0..d {
            m[(i * d + i, j * d + j)] += Complex::new((fidelity - noise) * dfd, 0.0);
        }
    }
    DensityOperator::new(m, d, d)
}

/// Bell basis of `C² ⊗ C²` in the phase convention
/// `Ψ₀ = (|00⟩+|11⟩)/√2`, `Ψ₁ = i(|01⟩+|10⟩)/√2`, `Ψ₂ = (|10⟩−|01⟩)/√2`,
/// `Ψ₃ = i(|00⟩−|11⟩)/√2`.
pub fn bell_basis() -> [PureState; 4] {
    let h = FRAC_1_SQRT_2;
    let r = Complex::new(h, 0.0);
    let i = Complex::new(0.0, h);
    let mk = |amplitudes: [Complex; 4]| PureState {
        dim_a: 2,
        dim_b: 2,
        amplitudes: amplitudes.to_vec(),
    };
    [
        mk([r, ZERO, ZERO, r]),
        mk([ZERO, i, i, ZERO]),
        mk([ZERO, -r, r, ZERO]),
        mk([i, ZERO, ZERO, -i]),
    ]
}

/// `Σ_i λ_i |Ψ_i⟩⟨Ψ_i|`
pub fn bell_diagonal_state(spectrum: &BellSpectrum) -> Result<DensityOperator> {
    let mut m = ComplexMatrix::zeros(4, 4);
    for (psi, &l) in bell_basis().iter().zip(spectrum.lambda.iter()) {
        m = &m + &ComplexMatrix::outer(&psi.amplitudes, &psi.amplitudes).scale(l);
    }
    DensityOperator::new(m, 2, 2)
}

/// `p |00⟩⟨00| + (1 − p) |Φ⟩⟨Φ|` with `Φ = (|01⟩ + |10⟩)/√2`.
pub fn qubit_family(p: f64) -> Result<DensityOperator> {
    check_range("p", p, 0.0, 1.0)?;
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = Complex::new(p, 0.0);
    let half = Complex::new((1.0 - p) / 2.0, 0.0);
    for &(i, j) in &[(1, 1), (1, 2), (2, 1), (2, 2)] {
        m[(i, j)] = half;
    }
    DensityOperator::new(m, 2, 2)
}

/// Two-qutrit family `(2/7)|Ψ⁺⟩⟨Ψ⁺| + (α/7)σ₊ + ((5−α)/7)σ₋`, `2 ≤ α ≤ 5`,
/// with `σ₊ = (|01⟩⟨01| + |12⟩⟨12| + |20⟩⟨20|)/3` and σ₋ its mirror image.
pub fn qutrit_family(alpha: f64) -> Result<DensityOperator> {
    check_range("alpha", alpha, 2.0, 5.0)?;
    let mut m = ComplexMatrix::zeros(9, 9);
    let ent = Complex::new(2.0 / 21.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            m[(i * 3 + i, j * 3 + j)] = ent;
        }
    }
    let plus = alpha / 21.0;
    let minus = (5.0 - alpha) / 21.0;
    for i in 0..3 {
        let up = i * 3 + (i + 1) % 3;
        let down = ((i + 1) % 3) * 3 + i;
        m[(up, up)] += Complex::new(plus, 0.0);
        m[(down, down)] += Complex::new(minus, 0.0);
    }
    DensityOperator::new(m, 3, 3)
}

/// `Σ_i √p_i |i⟩ ⊗ |i⟩` in the canonical bases.
pub fn pure_from_schmidt(p: &[f64], dim_a: usize, dim_b: usize) -> Result<PureState> {
    if p.is_empty() || p.len() > dim_a.min(dim_b) {
        return Err(Error::Domain(format!(
            "{} Schmidt coefficients do not fit dims ({dim_a}, {dim_b})",
            p.len()
        )));
    }
    if p.iter().any(|&x| !x.is_finite() || x < 0.0) {
        return Err(Error::Domain(
            "Schmidt coefficients must be nonnegative".into(),
        ));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "Schmidt coefficients sum to {sum}, not 1"
        )));
    }
    let mut amplitudes = vec![ZERO; dim_a * dim_b];
    for (i, &pi) in p.iter().enumerate() {
        amplitudes[i * dim_b + i] = Complex::new(pi.sqrt(), 0.0);
    }
    PureState::normalized(amplitudes, dim_a, dim_b)
}

/// Schmidt decomposition from the SVD `c = U Σ V†` of the coefficient
/// matrix: `ψ = Σ σ_k u_k ⊗ conj(v_k)`.
pub fn schmidt_decompose(psi: &PureState) -> SchmidtForm {
    let dec = svd(&psi.coefficient_matrix());
    let k = dec.s.len();
    SchmidtForm {
        coefficients: dec.s.iter().map(|s| s * s).collect(),
        left_basis: (0..k).map(|t| dec.u.column(t)).collect(),
        right_basis: (0..k)
            .map(|t| dec.v.column(t).iter().map(|z| z.conj()).collect())
            .collect(),
    }
}

fn require_symmetric_cut(rho: &DensityOperator) -> Result<usize> {
    if rho.dim_a != rho.dim_b {
        return Err(Error::Shape(format!(
            "twirl needs equal local dimensions, got ({}, {})",
            rho.dim_a, rho.dim_b
        )));
    }
    Ok(rho.dim_a)
}

/// Projection onto the `U ⊗ U`-invariant states: the Werner state with the
/// same `tr(σ 𝔽)`.
pub fn twirl_uu(sigma: &DensityOperator) -> Result<DensityOperator> {
    let d = require_symmetric_cut(sigma)?;
    werner_state(d, swap_expectation(sigma).clamp(-1.0, 1.0))
}

/// Projection onto the `U ⊗ Ū`-invariant states: the isotropic state with
/// the same fidelity `⟨Ψ⁺|σ|Ψ⁺⟩`.
pub fn twirl_uubar(sigma: &DensityOperator) -> Result<DensityOperator> {
    let d = require_symmetric_cut(sigma)?;
    isotropic_state(d, max_entangled_fidelity(sigma).clamp(0.0, 1.0))
}

/// `tr(σ 𝔽)` on a symmetric cut.
pub fn swap_expectation(sigma: &DensityOperator) -> f64 {
    let d = sigma.dim_a;
    let m = &sigma.matrix;
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            acc += m[(j * d + i, i * d + j)].re;
        }
    }
    acc
}

/// `⟨Ψ⁺|σ|Ψ⁺⟩` on a symmetric cut.
pub fn max_entangled_fidelity(sigma: &DensityOperator) -> f64 {
    let d = sigma.dim_a;
    let m = &sigma.matrix;
    let mut acc = 0.0;
    for i in 0..d {
        for j in 0..d {
            acc += m[(i * d + i, j * d + j)].re;
        }
    }
    acc / d as f64
}

/// `tr_A`: `(tr_A ρ)[k, l] = Σ_i ρ[(i,k), (i,l)]`.
pub fn partial_trace_a(rho: &DensityOperator) -> ComplexMatrix {
    partial_trace_a_matrix(&rho.matrix, rho.dim_a, rho.dim_b)
}

/// `tr_B`: `(tr_B ρ)[i, j] = Σ_k ρ[(i,k), (j,k)]`.
pub fn partial_trace_b(rho: &DensityOperator) -> ComplexMatrix {
    partial_trace_b_matrix(&rho.matrix, rho.dim_a, rho.dim_b)
}

pub(crate) fn partial_trace_a_matrix(m: &ComplexMatrix, da: usize, db: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(db, db, |k, l| {
        (0..da).map(|i| m[(i * db + k, i * db + l)]).sum()
    })
}

pub(crate) fn partial_trace_b_matrix(m: &ComplexMatrix, da: usize, db: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(da, da, |i, j| {
        (0..db).map(|k| m[(i * db + k, j * db + k)]).sum()
    })
}

/// Haar-random pure state, deterministic in `seed`.
pub fn random_pure(dim_a: usize, dim_b: usize, seed: u64) -> Result<PureState> {
    let mut rng = seeded_rng(seed);
    PureState::normalized(gaussian_vector(&mut rng, dim_a * dim_b), dim_a, dim_b)
}

/// Random density operator of the given rank: normalized sum of `rank`
/// Gaussian rank-one projectors.
pub fn random_density(
    dim_a: usize,
    dim_b: usize,
    rank: usize,
    seed: u64,
) -> Result<DensityOperator> {
    let n = dim_a * dim_b;
    if rank == 0 || rank > n {
        return Err(Error::Domain(format!("rank {rank} outside 1..={n}")));
    }
    let mut rng = seeded_rng(seed);
    let mut acc = ComplexMatrix::zeros(n, n);
    for _ in 0..rank {
        let g = gaussian_vector(&mut rng, n);
        acc = &acc + &ComplexMatrix::outer(&g, &g);
    }
    let tr = acc.trace()?.re;
    DensityOperator::new(acc.scale(1.0 / tr), dim_a, dim_b)
}

/// Random separable state: a convex mixture of `terms` random pure product
/// states with random weights.
pub fn random_separable(
    dim_a: usize,
    dim_b: usize,
    terms: usize,
    seed: u64,
) -> Result<DensityOperator> {
    if terms == 0 {
        return Err(Error::Domain("need at least one product term".into()));
    }
    let mut rng = seeded_rng(seed);
    let n = dim_a * dim_b;
    let mut acc = ComplexMatrix::zeros(n, n);
    let mut total = 0.0;
    for _ in 0..terms {
        let a = normalize(gaussian_vector(&mut rng, dim_a));
        let b = normalize(gaussian_vector(&mut rng, dim_b));
        let w: f64 = rand::Rng::random::<f64>(&mut rng) + 1e-3;
        total += w;
        let ab = kron_vec(&a, &b);
        acc = &acc + &ComplexMatrix::outer(&ab, &ab).scale(w);
    }
    DensityOperator::new(acc.scale(1.0 / total), dim_a, dim_b)
}

/// Local unitary pair `(U, V)` drawn from Haar measure.
pub fn random_local_unitaries(
    dim_a: usize,
    dim_b: usize,
    seed: u64,
) -> (ComplexMatrix, ComplexMatrix) {
    let mut rng = seeded_rng(seed);
    (
        random_unitary(&mut rng, dim_a),
        random_unitary(&mut rng, dim_b),
    )
}

fn normalize(mut v: ComplexVector) -> ComplexVector {
    let n = vec_norm(&v);
    v.iter_mut().for_each(|z| *z /= n);
    v
}

/// Overlap `⟨u|v⟩` of two pure states.
pub fn overlap(u: &PureState, v: &PureState) -> Complex {
    inner(&u.amplitudes, &v.amplitudes)
}
