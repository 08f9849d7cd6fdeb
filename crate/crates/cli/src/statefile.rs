//! JSON state files.
//!
//! ```json
//! {"kind": "density", "dims": [2, 2],
//!  "matrix": [[[0.5, 0], [0, 0], [0, 0], [0.5, 0]], ...],
//!  "family": {"kind": "werner", "d": 2, "f": -1}}
//! ```
//!
//! Entries are `[re, im]` pairs. Pure states store a flat list or a single
//! column. `family` is optional metadata; when present it must reproduce the
//! stored matrix.

use std::fs;
use std::path::Path;

use ccnr_core::family::Family;
use ccnr_core::linalg::{Complex, ComplexMatrix};
use ccnr_core::states::{BellSpectrum, DensityOperator, PureState, Tolerances};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Largest `dim_a · dim_b` accepted from a file.
pub const MAX_TOTAL_DIM: usize = 4096;

/// Stored matrix must match its family descriptor this closely.
pub const FAMILY_MATCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Density,
    Pure,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entries {
    Flat(Vec<[f64; 2]>),
    Rows(Vec<Vec<[f64; 2]>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FamilySpec {
    Werner { d: usize, f: f64 },
    Isotropic { d: usize, fidelity: f64 },
    Bell { lambda: [f64; 4] },
    Qubit { p: f64 },
    Qutrit { alpha: f64 },
}

impl FamilySpec {
    pub fn to_family(self) -> Result<Family> {
        Ok(match self {
            FamilySpec::Werner { d, f } => Family::Werner { d, f },
            FamilySpec::Isotropic { d, fidelity } => Family::Isotropic { d, fidelity },
            FamilySpec::Bell { lambda } => Family::BellDiagonal(BellSpectrum::new(lambda)?),
            FamilySpec::Qubit { p } => Family::Qubit { p },
            FamilySpec::Qutrit { alpha } => Family::Qutrit { alpha },
        })
    }

    pub fn from_family(f: &Family) -> Self {
        match *f {
            Family::Werner { d, f } => FamilySpec::Werner { d, f },
            Family::Isotropic { d, fidelity } => FamilySpec::Isotropic { d, fidelity },
            Family::BellDiagonal(s) => FamilySpec::Bell { lambda: s.lambda() },
            Family::Qubit { p } => FamilySpec::Qubit { p },
            Family::Qutrit { alpha } => FamilySpec::Qutrit { alpha },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 2]>,
    pub matrix: Entries,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Clone)]
pub enum Loaded {
    Density {
        rho: DensityOperator,
        family: Option<Family>,
    },
    Pure(PureState),
}

impl Loaded {
    /// The density operator, taking the projector of a pure state.
    pub fn density(&self) -> DensityOperator {
        match self {
            Loaded::Density { rho, .. } => rho.clone(),
            Loaded::Pure(psi) => psi.projector(),
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match self {
            Loaded::Density { family, .. } => family.as_ref(),
            Loaded::Pure(_) => None,
        }
    }
}

fn pair(z: [f64; 2]) -> Result<Complex> {
    if z.iter().all(|x| x.is_finite()) {
        Ok(Complex::new(z[0], z[1]))
    } else {
        Err(CliError::input("matrix entries must be finite"))
    }
}

fn total_dim(dims: [usize; 2]) -> Result<usize> {
    let [a, b] = dims;
    match a.checked_mul(b) {
        Some(n) if a >= 1 && b >= 1 && n <= MAX_TOTAL_DIM => Ok(n),
        _ => Err(CliError::input(format!(
            "dims {a},{b} outside the supported range (each >= 1, product <= {MAX_TOTAL_DIM})"
        ))),
    }
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| CliError::input(format!("malformed state file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("state files always serialize");
        s.push('\n');
        s
    }

    pub fn from_density(rho: &DensityOperator, family: Option<&Family>) -> Self {
        let m = rho.matrix();
        let rows = (0..m.rows())
            .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        let (a, b) = rho.dims();
        StateFile {
            kind: Kind::Density,
            dims: Some([a, b]),
            matrix: Entries::Rows(rows),
            family: family.map(FamilySpec::from_family),
        }
    }

    pub fn from_pure(psi: &PureState) -> Self {
        let (a, b) = psi.dims();
        StateFile {
            kind: Kind::Pure,
            dims: Some([a, b]),
            matrix: Entries::Flat(psi.amplitudes().iter().map(|z| [z.re, z.im]).collect()),
            family: None,
        }
    }

    /// Validates the file into a state. `dims_override` replaces the stored
    /// dims, which may then be absent.
    pub fn load(self, dims_override: Option<[usize; 2]>, tol: Tolerances) -> Result<Loaded> {
        let dims = dims_override
            .or(self.dims)
            .ok_or_else(|| CliError::input("state file has no dims and none were given"))?;
        let n = total_dim(dims)?;
        let [da, db] = dims;
        match self.kind {
            Kind::Pure => {
                if self.family.is_some() {
                    return Err(CliError::input(
                        "family metadata applies to density files only",
                    ));
                }
                let amps = match self.matrix {
                    Entries::Flat(v) => v,
                    Entries::Rows(rows) if rows.iter().all(|r| r.len() == 1) => {
                        rows.into_iter().map(|r| r[0]).collect()
                    }
                    Entries::Rows(_) => {
                        return Err(CliError::input(
                            "pure state matrix must be a flat list or a single column",
                        ))
                    }
                };
                if amps.len() != n {
                    return Err(CliError::input(format!(
                        "pure state has {} amplitudes, dims {da},{db} need {n}",
                        amps.len()
                    )));
                }
                let amps = amps.into_iter().map(pair).collect::<Result<Vec<_>>>()?;
                Ok(Loaded::Pure(PureState::new(amps, da, db)?))
            }
            Kind::Density => {
                let Entries::Rows(rows) = self.matrix else {
                    return Err(CliError::input("density matrix must be a list of rows"));
                };
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::input(format!(
                        "density matrix must be {n}x{n} for dims {da},{db}"
                    )));
                }
                let data = rows
                    .into_iter()
                    .flatten()
                    .map(pair)
                    .collect::<Result<Vec<_>>>()?;
                let m = ComplexMatrix::new(n, n, data)?;
                let rho = DensityOperator::with_tolerances(m, da, db, tol)?;
                let family = self.family.map(|f| check_family(f, &rho)).transpose()?;
                Ok(Loaded::Density { rho, family })
            }
        }
    }
}

fn check_family(spec: FamilySpec, rho: &DensityOperator) -> Result<Family> {
    let family = spec.to_family()?;
    if family.dims() != rho.dims() {
        return Err(CliError::input(format!(
            "{} family has dims {:?}, matrix has {:?}",
            family.name(),
            family.dims(),
            rho.dims()
        )));
    }
    let expected = family.state()?;
    let residual = expected.matrix().max_abs_diff(rho.matrix());
    if residual > FAMILY_MATCH_TOL {
        return Err(CliError::Invariant {
            name: format!("matrix matches {} family metadata", family.name()),
            residual,
            tolerance: FAMILY_MATCH_TOL,
        });
    }
    Ok(family)
}
