use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use ccnr_core::criteria::{full_report, CriteriaReport};
use ccnr_core::crossnorm::{gamma_pure, robustness_pure_exact};
use ccnr_core::family::Family;
use ccnr_core::realign::{operator_schmidt, violates_ccnr};
use ccnr_core::states::{
    pure_from_schmidt, random_density, random_pure, schmidt_decompose, BellSpectrum, Tolerances,
};
use serde::Serialize;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::format::num;
use crate::statefile::{Loaded, StateFile, MAX_TOTAL_DIM};
use crate::sweep::{self, Range, SweepFamily};
use crate::GenFamily;

/// Coefficients at or below this are dropped from printed spectra.
const PRINT_FLOOR: f64 = 1e-14;

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn load(path: &Path, dims: Option<[usize; 2]>, tol: Tolerances) -> Result<Loaded> {
    StateFile::read(path)?.load(dims, tol)
}

#[derive(Serialize)]
struct GammaJson {
    value: f64,
    family: String,
}

#[derive(Serialize)]
struct ReportJson {
    dims: [usize; 2],
    tau: f64,
    tau_violated: bool,
    ppt_floor: f64,
    ppt_violated: bool,
    reduction_floor: f64,
    reduction_violated: bool,
    gamma_closed: Option<GammaJson>,
    verdict: String,
}

fn render_report(dims: (usize, usize), r: &CriteriaReport, json: bool) -> String {
    if json {
        let body = ReportJson {
            dims: [dims.0, dims.1],
            tau: r.tau,
            tau_violated: r.tau_violated,
            ppt_floor: r.ppt_floor,
            ppt_violated: r.ppt_violated,
            reduction_floor: r.reduction_floor,
            reduction_violated: r.reduction_violated,
            gamma_closed: r.gamma_closed.map(|g| GammaJson {
                value: g.value,
                family: g.family.to_string(),
            }),
            verdict: r.verdict.to_string(),
        };
        return serde_json::to_string(&body).expect("report serializes") + "\n";
    }
    let gamma = match &r.gamma_closed {
        Some(g) => format!("{} ({})", num(g.value), g.family),
        None => "-".into(),
    };
    let mut s = String::new();
    let lines = [
        ("dims", format!("{},{}", dims.0, dims.1)),
        ("tau", num(r.tau)),
        ("tau_violated", r.tau_violated.to_string()),
        ("ppt_floor", num(r.ppt_floor)),
        ("ppt_violated", r.ppt_violated.to_string()),
        ("reduction_floor", num(r.reduction_floor)),
        ("reduction_violated", r.reduction_violated.to_string()),
        ("gamma_closed", gamma),
        ("verdict", r.verdict.to_string()),
    ];
    for (k, v) in lines {
        let _ = writeln!(s, "{k:<19}{v}");
    }
    s
}

pub fn check(path: &Path, dims: Option<[usize; 2]>, tol: Tolerances, json: bool) -> Result<()> {
    let loaded = load(path, dims, tol)?;
    let rho = loaded.density();
    let report = full_report(&rho, loaded.family())?;
    emit(None, &render_report(rho.dims(), &report, json))
}

pub fn sweep(
    family: SweepFamily,
    d: Option<usize>,
    range: &Range,
    out: Option<&Path>,
) -> Result<()> {
    let rows = sweep::run(family, d, range)?;
    emit(out, &sweep::to_csv(&rows))
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

pub fn schmidt(path: &Path, dims: Option<[usize; 2]>, tol: Tolerances, json: bool) -> Result<()> {
    let psi = match load(path, dims, tol)? {
        Loaded::Pure(psi) => psi,
        Loaded::Density { .. } => {
            return Err(CliError::input(
                "schmidt needs a pure-state file (kind \"pure\")",
            ))
        }
    };
    let form = schmidt_decompose(&psi);
    let p: Vec<f64> = form
        .coefficients
        .iter()
        .copied()
        .filter(|&x| x > PRINT_FLOOR)
        .collect();
    let gamma = gamma_pure(&psi).value;
    let robustness = robustness_pure_exact(&psi);
    let text = if json {
        json!({"schmidt_coefficients": p, "gamma": gamma, "robustness": robustness}).to_string()
            + "\n"
    } else {
        format!(
            "schmidt_coefficients {}\ngamma                {}\nrobustness           {}\n",
            list(&p),
            num(gamma),
            num(robustness)
        )
    };
    emit(None, &text)
}

pub fn oschmidt(path: &Path, dims: Option<[usize; 2]>, tol: Tolerances, json: bool) -> Result<()> {
    let rho = load(path, dims, tol)?.density();
    let os = operator_schmidt(&rho);
    let lambda: Vec<f64> = os
        .coefficients
        .iter()
        .copied()
        .filter(|&x| x > PRINT_FLOOR)
        .collect();
    let sum = os.sum();
    let violated = violates_ccnr(sum);
    let text = if json {
        json!({"coefficients": lambda, "sum": sum, "tau_violated": violated}).to_string() + "\n"
    } else {
        let verdict = if violated {
            "violated (entangled)"
        } else {
            "satisfied"
        };
        format!(
            "coefficients {}\nsum          {}\ncriterion    {}\n",
            list(&lambda),
            num(sum),
            verdict
        )
    };
    emit(None, &text)
}

pub struct GenRequest<'a> {
    pub family: GenFamily,
    pub params: Option<&'a str>,
    pub d: Option<usize>,
    pub dims: Option<[usize; 2]>,
    pub rank: Option<usize>,
    pub seed: u64,
    pub out: Option<&'a Path>,
}

fn numbers(params: Option<&str>) -> Result<Vec<f64>> {
    let s = params.ok_or_else(|| CliError::input("missing family parameters"))?;
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::input(format!("`{t}` is not a finite number")))
        })
        .collect()
}

fn scalar(params: Option<&str>) -> Result<f64> {
    match numbers(params)?[..] {
        [x] => Ok(x),
        _ => Err(CliError::input("expected a single parameter")),
    }
}

fn no_params(req: &GenRequest) -> Result<()> {
    match req.params {
        Some(p) => Err(CliError::input(format!(
            "{:?} takes no parameters, got `{p}`",
            req.family
        ))),
        None => Ok(()),
    }
}

fn gen_dims(req: &GenRequest, default: Option<[usize; 2]>) -> Result<[usize; 2]> {
    let dims = match (req.dims, req.d) {
        (Some(_), Some(_)) => return Err(CliError::input("give either --d or --dims, not both")),
        (Some(dims), None) => dims,
        (None, Some(d)) => [d, d],
        (None, None) => default.ok_or_else(|| CliError::input("--dims is required"))?,
    };
    match dims[0].checked_mul(dims[1]) {
        Some(n) if n <= MAX_TOTAL_DIM && dims[0] >= 1 && dims[1] >= 1 => Ok(dims),
        _ => Err(CliError::input(format!(
            "dims {},{} too large",
            dims[0], dims[1]
        ))),
    }
}

fn local_dim(req: &GenRequest) -> Result<usize> {
    if req.dims.is_some() {
        return Err(CliError::input("use --d for werner and isotropic states"));
    }
    let d = req.d.unwrap_or(2);
    if d > 64 {
        return Err(CliError::input(format!(
            "--d {d} exceeds the supported maximum 64"
        )));
    }
    Ok(d)
}

fn fixed_dims(req: &GenRequest, d: usize) -> Result<()> {
    let ok = req.d.is_none_or(|x| x == d) && req.dims.is_none_or(|x| x == [d, d]);
    if ok {
        Ok(())
    } else {
        Err(CliError::input(format!(
            "{:?} states live on {d}x{d}",
            req.family
        )))
    }
}

pub fn gen(req: &GenRequest) -> Result<()> {
    if req.rank.is_some() && req.family != GenFamily::Random {
        return Err(CliError::input("--rank applies to random states only"));
    }
    let family = match req.family {
        GenFamily::Werner => Some(Family::Werner {
            d: local_dim(req)?,
            f: scalar(req.params)?,
        }),
        GenFamily::Isotropic => Some(Family::Isotropic {
            d: local_dim(req)?,
            fidelity: scalar(req.params)?,
        }),
        GenFamily::Bell => {
            fixed_dims(req, 2)?;
            let v = numbers(req.params)?;
            let lambda: [f64; 4] = v
                .try_into()
                .map_err(|_| CliError::input("bell needs four weights l0,l1,l2,l3"))?;
            Some(Family::BellDiagonal(BellSpectrum::new(lambda)?))
        }
        GenFamily::Qubit => {
            fixed_dims(req, 2)?;
            Some(Family::Qubit {
                p: scalar(req.params)?,
            })
        }
        GenFamily::Qutrit => {
            fixed_dims(req, 3)?;
            Some(Family::Qutrit {
                alpha: scalar(req.params)?,
            })
        }
        GenFamily::Schmidt | GenFamily::Random | GenFamily::RandomPure => None,
    };
    let file = match (family, req.family) {
        (Some(fam), _) => StateFile::from_density(&fam.state()?, Some(&fam)),
        (None, GenFamily::Schmidt) => {
            let p = numbers(req.params)?;
            let n = p.len();
            let [a, b] = gen_dims(req, Some([n, n]))?;
            StateFile::from_pure(&pure_from_schmidt(&p, a, b)?)
        }
        (None, GenFamily::Random) => {
            no_params(req)?;
            let [a, b] = gen_dims(req, None)?;
            let rank = req.rank.unwrap_or(a * b);
            StateFile::from_density(&random_density(a, b, rank, req.seed)?, None)
        }
        (None, _) => {
            no_params(req)?;
            let [a, b] = gen_dims(req, None)?;
            StateFile::from_pure(&random_pure(a, b, req.seed)?)
        }
    };
    emit(req.out, &file.to_json())
}
