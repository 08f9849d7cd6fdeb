//! Parameter sweeps over the closed-form families.

use std::str::FromStr;

use ccnr_core::criteria::full_report;
use ccnr_core::family::Family;
use ccnr_core::states::BellSpectrum;
use clap::ValueEnum;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::format::{num, opt};

pub const HEADER: &str =
    "param,tau_numeric,tau_closed,gamma_closed,ppt_floor,reduction_floor,verdict";

/// Upper bound on grid points per sweep.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFamily {
    /// Werner states, parameter f = tr(ρ F) in [-1, 1]
    Werner,
    /// Isotropic states, parameter F (fidelity) in [0, 1]
    Isotropic,
    /// Bell-diagonal states with spectrum (p, (1-p)/3, (1-p)/3, (1-p)/3)
    Bell,
    /// p|00><00| + (1-p)|Φ><Φ| on two qubits, p in [0, 1]
    Qubit,
    /// Two-qutrit family, alpha in [2, 5]
    Qutrit,
}

impl SweepFamily {
    /// Local dimension fixed by the family, if any.
    pub fn fixed_dim(self) -> Option<usize> {
        match self {
            SweepFamily::Werner | SweepFamily::Isotropic => None,
            SweepFamily::Bell | SweepFamily::Qubit => Some(2),
            SweepFamily::Qutrit => Some(3),
        }
    }

    pub fn at(self, d: usize, x: f64) -> Result<Family> {
        Ok(match self {
            SweepFamily::Werner => Family::Werner { d, f: x },
            SweepFamily::Isotropic => Family::Isotropic { d, fidelity: x },
            SweepFamily::Bell => Family::BellDiagonal(BellSpectrum::werner_line(x)?),
            SweepFamily::Qubit => Family::Qubit { p: x },
            SweepFamily::Qutrit => Family::Qutrit { alpha: x },
        })
    }
}

/// `start:stop:step` with `step > 0` and `start <= stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(format!("expected start:stop:step, got `{s}`"));
        };
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("`{t}` is not a finite number"))
        };
        let r = Range {
            start: parse(start)?,
            stop: parse(stop)?,
            step: parse(step)?,
        };
        if r.step <= 0.0 {
            return Err("step must be positive".into());
        }
        if r.stop < r.start {
            return Err("stop must not be below start".into());
        }
        if (r.stop - r.start) / r.step >= MAX_POINTS as f64 {
            return Err(format!("range has more than {MAX_POINTS} points"));
        }
        Ok(r)
    }
}

impl Range {
    /// Grid points `start + k·step` up to `stop`, snapped to a decimal grid
    /// six digits finer than `step` so that `-1 + 40·0.05` lands on `1`.
    pub fn points(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        let n = (span / self.step * (1.0 + 1e-12) + 1e-9).floor() as usize;
        let scale = 10f64.powi(6 - self.step.log10().floor() as i32);
        (0..=n)
            .map(|k| {
                let x = self.start + k as f64 * self.step;
                let snapped = if scale.is_finite() && scale <= 1e22 {
                    (x * scale).round() / scale
                } else {
                    x
                };
                snapped.clamp(self.start, self.stop)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub tau_numeric: f64,
    pub tau_closed: Option<f64>,
    pub gamma_closed: Option<f64>,
    pub ppt_floor: f64,
    pub reduction_floor: f64,
    pub verdict: String,
}

impl SweepRow {
    pub fn csv(&self) -> String {
        [
            num(self.param),
            num(self.tau_numeric),
            opt(self.tau_closed),
            opt(self.gamma_closed),
            num(self.ppt_floor),
            num(self.reduction_floor),
            self.verdict.clone(),
        ]
        .join(",")
    }
}

fn row(param: f64, family: &Family) -> Result<SweepRow> {
    let rho = family.state()?;
    let report = full_report(&rho, Some(family))?;
    Ok(SweepRow {
        param,
        tau_numeric: report.tau,
        tau_closed: Some(family.tau_closed()?),
        gamma_closed: report.gamma_closed.map(|g| g.value),
        ppt_floor: report.ppt_floor,
        reduction_floor: report.reduction_floor,
        verdict: report.verdict.to_string(),
    })
}

/// Evaluates every grid point (in parallel) and returns rows in grid order.
pub fn run(family: SweepFamily, d: Option<usize>, range: &Range) -> Result<Vec<SweepRow>> {
    let d = match (family.fixed_dim(), d) {
        (Some(fixed), Some(d)) if d != fixed => {
            return Err(CliError::input(format!(
                "{family:?} states are fixed to d = {fixed}, got --d {d}"
            )))
        }
        (Some(fixed), _) => fixed,
        (None, Some(d)) => d,
        (None, None) => 2,
    };
    if d > 16 {
        return Err(CliError::input(format!(
            "--d {d} exceeds the supported maximum 16"
        )));
    }
    let points: Vec<(f64, Family)> = range
        .points()
        .into_iter()
        .map(|x| Ok((x, family.at(d, x)?)))
        .collect::<Result<_>>()?;
    // Parameters are validated up front so that a bad range fails before work starts.
    for (_, fam) in &points {
        fam.tau_closed()?;
    }
    points.par_iter().map(|(x, fam)| row(*x, fam)).collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
